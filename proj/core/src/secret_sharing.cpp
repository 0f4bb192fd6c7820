#include "sdc/secret_sharing.hpp"

#include <sstream>

#include "sdc/errors.hpp"

namespace sdc::ss {

namespace {

using gf::FieldSpec;

// Gaussian elimination rank of a dense raw-value matrix.
int rank_of(std::vector<uint64_t> m, int rows, int cols, const FieldSpec& spec) {
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (m[r * cols + c] != 0) { pivot = r; break; }
        if (pivot < 0) continue;
        for (int j = 0; j < cols; ++j)
            std::swap(m[rank * cols + j], m[pivot * cols + j]);
        const uint64_t inv = gf::inv_raw(m[rank * cols + c], spec);
        for (int j = 0; j < cols; ++j)
            m[rank * cols + j] = gf::mul_raw(m[rank * cols + j], inv, spec);
        for (int r = 0; r < rows; ++r) {
            if (r == rank || m[r * cols + c] == 0) continue;
            const uint64_t factor = m[r * cols + c];
            for (int j = 0; j < cols; ++j)
                m[r * cols + j] ^= gf::mul_raw(factor, m[rank * cols + j], spec);
        }
        ++rank;
    }
    return rank;
}

std::vector<std::vector<int>> subsets_of(int n, int r) {
    std::vector<std::vector<int>> out;
    if (r < 0 || r > n) return out;
    std::vector<int> cur(r);
    for (int i = 0; i < r; ++i) cur[i] = i;
    while (true) {
        out.push_back(cur);
        int i = r - 1;
        while (i >= 0 && cur[i] == n - r + i) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < r; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

} // namespace

CauchyMatrix CauchyMatrix::build(int F, const gf::FieldSpec& spec) {
    if (F < 1) throw ConfigError("build_cauchy: F must be positive");
    if (2 * static_cast<uint64_t>(F) > spec.order())
        throw ConfigError("build_cauchy: need 2F <= 2^z distinct points, F=" +
                          std::to_string(F) + " exceeds GF(2^" +
                          std::to_string(spec.z) + ")");
    CauchyMatrix D;
    D.F_ = F;
    D.spec_ = spec;
    D.constructed_ = true;
    D.entries_.resize(static_cast<size_t>(F) * F);
    for (int i = 0; i < F; ++i) {
        const uint64_t x = static_cast<uint64_t>(i);
        for (int j = 0; j < F; ++j) {
            const uint64_t y = static_cast<uint64_t>(F + j);
            D.entries_[i * F + j] = gf::inv_raw(x ^ y, spec);
        }
    }
    return D;
}

CauchyMatrix CauchyMatrix::ingest(const std::vector<std::vector<uint64_t>>& values,
                                  const gf::FieldSpec& spec) {
    const int F = static_cast<int>(values.size());
    if (F < 1) throw ValidationError("ingest: empty matrix");
    CauchyMatrix D;
    D.F_ = F;
    D.spec_ = spec;
    D.constructed_ = false;
    D.entries_.reserve(static_cast<size_t>(F) * F);
    for (const auto& row : values) {
        if (static_cast<int>(row.size()) != F)
            throw ValidationError("ingest: matrix is not square");
        for (uint64_t v : row) {
            if (v >= spec.order())
                throw ValidationError("ingest: entry out of field range");
            D.entries_.push_back(v);
        }
    }
    if (rank_of(D.entries_, F, F, spec) != F)
        throw ValidationError("ingest: matrix is singular");
    if (!all_submatrices_full_rank(D))
        throw ValidationError("ingest: matrix is secrecy-unsafe, a square submatrix "
                              "is rank deficient");
    return D;
}

CauchyMatrix CauchyMatrix::unaudited(const std::vector<std::vector<uint64_t>>& values,
                                     const gf::FieldSpec& spec) {
    const int F = static_cast<int>(values.size());
    if (F < 1) throw ValidationError("unaudited: empty matrix");
    CauchyMatrix D;
    D.F_ = F;
    D.spec_ = spec;
    D.constructed_ = false;
    for (const auto& row : values) {
        if (static_cast<int>(row.size()) != F)
            throw ValidationError("unaudited: matrix is not square");
        for (uint64_t v : row) {
            if (v >= spec.order())
                throw ValidationError("unaudited: entry out of field range");
            D.entries_.push_back(v);
        }
    }
    return D;
}

CauchyMatrix CauchyMatrix::inverse() const {
    const int F = F_;
    // [D | I] elimination.
    std::vector<uint64_t> m(static_cast<size_t>(F) * 2 * F, 0);
    for (int i = 0; i < F; ++i) {
        for (int j = 0; j < F; ++j) m[i * 2 * F + j] = at(i, j);
        m[i * 2 * F + F + i] = 1;
    }
    for (int c = 0; c < F; ++c) {
        int pivot = -1;
        for (int r = c; r < F; ++r)
            if (m[r * 2 * F + c] != 0) { pivot = r; break; }
        if (pivot < 0) throw ProtocolError("inverse: matrix is singular");
        for (int j = 0; j < 2 * F; ++j)
            std::swap(m[c * 2 * F + j], m[pivot * 2 * F + j]);
        const uint64_t inv = gf::inv_raw(m[c * 2 * F + c], spec_);
        for (int j = 0; j < 2 * F; ++j)
            m[c * 2 * F + j] = gf::mul_raw(m[c * 2 * F + j], inv, spec_);
        for (int r = 0; r < F; ++r) {
            if (r == c || m[r * 2 * F + c] == 0) continue;
            const uint64_t factor = m[r * 2 * F + c];
            for (int j = 0; j < 2 * F; ++j)
                m[r * 2 * F + j] ^= gf::mul_raw(factor, m[c * 2 * F + j], spec_);
        }
    }
    CauchyMatrix R;
    R.F_ = F;
    R.spec_ = spec_;
    R.constructed_ = false;
    R.entries_.resize(static_cast<size_t>(F) * F);
    for (int i = 0; i < F; ++i)
        for (int j = 0; j < F; ++j) R.entries_[i * F + j] = m[i * 2 * F + F + j];
    return R;
}

CauchyMatrix CauchyMatrix::parse(const std::string& text, const gf::FieldSpec& spec) {
    std::vector<std::vector<uint64_t>> values;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line[0] == '#') continue;
        std::istringstream row(line);
        std::vector<uint64_t> vals;
        std::string tok;
        while (row >> tok) {
            try {
                size_t used = 0;
                const long long v = std::stoll(tok, &used);
                if (used != tok.size() || v < 0) throw std::invalid_argument(tok);
                vals.push_back(static_cast<uint64_t>(v));
            } catch (const std::exception&) {
                throw ParseError("invalid matrix entry '" + tok + "'");
            }
        }
        if (!vals.empty()) values.push_back(std::move(vals));
    }
    if (values.empty()) throw ParseError("no matrix rows found");
    return ingest(values, spec);
}

std::string CauchyMatrix::serialize() const {
    std::ostringstream os;
    for (int i = 0; i < F_; ++i) {
        for (int j = 0; j < F_; ++j) {
            if (j) os << ' ';
            os << at(i, j);
        }
        os << '\n';
    }
    return os.str();
}

int submatrix_rank(const CauchyMatrix& D, const std::vector<int>& rows,
                   const std::vector<int>& cols) {
    std::vector<uint64_t> m;
    m.reserve(rows.size() * cols.size());
    for (int r : rows)
        for (int c : cols) m.push_back(D.at(r, c));
    return rank_of(std::move(m), static_cast<int>(rows.size()),
                   static_cast<int>(cols.size()), D.spec());
}

bool all_submatrices_full_rank(const CauchyMatrix& D) {
    const int F = D.F();
    for (int n = 1; n <= F; ++n) {
        const auto row_sets = subsets_of(F, n);
        const auto col_sets = subsets_of(F, n);
        for (const auto& rs : row_sets)
            for (const auto& cs : col_sets)
                if (submatrix_rank(D, rs, cs) != n) return false;
    }
    return true;
}

ShareVector share(const std::vector<gf::SymbolVec>& W, const KeyVector& V,
                  const CauchyMatrix& D) {
    const int F = D.F();
    const int Z = static_cast<int>(V.keys.size());
    if (static_cast<int>(W.size()) != F - Z)
        throw ProtocolError("share: |W| must equal F - Z");
    std::vector<const gf::SymbolVec*> Y;
    for (const auto& w : W) Y.push_back(&w);
    for (const auto& v : V.keys) Y.push_back(&v);
    const size_t L = Y.empty() ? 0 : Y[0]->size();
    for (const auto* y : Y)
        if (!(y->spec == D.spec()) || y->size() != L)
            throw ProtocolError("share: mismatched symbol vectors");

    ShareVector A;
    for (int f = 0; f < F; ++f) {
        gf::SymbolVec acc = gf::SymbolVec::zero(D.spec(), L);
        for (int j = 0; j < F; ++j) {
            const uint64_t d = D.at(f, j);
            for (size_t p = 0; p < L; ++p)
                acc.vals[p] ^= gf::mul_raw(d, Y[j]->vals[p], D.spec());
        }
        A.shares.push_back(std::move(acc));
    }
    return A;
}

std::pair<std::vector<gf::SymbolVec>, KeyVector>
reconstruct(const ShareVector& A, const CauchyMatrix& D, int Z) {
    const int F = D.F();
    if (static_cast<int>(A.shares.size()) != F)
        throw ProtocolError("reconstruct: all F shares are required");
    const CauchyMatrix Dinv = D.inverse();
    const size_t L = A.shares[0].size();
    std::vector<gf::SymbolVec> Y;
    for (int i = 0; i < F; ++i) {
        gf::SymbolVec acc = gf::SymbolVec::zero(D.spec(), L);
        for (int j = 0; j < F; ++j) {
            const uint64_t d = Dinv.at(i, j);
            for (size_t p = 0; p < L; ++p)
                acc.vals[p] ^= gf::mul_raw(d, A.shares[j].vals[p], D.spec());
        }
        Y.push_back(std::move(acc));
    }
    std::vector<gf::SymbolVec> W(Y.begin(), Y.begin() + (F - Z));
    KeyVector V;
    V.keys.assign(Y.begin() + (F - Z), Y.end());
    return {std::move(W), std::move(V)};
}

RankReport secrecy_rank_check(const CauchyMatrix& D, int Z) {
    const int F = D.F();
    if (Z < 0 || Z >= F) throw ConfigError("secrecy_rank_check: need 0 <= Z < F");
    RankReport report;
    std::vector<int> key_cols;
    for (int j = F - Z; j < F; ++j) key_cols.push_back(j);
    for (const auto& rows : subsets_of(F, Z)) {
        if (submatrix_rank(D, rows, key_cols) != Z) {
            report.pass = false;
            report.violations.push_back(rows);
        }
    }
    return report;
}

LeakageReport share_leakage_oracle(const CauchyMatrix& D, int Z, uint64_t budget) {
    const int F = D.F();
    if (Z < 0 || Z >= F) throw ConfigError("share_leakage_oracle: need 0 <= Z < F");
    const gf::FieldSpec& spec = D.spec();
    const unsigned z = spec.z;
    const uint64_t q = spec.order();

    uint64_t states = 1;
    for (int i = 0; i < F; ++i) {
        if (states > budget / q)
            throw ConfigError("share_leakage_oracle: enumeration budget exceeded");
        states *= q;
    }

    const uint64_t w_space = uint64_t{1} << (z * (F - Z));
    const uint64_t v_space = uint64_t{1} << (z * Z);

    // Precomputed multiplication table keeps the hot loop table-driven.
    std::vector<uint64_t> mul(q * q);
    for (uint64_t a = 0; a < q; ++a)
        for (uint64_t b = 0; b < q; ++b) mul[a * q + b] = gf::mul_raw(a, b, spec);

    LeakageReport report;
    report.space_size = states;
    std::vector<uint32_t> counts(w_space * v_space);

    for (const auto& rows : subsets_of(F, Z)) {
        // a(W,V) = D1*W xor D2*V on the selected rows; precompute both halves.
        std::vector<uint64_t> d2v(v_space, 0);
        for (uint64_t v = 0; v < v_space; ++v) {
            uint64_t packed = 0;
            for (int i = 0; i < Z; ++i) {
                uint64_t acc = 0;
                for (int j = 0; j < Z; ++j) {
                    const uint64_t vj = v >> (z * j) & (q - 1);
                    acc ^= mul[D.at(rows[i], F - Z + j) * q + vj];
                }
                packed |= acc << (z * i);
            }
            d2v[v] = packed;
        }
        std::fill(counts.begin(), counts.end(), 0);
        for (uint64_t w = 0; w < w_space; ++w) {
            uint64_t d1w = 0;
            for (int i = 0; i < Z; ++i) {
                uint64_t acc = 0;
                for (int j = 0; j < F - Z; ++j) {
                    const uint64_t wj = w >> (z * j) & (q - 1);
                    acc ^= mul[D.at(rows[i], j) * q + wj];
                }
                d1w |= acc << (z * i);
            }
            uint32_t* row_counts = counts.data() + w * v_space;
            for (uint64_t v = 0; v < v_space; ++v) row_counts[d1w ^ d2v[v]] += 1;
        }

        // Independence defect: each secret value occurs exactly v_space
        // times, so the factorization test reduces per cell to
        // |count * N - v_space * colsum|.
        std::vector<uint64_t> colsum(v_space, 0);
        for (uint64_t w = 0; w < w_space; ++w)
            for (uint64_t a = 0; a < v_space; ++a) colsum[a] += counts[w * v_space + a];
        unsigned long long defect = 0;
        for (uint64_t w = 0; w < w_space; ++w) {
            for (uint64_t a = 0; a < v_space; ++a) {
                const unsigned long long lhs =
                    static_cast<unsigned long long>(counts[w * v_space + a]) * states;
                const unsigned long long rhs =
                    static_cast<unsigned long long>(v_space) * colsum[a];
                defect += lhs > rhs ? lhs - rhs : rhs - lhs;
            }
        }
        if (defect > report.max_defect) {
            report.max_defect = defect;
            report.worst_subset = rows;
        }
    }
    return report;
}

} // namespace sdc::ss
