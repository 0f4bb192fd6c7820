#ifndef SDC_SECRET_SHARING_HPP_
#define SDC_SECRET_SHARING_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sdc/gf2e.hpp"

namespace sdc::ss {

/* F x F matrix over GF(2^z) used as the (Z,F) ramp-sharing map.
   Constructed matrices are genuine Cauchy matrices (every square
   submatrix full rank); ingested literals are audited instead. */
class CauchyMatrix {
public:
    CauchyMatrix() = default; // empty; usable only after assignment

    // entries d_{i,j} = inv(x_i + y_j), x_i = i-1, y_j = F+j-1.
    static CauchyMatrix build(int F, const gf::FieldSpec& spec);

    /* Literal values, e.g. a matrix quoted from elsewhere. Rejected if
       singular or if any square submatrix is rank deficient (which
       would break the ramp secrecy argument). */
    static CauchyMatrix ingest(const std::vector<std::vector<uint64_t>>& values,
                               const gf::FieldSpec& spec);

    /* Skips the rank audits entirely. For sabotage modes and negative
       tests; never used on the normal scheme path. */
    static CauchyMatrix unaudited(const std::vector<std::vector<uint64_t>>& values,
                                  const gf::FieldSpec& spec);

    int F() const { return F_; }
    const gf::FieldSpec& spec() const { return spec_; }
    uint64_t at(int i, int j) const { return entries_[i * F_ + j]; }
    bool constructed() const { return constructed_; }

    CauchyMatrix inverse() const;

    // F lines of F decimal field-element encodings.
    static CauchyMatrix parse(const std::string& text, const gf::FieldSpec& spec);
    std::string serialize() const;

private:
    int F_ = 0;
    gf::FieldSpec spec_;
    std::vector<uint64_t> entries_; // row-major
    bool constructed_ = false;
};

// Rank of an arbitrary submatrix selection (0-based row/col indices).
int submatrix_rank(const CauchyMatrix& D, const std::vector<int>& rows,
                   const std::vector<int>& cols);

// True iff every square submatrix of D is full rank (exhaustive).
bool all_submatrices_full_rank(const CauchyMatrix& D);

struct ShareVector {
    std::vector<gf::SymbolVec> shares; // length F
};

struct KeyVector {
    std::vector<gf::SymbolVec> keys; // length Z, uniform, file-independent
};

// A = D * [W; V], applied per symbol position. |W| = F-Z, |V| = Z.
ShareVector share(const std::vector<gf::SymbolVec>& W, const KeyVector& V,
                  const CauchyMatrix& D);

// [W; V] = D^{-1} * A; returns (W, V).
std::pair<std::vector<gf::SymbolVec>, KeyVector>
reconstruct(const ShareVector& A, const CauchyMatrix& D, int Z);

struct RankReport {
    bool pass = true;
    // Offending Z-subsets of rows (0-based) whose ZxZ block on the last
    // Z columns is rank deficient.
    std::vector<std::vector<int>> violations;
};

// Checks the key-block submatrix of every Z-subset of rows.
RankReport secrecy_rank_check(const CauchyMatrix& D, int Z);

struct LeakageReport {
    // Maximum independence defect over all Z-subsets of shares:
    // sum |count(b,a)*N - count(b)*count(a)| over the joint table.
    // Exactly zero iff every subset reveals nothing about the batch.
    unsigned long long max_defect = 0;
    uint64_t space_size = 0;
    std::optional<std::vector<int>> worst_subset;
    bool leak_free() const { return max_defect == 0; }
};

/* Exhaustive counting over all (W, V) assignments with V uniform;
   enumeration space (2^z)^F must stay within `budget` states. */
LeakageReport share_leakage_oracle(const CauchyMatrix& D, int Z,
                                   uint64_t budget = uint64_t{1} << 24);

} // namespace sdc::ss

#endif
