#include "sdc/pda.hpp"

#include <algorithm>
#include <sstream>

namespace sdc::pda {

Pda Pda::validate(const Grid& grid) {
    if (grid.empty() || grid[0].empty())
        throw ValidationError("PDA grid is empty");
    const int F = static_cast<int>(grid.size());
    const int K = static_cast<int>(grid[0].size());
    for (int f = 0; f < F; ++f)
        if (static_cast<int>(grid[f].size()) != K)
            throw ValidationError("PDA grid is ragged at row " + std::to_string(f + 1));

    // A1: equal star count per column.
    int Z = -1;
    for (int k = 0; k < K; ++k) {
        int stars = 0;
        for (int f = 0; f < F; ++f)
            if (grid[f][k] == kStar) ++stars;
        if (Z < 0) Z = stars;
        else if (stars != Z)
            throw ValidationError("condition A1 violated: column " + std::to_string(k + 1) +
                                  " has " + std::to_string(stars) + " stars, expected " +
                                  std::to_string(Z));
    }

    // Canonical renumbering by first appearance in column-major order;
    // A2 holds by construction afterwards.
    Pda p;
    p.grid_.assign(F, std::vector<int>(K, kStar));
    std::map<int, int> renumber;
    for (int k = 0; k < K; ++k) {
        for (int f = 0; f < F; ++f) {
            const int v = grid[f][k];
            if (v == kStar) continue;
            if (v < 0)
                throw ValidationError("negative integer entry at row " + std::to_string(f + 1) +
                                      ", column " + std::to_string(k + 1));
            auto [it, inserted] = renumber.try_emplace(v, static_cast<int>(renumber.size()) + 1);
            p.grid_[f][k] = it->second;
        }
    }
    const int S = static_cast<int>(renumber.size());
    if (S == 0)
        throw ValidationError("PDA has no integer entries; nothing to shuffle");

    // Occurrence counts; the schemes need every integer at least twice.
    std::vector<std::vector<std::pair<int, int>>> cells(S);
    for (int k = 0; k < K; ++k)
        for (int f = 0; f < F; ++f)
            if (p.grid_[f][k] != kStar) cells[p.grid_[f][k] - 1].push_back({f, k});
    for (int s = 1; s <= S; ++s)
        if (cells[s - 1].size() < 2)
            throw ValidationError("integer " + std::to_string(s) +
                                  " appears only once; each integer must appear more than once");

    // A3 on every pair of equal entries.
    for (int s = 1; s <= S; ++s) {
        const auto& pos = cells[s - 1];
        for (size_t i = 0; i < pos.size(); ++i) {
            for (size_t j = i + 1; j < pos.size(); ++j) {
                const auto [f1, k1] = pos[i];
                const auto [f2, k2] = pos[j];
                const bool distinct = f1 != f2 && k1 != k2;
                const bool crossed = distinct && p.grid_[f1][k2] == kStar &&
                                     p.grid_[f2][k1] == kStar;
                if (!crossed) {
                    std::ostringstream os;
                    os << "condition A3 violated for integer " << s << ": rows {"
                       << f1 + 1 << "," << f2 + 1 << "} columns {" << k1 + 1 << ","
                       << k2 + 1 << "}";
                    throw ValidationError(os.str());
                }
            }
        }
    }

    p.K_ = K;
    p.F_ = F;
    p.Z_ = Z;
    p.S_ = S;
    return p;
}

OccurrenceIndex occurrence_index(const Pda& pda) {
    OccurrenceIndex idx;
    idx.positions.resize(pda.S());
    idx.columns_of.resize(pda.S());
    idx.integers_in_column.resize(pda.K());
    for (int k = 0; k < pda.K(); ++k) {
        for (int f = 0; f < pda.F(); ++f) {
            const int s = pda.at(f, k);
            if (s == kStar) continue;
            idx.positions[s - 1].push_back({f, k});
            idx.integers_in_column[k].insert(s);
        }
    }
    for (int s = 1; s <= pda.S(); ++s) {
        auto& cols = idx.columns_of[s - 1];
        for (const auto& [f, k] : idx.positions[s - 1]) cols.push_back(k);
        std::sort(cols.begin(), cols.end());
        idx.histogram[idx.occurrences(s)] += 1;
    }
    return idx;
}

namespace {

Loads loads_from(const Pda& pda, long long denom_per_k) {
    const auto idx = occurrence_index(pda);
    const long long K = pda.K();
    Rational L(pda.S(), K * denom_per_k);
    for (const auto& [g, Sg] : idx.histogram)
        L += Rational(Sg, K * denom_per_k * (g - 1));
    return Loads{Rational(pda.Z(), denom_per_k), L};
}

} // namespace

Loads load_shuffle(const Pda& pda) {
    return loads_from(pda, pda.F());
}

Loads load_coded(const Pda& pda) {
    if (pda.F() == pda.Z())
        throw ConfigError("load_coded: F = Z leaves no payload capacity");
    return loads_from(pda, pda.F() - pda.Z());
}

Grid parse_pda(const std::string& text) {
    Grid grid;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line[0] == '#') continue;
        std::istringstream row(line);
        std::vector<int> cells;
        std::string tok;
        while (row >> tok) {
            if (tok == "*") {
                cells.push_back(kStar);
            } else {
                try {
                    size_t used = 0;
                    const int v = std::stoi(tok, &used);
                    if (used != tok.size() || v < 1) throw std::invalid_argument(tok);
                    cells.push_back(v);
                } catch (const std::exception&) {
                    throw ParseError("invalid token '" + tok + "' at line " +
                                     std::to_string(lineno) + ", token " +
                                     std::to_string(cells.size() + 1));
                }
            }
        }
        if (!cells.empty()) grid.push_back(std::move(cells));
    }
    if (grid.empty()) throw ParseError("no PDA rows found");
    for (const auto& row : grid)
        if (row.size() != grid[0].size())
            throw ParseError("ragged PDA rows");
    return grid;
}

std::string serialize_pda(const Pda& pda) {
    std::ostringstream os;
    for (int f = 0; f < pda.F(); ++f) {
        for (int k = 0; k < pda.K(); ++k) {
            if (k) os << ' ';
            if (pda.at(f, k) == kStar) os << '*';
            else os << pda.at(f, k);
        }
        os << '\n';
    }
    return os.str();
}

namespace {

// All r-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<int>> subsets(int n, int r) {
    std::vector<std::vector<int>> out;
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

Pda generate_mn_pda(int K, int t_param) {
    if (t_param < 1 || t_param >= K)
        throw ConfigError("generate_mn_pda: need 1 <= t_param < K");
    const auto rows = subsets(K, t_param);
    const auto labels = subsets(K, t_param + 1);
    std::map<std::vector<int>, int> label_of;
    for (size_t i = 0; i < labels.size(); ++i)
        label_of[labels[i]] = static_cast<int>(i) + 1;

    Grid grid(rows.size(), std::vector<int>(K, kStar));
    for (size_t f = 0; f < rows.size(); ++f) {
        for (int k = 0; k < K; ++k) {
            if (std::binary_search(rows[f].begin(), rows[f].end(), k)) continue;
            std::vector<int> u = rows[f];
            u.push_back(k);
            std::sort(u.begin(), u.end());
            grid[f][k] = label_of.at(u);
        }
    }
    return Pda::validate(grid);
}

} // namespace sdc::pda
