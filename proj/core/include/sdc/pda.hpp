#ifndef SDC_PDA_HPP_
#define SDC_PDA_HPP_

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "sdc/errors.hpp"

namespace sdc::pda {

using Rational = boost::rational<long long>;

// Grid cells: kStar for '*', otherwise the integer label (>= 1).
constexpr int kStar = 0;

using Grid = std::vector<std::vector<int>>; // F rows, K columns

/* Validated placement delivery array. Integers are renumbered to a
   contiguous [1..S] by first appearance in column-major order; every
   integer is required to appear at least twice (the schemes partition
   payloads into g_s - 1 packets, so g_s = 1 has no meaning). */
class Pda {
public:
    Pda() = default; // empty; usable only after assignment from validate()
    static Pda validate(const Grid& grid);

    int K() const { return K_; }
    int F() const { return F_; }
    int Z() const { return Z_; }
    int S() const { return S_; }

    // Row f, column k, both 0-based.
    int at(int f, int k) const { return grid_[f][k]; }
    const Grid& grid() const { return grid_; }

private:
    Grid grid_;
    int K_ = 0, F_ = 0, Z_ = 0, S_ = 0;
};

struct OccurrenceIndex {
    // positions[s-1]: (row, col) cells holding s, in column-major order.
    std::vector<std::vector<std::pair<int, int>>> positions;
    // columns_of[s-1]: columns holding s, ascending.
    std::vector<std::vector<int>> columns_of;
    // integers_in_column[k]: the set S_k.
    std::vector<std::set<int>> integers_in_column;
    // histogram[g] = S_g, the number of integers occurring exactly g times.
    std::map<int, int> histogram;

    int occurrences(int s) const { return static_cast<int>(positions[s - 1].size()); }
};

OccurrenceIndex occurrence_index(const Pda& pda);

struct Loads {
    Rational r;
    Rational L;
};

// Theorem-1 loads: r = Z/F, L = S/(KF) + sum_g S_g/(KF(g-1)).
Loads load_shuffle(const Pda& pda);

// Theorem-2 loads: r = Z/(F-Z), L = S/(K(F-Z)) + sum_g S_g/(K(F-Z)(g-1)).
Loads load_coded(const Pda& pda);

/* Text format: one row per line, tokens separated by whitespace, each
   token '*' or a positive integer; lines starting with '#' ignored. */
Grid parse_pda(const std::string& text);
std::string serialize_pda(const Pda& pda);

/* Classical (K, C(K,t), C(K-1,t-1), C(K,t+1)) array: rows indexed by
   t-subsets of [K], star at (T,k) iff k in T, integers indexing the
   (t+1)-subsets. Test-scale PDA source. */
Pda generate_mn_pda(int K, int t_param);

} // namespace sdc::pda

#endif
