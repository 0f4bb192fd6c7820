#ifndef SDC_SCHEME_T2_HPP_
#define SDC_SCHEME_T2_HPP_

#include <map>
#include <utility>
#include <vector>

#include "sdc/mapreduce.hpp"
#include "sdc/secret_sharing.hpp"
#include "sdc/shuffle.hpp"

namespace sdc::scheme {

/* Secure coded computing: files are ramp-shared per batch, nodes store
   shares, and the Theorem-1 shuffle machinery runs on coded IVs. */

struct NodeStateT2 {
    int k = 0;
    // (f, m) -> stored share payload; Z shares per batch, no plaintext.
    std::map<std::pair<int, int>, gf::SymbolVec> shares;
    std::map<std::tuple<int, int, int>, BitVec> keys;
};

struct T2Run {
    pda::Pda p;
    pda::OccurrenceIndex occ;
    gf::FieldSpec spec;
    size_t L_sym = 1;
    int eta = 1;
    ShufflePlan plan;
    ss::CauchyMatrix D;
    std::vector<gf::SymbolVec> files; // eta*(F-Z), ordered (m-1)*(F-Z) + (n-1)
    std::vector<ss::KeyVector> ramp_keys;  // per batch
    std::vector<ss::ShareVector> shares;   // per batch
    std::vector<NodeStateT2> states;
    KeyTable keys;
    ItemTable items; // c_{q,f}^m
    Transcript transcript;
};

/* Groups files into eta batches of F-Z, samples the ramp key vectors
   from `rng`, and computes A^m = D [W^m; V^m]. The matrix defaults to
   build_cauchy(F, spec) when `D` is null. */
T2Run setup_t2(const pda::Pda& p, const gf::FieldSpec& spec, size_t L_sym, int eta,
               std::vector<gf::SymbolVec> files, RandomSource& rng,
               const ss::CauchyMatrix* D = nullptr);

// Star-pattern share placement, key generation, coded-IV computation.
void place_t2(T2Run& run, RandomSource& key_rng);

void run_shuffle_t2(T2Run& run);

struct T2Decoded {
    gf::SymbolVec output;
    // Recovered IVs (f in [F-Z], m) and the D^{-1} key-row byproduct
    // g_k(V_j^m), kept for the row-split test.
    std::map<std::pair<int, int>, gf::SymbolVec> ivs;
    std::map<std::pair<int, int>, gf::SymbolVec> mapped_keys;
};

// Recovers all coded IVs of function k, inverts D, reduces.
T2Decoded decode_t2(const T2Run& run, int k);

// r from per-node stored share bits; L from the actual transcript.
struct MeasuredLoadsT2 {
    pda::Rational r;
    pda::Rational L;
};
MeasuredLoadsT2 measured_loads_t2(const T2Run& run);

} // namespace sdc::scheme

#endif
