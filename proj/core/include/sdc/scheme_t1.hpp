#ifndef SDC_SCHEME_T1_HPP_
#define SDC_SCHEME_T1_HPP_

#include <map>
#include <utility>
#include <vector>

#include "sdc/mapreduce.hpp"
#include "sdc/shuffle.hpp"

namespace sdc::scheme {

/* Secure data shuffling: nodes store plaintext file batches by the star
   pattern and exchange one-time-pad keyed IV packets. */

struct NodeStateT1 {
    int k = 0; // 1-based
    // (f, m) -> stored file payload
    std::map<std::pair<int, int>, gf::SymbolVec> files;
    // Keys this node is entitled to: (transmitter, instance, unit).
    std::map<std::tuple<int, int, int>, BitVec> keys;
};

struct T1Run {
    pda::Pda p;
    pda::OccurrenceIndex occ;
    gf::FieldSpec spec;
    size_t L_sym = 1;
    int eta = 1;
    ShufflePlan plan;
    std::vector<gf::SymbolVec> files; // eta*F, ordered (f-1)*eta + (m-1)
    std::vector<NodeStateT1> states;
    KeyTable keys;
    ItemTable items; // v_{q,f}^m
    Transcript transcript;
};

/* Validates counts and divisibility, generates and distributes the pad
   keys, stores batches per the star pattern, computes all IVs. */
T1Run place_t1(const pda::Pda& p, const gf::FieldSpec& spec, size_t L_sym, int eta,
               std::vector<gf::SymbolVec> files, RandomSource& key_rng);

void run_shuffle_t1(T1Run& run);

// Decodes node k's missing IVs and reduces; equals h_k over all files.
gf::SymbolVec decode_t1(const T1Run& run, int k);

// Just the recovered IVs, keyed by (f, m), for structural tests.
std::map<std::pair<int, int>, BitVec> decode_t1_items(const T1Run& run, int k);

struct MeasuredLoads {
    pda::Rational r;
    pda::Rational L;
};

// r from per-node stored file bits; L from the actual transcript.
MeasuredLoads measured_loads_t1(const T1Run& run);

} // namespace sdc::scheme

#endif
