#ifndef SDC_MAPREDUCE_HPP_
#define SDC_MAPREDUCE_HPP_

#include <cstdint>
#include <vector>

#include "sdc/gf2e.hpp"

namespace sdc::mr {

/* File/IV/output widths are unified: every payload is L_sym symbols of
   GF(2^z), i.e. t = z * L_sym bits. */
struct InputFile {
    int index = 0;  // f or n, 1-based
    int batch = 1;  // m, 1-based
    gf::SymbolVec payload;
};

/* Linear map g_q: symbol-wise multiplication by a nonzero scalar.
   Commutes with multiplication by matrix coefficients, which the
   coded-IV identity requires. */
struct MapFunction {
    int q = 1;
    gf::FieldElement alpha;

    static MapFunction for_node(int q, const gf::FieldSpec& spec);
};

struct IntermediateValue {
    int q = 0;
    int file_index = 0;
    int batch = 1;
    gf::SymbolVec payload;
};

struct CodedIv {
    int q = 0;
    int share_index = 0; // f
    int batch = 1;       // m
    gf::SymbolVec payload;
};

IntermediateValue map_iv(const MapFunction& g, const InputFile& file);
CodedIv coded_iv(const MapFunction& g, int share_index, int batch,
                 const gf::SymbolVec& share);

/* Reduce h_q: field sum of the function's IVs over all N files. Expects
   exactly one IV per file, all for the same q. */
gf::SymbolVec reduce_output(int q, const std::vector<IntermediateValue>& ivs, int N);

// Splits a binary blob into z-bit symbols, bitwise MSB first; the blob
// must cover files * L_sym symbols.
std::vector<gf::SymbolVec> ingest_blob(const std::vector<uint8_t>& bytes,
                                       const gf::FieldSpec& spec, size_t files,
                                       size_t L_sym);

} // namespace sdc::mr

#endif
