#ifndef SDC_BITS_HPP_
#define SDC_BITS_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "sdc/gf2e.hpp"

namespace sdc {

// One entry per bit, values 0/1. Sizes here are tiny; clarity wins.
using BitVec = std::vector<uint8_t>;

BitVec xor_bits(const BitVec& a, const BitVec& b);
void xor_inplace(BitVec& a, const BitVec& b);
BitVec slice_bits(const BitVec& v, size_t from, size_t len);
BitVec concat_bits(const BitVec& a, const BitVec& b);
std::string bits_to_hex(const BitVec& v);

// Packs symbols MSB-first, z bits each, symbol 0 first.
BitVec symbols_to_bits(const gf::SymbolVec& s);
gf::SymbolVec bits_to_symbols(const gf::FieldSpec& spec, const BitVec& v);

// Little-endian packing for enumeration keys; v.size() <= 64.
uint64_t bits_to_uint(const BitVec& v);

} // namespace sdc

#endif
