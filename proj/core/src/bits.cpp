#include "sdc/bits.hpp"

#include "sdc/errors.hpp"

namespace sdc {

BitVec xor_bits(const BitVec& a, const BitVec& b) {
    BitVec r = a;
    xor_inplace(r, b);
    return r;
}

void xor_inplace(BitVec& a, const BitVec& b) {
    if (a.size() != b.size())
        throw ProtocolError("bit-vector XOR with mismatched lengths");
    for (size_t i = 0; i < a.size(); ++i) a[i] ^= b[i];
}

BitVec slice_bits(const BitVec& v, size_t from, size_t len) {
    if (from + len > v.size())
        throw ProtocolError("bit slice out of range");
    return BitVec(v.begin() + from, v.begin() + from + len);
}

BitVec concat_bits(const BitVec& a, const BitVec& b) {
    BitVec r = a;
    r.insert(r.end(), b.begin(), b.end());
    return r;
}

std::string bits_to_hex(const BitVec& v) {
    static const char* digits = "0123456789abcdef";
    std::string out;
    uint8_t nib = 0;
    size_t fill = 0;
    for (size_t i = 0; i < v.size(); ++i) {
        nib = static_cast<uint8_t>(nib << 1 | (v[i] & 1));
        if (++fill == 4) {
            out.push_back(digits[nib]);
            nib = 0;
            fill = 0;
        }
    }
    if (fill) out.push_back(digits[nib << (4 - fill)]);
    return out;
}

BitVec symbols_to_bits(const gf::SymbolVec& s) {
    BitVec out;
    out.reserve(s.bit_size());
    for (uint64_t v : s.vals)
        for (int b = static_cast<int>(s.spec.z) - 1; b >= 0; --b)
            out.push_back(static_cast<uint8_t>(v >> b & 1));
    return out;
}

gf::SymbolVec bits_to_symbols(const gf::FieldSpec& spec, const BitVec& v) {
    if (v.size() % spec.z != 0)
        throw ProtocolError("bit length not a multiple of the symbol width");
    std::vector<uint64_t> vals;
    vals.reserve(v.size() / spec.z);
    for (size_t i = 0; i < v.size(); i += spec.z) {
        uint64_t x = 0;
        for (unsigned b = 0; b < spec.z; ++b) x = x << 1 | v[i + b];
        vals.push_back(x);
    }
    return gf::SymbolVec(spec, std::move(vals));
}

uint64_t bits_to_uint(const BitVec& v) {
    if (v.size() > 64) throw ProtocolError("bits_to_uint: more than 64 bits");
    uint64_t x = 0;
    for (size_t i = 0; i < v.size(); ++i) x |= uint64_t{v[i] & 1} << i;
    return x;
}

} // namespace sdc
