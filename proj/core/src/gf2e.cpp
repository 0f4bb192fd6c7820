#include "sdc/gf2e.hpp"

#include <array>
#include <string>

namespace sdc::gf {

namespace {

int degree(uint64_t p) {
    int d = -1;
    while (p) {
        ++d;
        p >>= 1;
    }
    return d;
}

// Remainder of carry-less division of a by b over GF(2).
uint64_t poly_mod(uint64_t a, uint64_t b) {
    const int db = degree(b);
    int da = degree(a);
    while (da >= db) {
        a ^= b << (da - db);
        da = degree(a);
    }
    return a;
}

// z -> canonical irreducible polynomial mask, index 1..16.
constexpr std::array<uint64_t, 17> kCanonicalPoly = {
    0,
    0x3,     // x + 1
    0x7,     // x^2 + x + 1
    0xB,     // x^3 + x + 1
    0x13,    // x^4 + x + 1
    0x25,    // x^5 + x^2 + 1
    0x43,    // x^6 + x + 1
    0x83,    // x^7 + x + 1
    0x11B,   // x^8 + x^4 + x^3 + x + 1
    0x211,   // x^9 + x^4 + 1
    0x409,   // x^10 + x^3 + 1
    0x805,   // x^11 + x^2 + 1
    0x1053,  // x^12 + x^6 + x^4 + x + 1
    0x201B,  // x^13 + x^4 + x^3 + x + 1
    0x4443,  // x^14 + x^10 + x^6 + x + 1
    0x8003,  // x^15 + x + 1
    0x1100B, // x^16 + x^12 + x^3 + x + 1
};

} // namespace

bool is_irreducible(uint64_t poly) {
    const int d = degree(poly);
    if (d < 1) return false;
    // Trial division against every polynomial of degree 1 .. d/2.
    for (int dd = 1; dd <= d / 2; ++dd) {
        const uint64_t lo = uint64_t{1} << dd;
        const uint64_t hi = uint64_t{1} << (dd + 1);
        for (uint64_t q = lo; q < hi; ++q) {
            if (poly_mod(poly, q) == 0) return false;
        }
    }
    return true;
}

FieldSpec::FieldSpec(unsigned z_, uint64_t poly_) : z(z_), poly(poly_) {
    if (z < 1 || z > 16)
        throw ConfigError("FieldSpec: extension degree must be in [1,16], got " +
                          std::to_string(z));
    if (degree(poly) != static_cast<int>(z))
        throw ConfigError("FieldSpec: polynomial degree does not match z=" +
                          std::to_string(z));
    if (!is_irreducible(poly))
        throw ConfigError("FieldSpec: reduction polynomial is not irreducible");
}

FieldSpec FieldSpec::canonical(unsigned z) {
    if (z < 1 || z > 16)
        throw ConfigError("FieldSpec::canonical: z must be in [1,16], got " +
                          std::to_string(z));
    return FieldSpec(z, kCanonicalPoly[z]);
}

FieldElement::FieldElement(uint64_t value_, const FieldSpec& spec_)
    : value(value_), spec(spec_) {
    if (value >= spec.order())
        throw ConfigError("FieldElement: value " + std::to_string(value) +
                          " out of range for GF(2^" + std::to_string(spec.z) + ")");
}

namespace {

void require_same_field(const FieldElement& a, const FieldElement& b) {
    if (!(a.spec == b.spec))
        throw ConfigError("field mismatch: operands belong to different fields");
}

} // namespace

FieldElement gf_add(const FieldElement& a, const FieldElement& b) {
    require_same_field(a, b);
    return FieldElement(a.value ^ b.value, a.spec);
}

uint64_t mul_raw(uint64_t a, uint64_t b, const FieldSpec& spec) {
    // Shift-and-reduce carry-less product.
    uint64_t m = 0;
    for (uint64_t x = a; b; b >>= 1) {
        if (b & 1) m ^= x;
        x <<= 1;
    }
    for (int d = 2 * static_cast<int>(spec.z) - 2; d >= static_cast<int>(spec.z); --d) {
        if (m >> d & 1) m ^= spec.poly << (d - spec.z);
    }
    return m;
}

uint64_t inv_raw(uint64_t a, const FieldSpec& spec) {
    if (a == 0) throw ConfigError("gf_inv: division by zero");
    // a^(2^z - 2) by square-and-multiply.
    uint64_t e = spec.order() - 2;
    uint64_t result = 1;
    uint64_t base = a;
    while (e) {
        if (e & 1) result = mul_raw(result, base, spec);
        base = mul_raw(base, base, spec);
        e >>= 1;
    }
    return result;
}

FieldElement gf_mul(const FieldElement& a, const FieldElement& b) {
    require_same_field(a, b);
    return FieldElement(mul_raw(a.value, b.value, a.spec), a.spec);
}

FieldElement gf_inv(const FieldElement& a) {
    return FieldElement(inv_raw(a.value, a.spec), a.spec);
}

FieldSpec field_for(uint64_t F) {
    if (F < 1) throw ConfigError("field_for: F must be positive");
    unsigned z = 1;
    while ((uint64_t{1} << (z - 1)) < F) ++z;
    return FieldSpec::canonical(z);
}

SymbolVec::SymbolVec(const FieldSpec& spec_, std::vector<uint64_t> vals_)
    : spec(spec_), vals(std::move(vals_)) {
    for (uint64_t v : vals)
        if (v >= spec.order())
            throw ConfigError("SymbolVec: symbol out of field range");
}

SymbolVec SymbolVec::zero(const FieldSpec& spec, size_t n) {
    SymbolVec s;
    s.spec = spec;
    s.vals.assign(n, 0);
    return s;
}

SymbolVec& SymbolVec::operator^=(const SymbolVec& other) {
    if (!(spec == other.spec) || vals.size() != other.vals.size())
        throw ConfigError("SymbolVec: XOR of mismatched vectors");
    for (size_t i = 0; i < vals.size(); ++i) vals[i] ^= other.vals[i];
    return *this;
}

SymbolVec SymbolVec::operator^(const SymbolVec& other) const {
    SymbolVec r = *this;
    r ^= other;
    return r;
}

SymbolVec SymbolVec::scaled(const FieldElement& alpha) const {
    if (!(spec == alpha.spec))
        throw ConfigError("SymbolVec: scalar from a different field");
    SymbolVec r = *this;
    for (auto& v : r.vals) v = mul_raw(v, alpha.value, spec);
    return r;
}

} // namespace sdc::gf
