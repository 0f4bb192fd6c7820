#ifndef SDC_GF2E_HPP_
#define SDC_GF2E_HPP_

#include <cstdint>
#include <vector>

#include "sdc/errors.hpp"

namespace sdc::gf {

/* Binary extension field GF(2^z) with an explicit reduction polynomial.
   Elements are carried together with their spec; mixing fields is a hard
   error rather than a silent coercion. */
struct FieldSpec {
    unsigned z = 1;
    uint64_t poly = 0x3; // bit mask of the degree-z reduction polynomial

    FieldSpec() = default;
    FieldSpec(unsigned z, uint64_t poly);

    // Fixed irreducible polynomial per extension degree (z <= 16).
    static FieldSpec canonical(unsigned z);

    uint64_t order() const { return uint64_t{1} << z; }

    bool operator==(const FieldSpec&) const = default;
};

struct FieldElement {
    uint64_t value = 0;
    FieldSpec spec;

    FieldElement() = default;
    FieldElement(uint64_t value, const FieldSpec& spec);

    bool operator==(const FieldElement&) const = default;
};

bool is_irreducible(uint64_t poly);

FieldElement gf_add(const FieldElement& a, const FieldElement& b);
FieldElement gf_mul(const FieldElement& a, const FieldElement& b);
FieldElement gf_inv(const FieldElement& a);

// Raw-value arithmetic for inner loops; caller guarantees a, b < 2^z.
uint64_t mul_raw(uint64_t a, uint64_t b, const FieldSpec& spec);
uint64_t inv_raw(uint64_t a, const FieldSpec& spec);

// Smallest field satisfying z >= 1 + log2(F), canonical polynomial.
FieldSpec field_for(uint64_t F);

/* Fixed-length vector of symbols from one field; the payload unit for
   files, IVs, shares and coded IVs. */
struct SymbolVec {
    FieldSpec spec;
    std::vector<uint64_t> vals;

    SymbolVec() = default;
    SymbolVec(const FieldSpec& spec, std::vector<uint64_t> vals);
    static SymbolVec zero(const FieldSpec& spec, size_t n);

    size_t size() const { return vals.size(); }
    size_t bit_size() const { return vals.size() * spec.z; }

    SymbolVec& operator^=(const SymbolVec& other);
    SymbolVec operator^(const SymbolVec& other) const;

    // Symbol-wise multiplication by a scalar.
    SymbolVec scaled(const FieldElement& alpha) const;

    bool operator==(const SymbolVec&) const = default;
};

} // namespace sdc::gf

#endif
