#include "sdc/mapreduce.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "sdc/errors.hpp"

namespace sdc::mr {

MapFunction MapFunction::for_node(int q, const gf::FieldSpec& spec) {
    if (q < 1) throw ConfigError("MapFunction: q must be positive");
    // Nonzero scalar cycling through the multiplicative group.
    const uint64_t alpha = (static_cast<uint64_t>(q - 1) % (spec.order() - 1)) + 1;
    MapFunction g;
    g.q = q;
    g.alpha = gf::FieldElement(alpha, spec);
    return g;
}

IntermediateValue map_iv(const MapFunction& g, const InputFile& file) {
    IntermediateValue iv;
    iv.q = g.q;
    iv.file_index = file.index;
    iv.batch = file.batch;
    iv.payload = file.payload.scaled(g.alpha);
    return iv;
}

CodedIv coded_iv(const MapFunction& g, int share_index, int batch,
                 const gf::SymbolVec& share) {
    CodedIv c;
    c.q = g.q;
    c.share_index = share_index;
    c.batch = batch;
    c.payload = share.scaled(g.alpha);
    return c;
}

gf::SymbolVec reduce_output(int q, const std::vector<IntermediateValue>& ivs, int N) {
    if (static_cast<int>(ivs.size()) != N)
        throw ProtocolError("reduce_output: expected " + std::to_string(N) +
                            " IVs, got " + std::to_string(ivs.size()));
    std::set<std::pair<int, int>> seen;
    gf::SymbolVec acc;
    bool first = true;
    for (const auto& iv : ivs) {
        if (iv.q != q) throw ProtocolError("reduce_output: IV for a different function");
        if (!seen.insert({iv.file_index, iv.batch}).second)
            throw ProtocolError("reduce_output: duplicate IV for file " +
                                std::to_string(iv.file_index));
        if (first) {
            acc = iv.payload;
            first = false;
        } else {
            acc ^= iv.payload;
        }
    }
    return acc;
}

std::vector<gf::SymbolVec> ingest_blob(const std::vector<uint8_t>& bytes,
                                       const gf::FieldSpec& spec, size_t files,
                                       size_t L_sym) {
    const size_t bits_needed = files * L_sym * spec.z;
    if (bytes.size() * 8 < bits_needed)
        throw ConfigError("ingest_blob: blob too small, need " +
                          std::to_string(bits_needed) + " bits");
    std::vector<gf::SymbolVec> out;
    size_t bit = 0;
    auto next_bit = [&]() {
        const uint8_t b = bytes[bit / 8];
        const uint8_t v = static_cast<uint8_t>(b >> (7 - bit % 8) & 1);
        ++bit;
        return v;
    };
    for (size_t n = 0; n < files; ++n) {
        std::vector<uint64_t> vals(L_sym, 0);
        for (size_t i = 0; i < L_sym; ++i)
            for (unsigned b = 0; b < spec.z; ++b) vals[i] = vals[i] << 1 | next_bit();
        out.emplace_back(spec, std::move(vals));
    }
    return out;
}

} // namespace sdc::mr
