#include <doctest.h>

#include "sdc/mapreduce.hpp"

using namespace sdc::mr;
using sdc::gf::FieldSpec;
using sdc::gf::SymbolVec;

TEST_CASE("map coefficients cycle through the nonzero field elements") {
    const auto gf4 = FieldSpec::canonical(2);
    CHECK(MapFunction::for_node(1, gf4).alpha.value == 1);
    CHECK(MapFunction::for_node(2, gf4).alpha.value == 2);
    CHECK(MapFunction::for_node(3, gf4).alpha.value == 3);
    CHECK(MapFunction::for_node(4, gf4).alpha.value == 1); // wraps, never zero
    CHECK_THROWS_AS(MapFunction::for_node(0, gf4), sdc::ConfigError);
}

TEST_CASE("map_iv scales the file payload") {
    const auto gf8 = FieldSpec::canonical(3);
    InputFile file{2, 1, SymbolVec(gf8, {1, 2, 3})};
    const auto g = MapFunction::for_node(2, gf8); // alpha = 2
    const auto iv = map_iv(g, file);
    CHECK(iv.q == 2);
    CHECK(iv.file_index == 2);
    CHECK(iv.payload.vals == std::vector<uint64_t>{2, 4, 6});
}

TEST_CASE("coded_iv commutes with the sharing combination") {
    // g_q(sum d_j y_j) = sum d_j g_q(y_j) because both are just scalar
    // multiplications; spot-check the scaling itself.
    const auto gf8 = FieldSpec::canonical(3);
    const auto g = MapFunction::for_node(3, gf8); // alpha = 3
    const auto civ = coded_iv(g, 4, 2, SymbolVec(gf8, {5, 0, 1}));
    CHECK(civ.share_index == 4);
    CHECK(civ.batch == 2);
    CHECK(civ.payload.vals ==
          std::vector<uint64_t>{sdc::gf::mul_raw(3, 5, gf8), 0, 3});
}

TEST_CASE("reduce_output sums one IV per file") {
    const auto gf4 = FieldSpec::canonical(2);
    std::vector<IntermediateValue> ivs{
        {1, 1, 1, SymbolVec(gf4, {1, 2})},
        {1, 2, 1, SymbolVec(gf4, {3, 1})},
        {1, 3, 1, SymbolVec(gf4, {2, 2})},
    };
    const auto out = reduce_output(1, ivs, 3);
    CHECK(out.vals == std::vector<uint64_t>{0, 1});

    CHECK_THROWS_AS(reduce_output(1, ivs, 4), sdc::ProtocolError); // missing file
    CHECK_THROWS_AS(reduce_output(2, ivs, 3), sdc::ProtocolError); // wrong q
    auto dup = ivs;
    dup[2].file_index = 1; // file 1 twice, file 3 never
    CHECK_THROWS_AS(reduce_output(1, dup, 3), sdc::ProtocolError);
}

TEST_CASE("ingest_blob splits bytes into z-bit symbols MSB first") {
    const auto gf8 = FieldSpec::canonical(3);
    // 10110101 01000000 00000000 -> 101 101 010 100 000 000
    const auto files = ingest_blob({0xB5, 0x40, 0x00}, gf8, /*files=*/2, /*L_sym=*/3);
    REQUIRE(files.size() == 2);
    CHECK(files[0].vals == std::vector<uint64_t>{0b101, 0b101, 0b010});
    CHECK(files[1].vals == std::vector<uint64_t>{0b100, 0b000, 0b000});
    CHECK_THROWS_AS(ingest_blob({0xB5, 0x40}, gf8, 2, 3), sdc::ConfigError);
}

TEST_CASE("linearity: reduce of mapped files equals map of the file sum") {
    const auto gf8 = FieldSpec::canonical(3);
    const auto g = MapFunction::for_node(5, gf8);
    std::vector<SymbolVec> payloads{SymbolVec(gf8, {1, 7}), SymbolVec(gf8, {4, 2}),
                                    SymbolVec(gf8, {6, 6})};
    std::vector<IntermediateValue> ivs;
    SymbolVec total = SymbolVec::zero(gf8, 2);
    for (int f = 1; f <= 3; ++f) {
        ivs.push_back(map_iv(g, InputFile{f, 1, payloads[f - 1]}));
        total = total ^ payloads[f - 1];
    }
    CHECK(reduce_output(5, ivs, 3).vals == total.scaled(g.alpha).vals);
}
