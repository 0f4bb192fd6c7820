#include <doctest.h>

#include <fstream>
#include <sstream>

#include "sdc/random.hpp"
#include "sdc/secret_sharing.hpp"

using namespace sdc::ss;
using sdc::gf::FieldSpec;
using sdc::gf::SymbolVec;

namespace {

std::string fixture(const std::string& name) {
    std::ifstream in(std::string(SDC_FIXTURE_DIR) + "/" + name);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

KeyVector draw_keys(int Z, const FieldSpec& spec, size_t L_sym, sdc::RandomSource& rng) {
    KeyVector V;
    for (int j = 0; j < Z; ++j) {
        std::vector<uint64_t> vals(L_sym);
        for (auto& v : vals) v = rng.symbol(spec);
        V.keys.emplace_back(spec, vals);
    }
    return V;
}

} // namespace

TEST_CASE("constructed matrices are Cauchy and superregular") {
    for (int F = 1; F <= 6; ++F) {
        const auto spec = sdc::gf::field_for(F);
        const auto D = CauchyMatrix::build(F, spec);
        CHECK(D.constructed());
        CHECK(all_submatrices_full_rank(D));
    }
    // 2F > 2^z leaves too few distinct x,y values.
    CHECK_THROWS_AS(CauchyMatrix::build(3, FieldSpec::canonical(2)), sdc::ConfigError);
}

TEST_CASE("build(2, GF(4)) gives the expected entries") {
    const auto D = CauchyMatrix::build(2, FieldSpec::canonical(2));
    CHECK(D.at(0, 0) == 3); // inv(0 + 2) = inv(2) = 3
    CHECK(D.at(0, 1) == 2); // inv(0 + 3) = inv(3) = 2
    CHECK(D.at(1, 0) == 2);
    CHECK(D.at(1, 1) == 3);
}

TEST_CASE("the quoted 4x4 circulant over GF(8) passes the ingest audit") {
    const auto spec = FieldSpec::canonical(3);
    const auto D = CauchyMatrix::parse(fixture("example2_matrix.txt"), spec);
    CHECK(D.F() == 4);
    CHECK(D.at(0, 0) == 1);
    CHECK(D.at(0, 1) == 6);
    CHECK(all_submatrices_full_rank(D));
    CHECK(secrecy_rank_check(D, 2).pass);
}

TEST_CASE("ingest rejects singular or secrecy-unsafe literals") {
    const auto gf4 = FieldSpec::canonical(2);
    CHECK_THROWS_WITH_AS(CauchyMatrix::ingest({{1, 1}, {1, 1}}, gf4),
                         doctest::Contains("singular"), sdc::ValidationError);
    // Invertible, but contains a zero entry => some 1x1 submatrix is
    // rank deficient, which breaks the ramp secrecy argument.
    CHECK_THROWS_WITH_AS(CauchyMatrix::ingest({{1, 0}, {0, 1}}, gf4),
                         doctest::Contains("secrecy-unsafe"), sdc::ValidationError);
    CHECK_THROWS_AS(CauchyMatrix::ingest({{1, 2}, {1}}, gf4), sdc::ValidationError);
    CHECK_THROWS_AS(CauchyMatrix::ingest({{1, 4}, {4, 1}}, gf4), sdc::ValidationError);
}

TEST_CASE("unaudited skips the checks") {
    const auto gf4 = FieldSpec::canonical(2);
    const auto I = CauchyMatrix::unaudited({{1, 0}, {0, 1}}, gf4);
    CHECK(I.at(0, 0) == 1);
    CHECK_FALSE(all_submatrices_full_rank(I));
    CHECK_FALSE(secrecy_rank_check(I, 1).pass);
}

TEST_CASE("inverse really inverts") {
    const auto spec = FieldSpec::canonical(3);
    const auto D = CauchyMatrix::build(4, spec);
    const auto Di = D.inverse();
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            uint64_t acc = 0;
            for (int k = 0; k < 4; ++k)
                acc ^= sdc::gf::mul_raw(D.at(i, k), Di.at(k, j), spec);
            CHECK(acc == (i == j ? 1u : 0u));
        }
    }
}

TEST_CASE("parse/serialize round trip and parse errors") {
    const auto spec = FieldSpec::canonical(3);
    const auto D = CauchyMatrix::build(4, spec);
    const auto again = CauchyMatrix::parse(D.serialize(), spec);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) CHECK(again.at(i, j) == D.at(i, j));

    CHECK_THROWS_AS(CauchyMatrix::parse("1 2\n3\n", spec), sdc::ValidationError);
    CHECK_THROWS_AS(CauchyMatrix::parse("1 9\n2 3\n", spec), sdc::ValidationError); // 9 >= 8
    CHECK_THROWS_AS(CauchyMatrix::parse("1 a\n2 3\n", spec), sdc::ParseError);
    CHECK_THROWS_AS(CauchyMatrix::parse("", spec), sdc::ParseError);
}

TEST_CASE("share/reconstruct round trip") {
    const auto spec = FieldSpec::canonical(3);
    const int F = 4, Z = 2;
    const size_t L_sym = 3;
    const auto D = CauchyMatrix::build(F, spec);

    sdc::SeededSource rng(7);
    std::vector<SymbolVec> W;
    for (int i = 0; i < F - Z; ++i) {
        std::vector<uint64_t> vals(L_sym);
        for (auto& v : vals) v = rng.symbol(spec);
        W.emplace_back(spec, vals);
    }
    const auto V = draw_keys(Z, spec, L_sym, rng);

    const auto A = share(W, V, D);
    CHECK(A.shares.size() == size_t(F));
    const auto [W2, V2] = reconstruct(A, D, Z);
    REQUIRE(W2.size() == W.size());
    for (size_t i = 0; i < W.size(); ++i) CHECK(W2[i].vals == W[i].vals);
    for (int j = 0; j < Z; ++j) CHECK(V2.keys[j].vals == V.keys[j].vals);
}

TEST_CASE("share size validation") {
    const auto spec = FieldSpec::canonical(3);
    const auto D = CauchyMatrix::build(4, spec);
    std::vector<SymbolVec> W{SymbolVec(spec, {1}), SymbolVec(spec, {2})};
    KeyVector V{{SymbolVec(spec, {0})}}; // only one key, need Z = 2
    CHECK_THROWS_AS(share(W, V, D), sdc::ProtocolError);
}

TEST_CASE("exhaustive leakage oracle: Cauchy sharing leaks nothing") {
    for (int F = 2; F <= 4; ++F) {
        const auto spec = sdc::gf::field_for(F);
        const auto D = CauchyMatrix::build(F, spec);
        for (int Z = 1; Z < F; ++Z) {
            const auto rep = share_leakage_oracle(D, Z);
            CHECK(rep.leak_free());
            CHECK(rep.space_size > 0);
        }
    }
}

TEST_CASE("exhaustive leakage oracle: identity sharing leaks") {
    // With D = I, share A_1 literally equals W_1: any single observed
    // share pins down a data symbol, so Z = 1 must flag a leak.
    const auto gf4 = FieldSpec::canonical(2);
    const auto I = CauchyMatrix::unaudited({{1, 0}, {0, 1}}, gf4);
    const auto rep = share_leakage_oracle(I, 1);
    CHECK_FALSE(rep.leak_free());
    CHECK(rep.worst_subset.has_value());
}

TEST_CASE("leakage oracle rejects oversized spaces") {
    const auto spec = sdc::gf::field_for(4);
    const auto D = CauchyMatrix::build(4, spec);
    CHECK_THROWS_AS(share_leakage_oracle(D, 2, /*budget=*/16), sdc::ConfigError);
}
