#include <doctest.h>

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "locinv/errors.hpp"
#include "locinv/oracle.hpp"
#include "locinv/targets.hpp"

using namespace locinv;

namespace {

BlackBoxMap identity_map(size_t n) {
    BlackBoxMap m;
    m.field = Field::gf2();
    m.n_in = m.n_out = n;
    m.name = "id";
    m.fn = [](const StateVec& v) { return v; };
    return m;
}

BlackBoxMap constant_map(size_t n, uint64_t c) {
    BlackBoxMap m;
    m.field = Field::gf2();
    m.n_in = m.n_out = n;
    m.name = "const";
    m.fn = [n, c](const StateVec& v) { return encode_value(v.field(), n, c); };
    return m;
}

}  // namespace

TEST_CASE("brute force inversion") {
    SUBCASE("identity has a single preimage") {
        BlackBoxMap m = identity_map(4);
        StateVec y = encode_value(m.field, 4, 11);
        auto pre = brute_invert(m, y);
        REQUIRE(pre.size() == 1);
        CHECK(pre[0] == y);
    }
    SUBCASE("constant maps send everything to one point") {
        BlackBoxMap m = constant_map(4, 7);
        auto all = brute_invert(m, encode_value(m.field, 4, 7));
        CHECK(all.size() == 16);
        auto none = brute_invert(m, encode_value(m.field, 4, 8));
        CHECK(none.empty());
    }
    SUBCASE("modular reduction aliases large inputs") {
        // the 6-bit domain holds 64 states but the modulus is 33, so
        // x and x + 33 collide for x < 31
        BlackBoxMap m = rsa_fe_map(33, 3);
        auto pre = brute_invert(m, encode_value(m.field, 6, 26));
        REQUIRE(pre.size() == 2);
        CHECK(decode_index(pre[0]) == 5);
        CHECK(decode_index(pre[1]) == 38);
    }
    SUBCASE("results are ordered by index") {
        BlackBoxMap m = constant_map(3, 0);
        auto all = brute_invert(m, encode_value(m.field, 3, 0));
        for (size_t i = 0; i + 1 < all.size(); ++i)
            CHECK(decode_index(all[i]) < decode_index(all[i + 1]));
    }
}

TEST_CASE("oracle guard rejects huge domains") {
    BlackBoxMap m = identity_map(30);  // 2^30 states
    StateVec y(m.field, 30);
    CHECK_THROWS_AS((void)brute_invert(m, y), DomainTooLarge);
    CHECK_THROWS_AS((void)orbit_decompose(m), DomainTooLarge);
}

TEST_CASE("orbit decomposition of a rho shape") {
    // 0 -> 1 -> 2 -> 0 cycle with the tail 3 -> 0
    BlackBoxMap m = lut_map(2, {1, 2, 0, 0});
    OrbitDecomposition d = orbit_decompose(m);
    CHECK(d.states == 4);
    REQUIRE(d.periods.size() == 1);
    CHECK(d.periods[0] == 3);
    CHECK(d.orbit_id == std::vector<uint32_t>{0, 0, 0, 0});
    CHECK(d.preperiod == std::vector<uint32_t>{0, 0, 0, 1});
    CHECK(d.goe == std::vector<uint64_t>{3});
    CHECK(d.on_cycle(0));
    CHECK(d.on_cycle(2));
    CHECK_FALSE(d.on_cycle(3));
    CHECK(d.period_of(3) == 3);
}

TEST_CASE("orbit decomposition with several cycles") {
    // fixed points 0 and 1, transposition 2 <-> 3
    BlackBoxMap m = lut_map(2, {0, 1, 3, 2});
    OrbitDecomposition d = orbit_decompose(m);
    CHECK(d.periods.size() == 3);
    CHECK(d.goe.empty());  // a permutation has no garden of eden
    for (uint64_t i = 0; i < 4; ++i) CHECK(d.on_cycle(i));
    CHECK(d.period_of(0) == 1);
    CHECK(d.period_of(1) == 1);
    CHECK(d.period_of(2) == 2);
    CHECK(d.period_of(3) == 2);
    CHECK(d.orbit_id[2] == d.orbit_id[3]);
    CHECK(d.orbit_id[0] != d.orbit_id[1]);
}

TEST_CASE("orbit decomposition of a longer tail") {
    // 5 -> 4 -> 3 -> 2 -> 1 -> 0 -> 0: one fixed point, tail length 5
    BlackBoxMap m = lut_map(3, {0, 0, 1, 2, 3, 4, 6, 7});
    OrbitDecomposition d = orbit_decompose(m);
    CHECK(d.period_of(5) == 1);
    CHECK(d.preperiod[5] == 5);
    CHECK(d.preperiod[1] == 1);
    CHECK(d.preperiod[0] == 0);
    CHECK(d.goe == std::vector<uint64_t>{5});
}

TEST_CASE("absent preimage is equivalent to garden of eden membership") {
    std::mt19937_64 rng(23);
    for (int t = 0; t < 10; ++t) {
        size_t n = 3 + t % 3;
        uint64_t size = uint64_t(1) << n;
        std::vector<uint64_t> table(size);
        for (auto& v : table) v = rng() % size;
        BlackBoxMap m = lut_map(n, table);
        OrbitDecomposition d = orbit_decompose(m);
        std::set<uint64_t> goe(d.goe.begin(), d.goe.end());
        for (uint64_t yi = 0; yi < size; ++yi) {
            StateVec y = encode_value(m.field, n, yi);
            CHECK(brute_invert(m, y).empty() == (goe.count(yi) == 1));
        }
    }
}

TEST_CASE("exact linear complexity of reference orbits") {
    SUBCASE("identity fixes everything with lc 1") {
        BlackBoxMap m = identity_map(3);
        StateVec y = encode_value(m.field, 3, 5);
        ExactLc ex = exact_lc(m, y);
        CHECK(ex.period == 1);
        CHECK(ex.lc == 1);
        CHECK(ex.minpoly.degree == 1);
        CHECK(m.field.eq(ex.minpoly.alpha[0], m.field.one()));  // X - 1
        CHECK(poly_order(ex.minpoly, 10) == 1);
    }
    SUBCASE("a 4-cycle with complexity below the period") {
        // S = 00, 11, 01, 10 repeating: (X+1)^2 S is the constant stream 10,
        // (X+1)^3 kills it, so lc = 3 < period = 4
        BlackBoxMap m = lut_map(2, {3, 0, 1, 2});  // 0 -> 3 -> 2 -> 1 -> 0
        StateVec y = encode_value(m.field, 2, 0);
        ExactLc ex = exact_lc(m, y);
        CHECK(ex.period == 4);
        CHECK(ex.lc == 3);
        CHECK(poly_order(ex.minpoly, 10) == 4);
    }
    SUBCASE("power trail mod 33 has full linear complexity") {
        // S = 26, 20, 14, 5 repeating; (X+1)^3 leaves a nonzero constant
        // stream, so the minimal polynomial is (X+1)^4 = X^4 + 1
        BlackBoxMap m = rsa_fe_map(33, 3);
        StateVec y = encode_value(m.field, 6, 26);
        ExactLc ex = exact_lc(m, y);
        CHECK(ex.period == 4);
        CHECK(ex.lc == 4);
        const Field& f = m.field;
        CHECK(f.eq(ex.minpoly.alpha[0], f.one()));
        CHECK(f.is_zero(ex.minpoly.alpha[1]));
        CHECK(f.is_zero(ex.minpoly.alpha[2]));
        CHECK(f.is_zero(ex.minpoly.alpha[3]));
        CHECK(poly_order(ex.minpoly, 10) == 4);
    }
}

TEST_CASE("exact lc requires a periodic state") {
    BlackBoxMap m = lut_map(2, {1, 2, 3, 3});
    StateVec y = encode_value(m.field, 2, 0);  // 0 -> 1 -> 2 -> 3 -> 3: no return
    CHECK_THROWS_AS((void)exact_lc(m, y), NotPeriodic);
    // a guard below the period also refuses
    BlackBoxMap c = lut_map(2, {1, 2, 3, 0});
    StateVec z = encode_value(c.field, 2, 0);
    CHECK_THROWS_AS((void)exact_lc(c, z, 3), NotPeriodic);
    CHECK(exact_lc(c, z, 4).period == 4);
}

TEST_CASE("exact lc minimality against the engine certificate") {
    std::mt19937_64 rng(29);
    for (int t = 0; t < 12; ++t) {
        uint64_t size = 32;
        std::vector<uint64_t> table(size);
        for (auto& v : table) v = rng() % size;
        BlackBoxMap m = lut_map(5, table);
        OrbitDecomposition d = orbit_decompose(m);
        for (uint64_t yi = 0; yi < size; ++yi) {
            if (!d.on_cycle(yi)) continue;
            StateVec y = encode_value(m.field, 5, yi);
            ExactLc ex = exact_lc(m, y);
            CHECK(ex.period == d.period_of(yi));
            CHECK(ex.lc <= ex.period);
            if (ex.lc == 0) continue;
            // minimality: one degree lower must fail the Hankel acceptance
            InversionOutcome out =
                invert_local(m, y, 2 * ex.period + 2, {.early_shortcut = false});
            REQUIRE(std::holds_alternative<Solved>(out.result));
            CHECK(std::get<Solved>(out.result).lc == ex.lc);
        }
    }
}
