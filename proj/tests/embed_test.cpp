#include <doctest.h>

#include <cstdint>
#include <random>
#include <vector>

#include "locinv/embed.hpp"
#include "locinv/errors.hpp"
#include "locinv/oracle.hpp"

using namespace locinv;

namespace {

StateVec gf2_vec(std::initializer_list<int> bits) {
    StateVec v(Field::gf2(), bits.size());
    size_t i = 0;
    for (int b : bits) v.set_bit(i++, b != 0);
    return v;
}

// F(x1, x2) = (x1, x2, x1 + x2): the smallest useful GF(2) embedding.
BlackBoxMap parity_embed() {
    BlackBoxMap m;
    m.field = Field::gf2();
    m.n_in = 2;
    m.n_out = 3;
    m.name = "parity";
    m.fn = [](const StateVec& x) {
        StateVec out(x.field(), 3);
        out.set_bit(0, x.bit(0));
        out.set_bit(1, x.bit(1));
        out.set_bit(2, x.bit(0) ^ x.bit(1));
        return out;
    };
    return m;
}

// Random function GF(2)^3 -> GF(2)^5 from a table of 8 images.
BlackBoxMap random_embed(std::mt19937_64& rng) {
    std::vector<uint64_t> table(8);
    for (auto& v : table) v = rng() % 32;
    BlackBoxMap m;
    m.field = Field::gf2();
    m.n_in = 3;
    m.n_out = 5;
    m.name = "rand35";
    m.fn = [table](const StateVec& x) {
        return encode_value(x.field(), 5, table[decode_index(x)]);
    };
    return m;
}

}  // namespace

TEST_CASE("projection windows slide over the state") {
    StateVec x = gf2_vec({1, 0, 1, 1, 0});
    CHECK(project(1, x, 3) == gf2_vec({1, 0, 1}));
    CHECK(project(2, x, 3) == gf2_vec({0, 1, 1}));
    CHECK(project(3, x, 3) == gf2_vec({1, 1, 0}));
    CHECK(project(1, x, 5) == x);
    CHECK_THROWS_AS((void)project(4, x, 3), IndexOutOfRange);
    CHECK_THROWS_AS((void)project(0, x, 3), IndexOutOfRange);
    CHECK_THROWS_AS((void)project(1, x, 6), DimensionMismatch);
}

TEST_CASE("projection windows over non-binary fields") {
    Field f = Field::gfp(7);
    StateVec x(f, 4);
    for (size_t i = 0; i < 4; ++i) x.set(i, f.from_uint(i + 1));
    StateVec w = project(2, x, 2);
    CHECK(f.to_mpz(w.get(0)) == 2);
    CHECK(f.to_mpz(w.get(1)) == 3);
}

TEST_CASE("embedding solver recovers a consistent target") {
    BlackBoxMap m = parity_embed();
    StateVec y = gf2_vec({1, 0, 1});
    InversionOutcome out = invert_embedding(m, y, 16);
    REQUIRE(out.concluded());
    CHECK(*out.solution() == gf2_vec({1, 0}));
    REQUIRE(out.projection.has_value());
    CHECK(out.notes.size() == 2);  // t + 1 windows, all reported
    bool any_verified = false;
    for (const auto& note : out.notes) {
        CHECK(note.index >= 1);
        CHECK(note.index <= 2);
        if (note.cross_verified) any_verified = true;
    }
    CHECK(any_verified);
    CHECK(m.eval(*out.solution()) == y);
}

TEST_CASE("embedding solver refuses an inconsistent target") {
    BlackBoxMap m = parity_embed();
    StateVec y = gf2_vec({1, 0, 0});  // parity bit contradicts the pair
    InversionOutcome out = invert_embedding(m, y, 16);
    CHECK(std::holds_alternative<NoConclusion>(out.result));
    CHECK_FALSE(out.projection.has_value());
    // windows still conclude locally, but cross-verification rejects them
    CHECK(out.notes.size() == 2);
    for (const auto& note : out.notes) CHECK_FALSE(note.cross_verified);
}

TEST_CASE("embedding solver validates shapes") {
    BlackBoxMap m = parity_embed();
    CHECK_THROWS_AS((void)invert_embedding(m, gf2_vec({1, 0}), 8), MismatchedField);
    BlackBoxMap shrink = m;
    shrink.n_in = 4;
    CHECK_THROWS_AS((void)invert_embedding(shrink, gf2_vec({1, 0, 1}), 8),
                    DimensionMismatch);
}

TEST_CASE("square maps pass through as the single window") {
    BlackBoxMap sq;
    sq.field = Field::gf2();
    sq.n_in = sq.n_out = 2;
    sq.name = "swap";
    sq.fn = [](const StateVec& x) {
        StateVec out(x.field(), 2);
        out.set_bit(0, x.bit(1));
        out.set_bit(1, x.bit(0));
        return out;
    };
    StateVec y = gf2_vec({1, 0});
    InversionOutcome out = invert_embedding(sq, y, 8);
    REQUIRE(out.concluded());
    CHECK(*out.solution() == gf2_vec({0, 1}));
    CHECK(out.projection == 1);
}

TEST_CASE("any conclusion on random embeddings is a true preimage") {
    std::mt19937_64 rng(59);
    int concluded = 0, refused = 0;
    for (int t = 0; t < 40; ++t) {
        BlackBoxMap m = random_embed(rng);
        for (uint64_t yi = 0; yi < 32; yi += 3) {
            StateVec y = encode_value(m.field, 5, yi);
            InversionOutcome out = invert_embedding(m, y, 20);
            std::vector<StateVec> truth = brute_invert(m, y);
            if (out.concluded()) {
                ++concluded;
                bool member = false;
                for (const auto& x : truth) member = member || x == *out.solution();
                CHECK(member);
            } else {
                ++refused;
            }
        }
    }
    // soundness is unconditional; usefulness means it concludes somewhere
    CHECK(concluded > 0);
    CHECK(refused > 0);
}
