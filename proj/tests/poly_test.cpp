#include <doctest.h>

#include <vector>

#include "locinv/poly.hpp"

using namespace locinv;

namespace {

Poly make(const Field& f, std::initializer_list<uint64_t> coeffs) {
    std::vector<Fe> c;
    for (uint64_t v : coeffs) c.push_back(f.from_uint(v));
    return Poly(f, std::move(c));
}

}  // namespace

TEST_CASE("normalization and degree") {
    Field f = Field::gfp(5);
    Poly p = make(f, {1, 2, 0, 0});
    CHECK(p.degree() == 1);
    CHECK(p.c.size() == 2);
    Poly z = make(f, {0, 0});
    CHECK(z.is_zero());
    CHECK(z.degree() == -1);
    CHECK(poly_one(f).degree() == 0);
    CHECK(poly_x(f).degree() == 1);
    CHECK(poly_x(f).is_monic());
}

TEST_CASE("ring operations over gf2") {
    Field f = Field::gf2();
    Poly x = poly_x(f);
    Poly x1 = poly_add(x, poly_one(f));       // X + 1
    Poly sq = poly_mul(x1, x1);               // X^2 + 1 (freshman's dream)
    CHECK(sq.degree() == 2);
    CHECK(f.eq(sq.coeff(0), f.one()));
    CHECK(f.is_zero(sq.coeff(1)));
    CHECK(f.eq(sq.coeff(2), f.one()));
    CHECK(poly_eq(poly_sub(sq, sq), Poly(f)));
    CHECK(poly_eq(poly_add(x1, x1), Poly(f)));
}

TEST_CASE("division with remainder") {
    Field f = Field::gfp(7);
    Poly a = make(f, {3, 0, 1, 2});  // 2X^3 + X^2 + 3
    Poly b = make(f, {1, 1});        // X + 1
    PolyDiv d = poly_divmod(a, b);
    CHECK(poly_eq(poly_add(poly_mul(d.q, b), d.r), a));
    CHECK(d.r.degree() < b.degree());
    CHECK(poly_eq(poly_mod(a, b), d.r));
    // exact division
    Poly prod = poly_mul(a, b);
    PolyDiv e = poly_divmod(prod, b);
    CHECK(e.r.is_zero());
    CHECK(poly_eq(e.q, a));
    CHECK(poly_divides(b, prod));
    CHECK_FALSE(poly_divides(make(f, {5, 1, 1}), a));
}

TEST_CASE("gcd and lcm are monic and consistent") {
    Field f = Field::gfp(5);
    Poly a = poly_mul(make(f, {1, 1}), make(f, {2, 0, 1}));   // (X+1)(X^2+2)
    Poly b = poly_mul(make(f, {1, 1}), make(f, {3, 1}));      // (X+1)(X+3)
    Poly g = poly_gcd(a, b);
    CHECK(g.is_monic());
    CHECK(poly_eq(g, make(f, {1, 1})));
    Poly l = poly_lcm(a, b);
    CHECK(l.is_monic());
    CHECK(poly_divides(a, l));
    CHECK(poly_divides(b, l));
    CHECK(l.degree() == a.degree() + b.degree() - g.degree());
    // gcd with scalar multiples stays monic
    Poly a3 = a;
    for (auto& c : a3.c) c = f.mul(c, f.from_uint(3));
    CHECK(poly_eq(poly_gcd(a3, b), g));
    CHECK(poly_gcd(Poly(f), Poly(f)).is_zero());
}

TEST_CASE("make monic") {
    Field f = Field::gfp(7);
    Poly p = make(f, {2, 4, 3});
    Poly m = poly_make_monic(p);
    CHECK(m.is_monic());
    CHECK(f.to_mpz(m.coeff(0)) == 3);  // 2 * inv(3) = 2 * 5 = 10 = 3 mod 7
    CHECK(f.to_mpz(m.coeff(1)) == 6);  // 4 * 5 = 20 = 6 mod 7
}
