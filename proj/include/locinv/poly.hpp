#pragma once

// Dense univariate polynomials over a field. Coefficients are stored low
// degree first; the zero polynomial has an empty coefficient vector.

#include <vector>

#include "locinv/field.hpp"

namespace locinv {

struct Poly {
    Field f;
    std::vector<Fe> c;  // c[i] = coefficient of X^i, no trailing zeros

    Poly() = default;
    explicit Poly(const Field& fld) : f(fld) {}
    Poly(const Field& fld, std::vector<Fe> coeffs) : f(fld), c(std::move(coeffs)) {
        normalize();
    }

    bool is_zero() const { return c.empty(); }
    // degree of the zero polynomial is reported as -1
    long degree() const { return static_cast<long>(c.size()) - 1; }
    void normalize();
    bool is_monic() const;
    Fe coeff(size_t i) const { return i < c.size() ? c[i] : f.zero(); }
};

bool poly_eq(const Poly& a, const Poly& b);
Poly poly_one(const Field& f);
Poly poly_x(const Field& f);
Poly poly_add(const Poly& a, const Poly& b);
Poly poly_sub(const Poly& a, const Poly& b);
Poly poly_mul(const Poly& a, const Poly& b);
// Quotient and remainder; b must be nonzero.
struct PolyDiv {
    Poly q, r;
};
PolyDiv poly_divmod(const Poly& a, const Poly& b);
Poly poly_mod(const Poly& a, const Poly& b);
// Monic gcd; gcd(0,0) = 0.
Poly poly_gcd(const Poly& a, const Poly& b);
// Monic lcm via a*b / gcd(a,b).
Poly poly_lcm(const Poly& a, const Poly& b);
bool poly_divides(const Poly& d, const Poly& a);
Poly poly_make_monic(const Poly& a);

}  // namespace locinv
