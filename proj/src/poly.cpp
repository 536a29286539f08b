#include "locinv/poly.hpp"

namespace locinv {

void Poly::normalize() {
    while (!c.empty() && f.is_zero(c.back())) c.pop_back();
}

bool Poly::is_monic() const {
    return !c.empty() && f.eq(c.back(), f.one());
}

bool poly_eq(const Poly& a, const Poly& b) {
    if (a.f != b.f) throw MismatchedField("poly_eq");
    if (a.c.size() != b.c.size()) return false;
    for (size_t i = 0; i < a.c.size(); ++i)
        if (!a.f.eq(a.c[i], b.c[i])) return false;
    return true;
}

Poly poly_one(const Field& f) { return Poly(f, {f.one()}); }

Poly poly_x(const Field& f) { return Poly(f, {f.zero(), f.one()}); }

Poly poly_add(const Poly& a, const Poly& b) {
    if (a.f != b.f) throw MismatchedField("poly_add");
    Poly out(a.f);
    out.c.resize(std::max(a.c.size(), b.c.size()), a.f.zero());
    for (size_t i = 0; i < out.c.size(); ++i)
        out.c[i] = a.f.add(a.coeff(i), b.coeff(i));
    out.normalize();
    return out;
}

Poly poly_sub(const Poly& a, const Poly& b) {
    if (a.f != b.f) throw MismatchedField("poly_sub");
    Poly out(a.f);
    out.c.resize(std::max(a.c.size(), b.c.size()), a.f.zero());
    for (size_t i = 0; i < out.c.size(); ++i)
        out.c[i] = a.f.sub(a.coeff(i), b.coeff(i));
    out.normalize();
    return out;
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.f != b.f) throw MismatchedField("poly_mul");
    if (a.is_zero() || b.is_zero()) return Poly(a.f);
    Poly out(a.f);
    out.c.assign(a.c.size() + b.c.size() - 1, a.f.zero());
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.f.is_zero(a.c[i])) continue;
        for (size_t j = 0; j < b.c.size(); ++j)
            out.c[i + j] = a.f.add(out.c[i + j], a.f.mul(a.c[i], b.c[j]));
    }
    out.normalize();
    return out;
}

PolyDiv poly_divmod(const Poly& a, const Poly& b) {
    if (a.f != b.f) throw MismatchedField("poly_divmod");
    if (b.is_zero()) throw ValueOutOfRange("polynomial division by zero");
    const Field& f = a.f;
    PolyDiv out{Poly(f), a};
    if (a.c.size() < b.c.size()) return out;
    out.q.c.assign(a.c.size() - b.c.size() + 1, f.zero());
    Fe lead_inv = f.inv(b.c.back());
    while (!out.r.is_zero() && out.r.c.size() >= b.c.size()) {
        size_t shift = out.r.c.size() - b.c.size();
        Fe coef = f.mul(out.r.c.back(), lead_inv);
        out.q.c[shift] = coef;
        for (size_t i = 0; i < b.c.size(); ++i)
            out.r.c[shift + i] = f.sub(out.r.c[shift + i], f.mul(coef, b.c[i]));
        out.r.normalize();
    }
    out.q.normalize();
    return out;
}

Poly poly_mod(const Poly& a, const Poly& b) { return poly_divmod(a, b).r; }

Poly poly_make_monic(const Poly& a) {
    if (a.is_zero()) return a;
    Poly out = a;
    Fe inv = a.f.inv(a.c.back());
    for (auto& coef : out.c) coef = a.f.mul(coef, inv);
    return out;
}

Poly poly_gcd(const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = poly_mod(x, y);
        x = y;
        y = r;
    }
    return poly_make_monic(x);
}

Poly poly_lcm(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly(a.f);
    Poly g = poly_gcd(a, b);
    Poly prod = poly_mul(a, b);
    return poly_make_monic(poly_divmod(prod, g).q);
}

bool poly_divides(const Poly& d, const Poly& a) {
    if (d.is_zero()) return a.is_zero();
    return poly_mod(a, d).is_zero();
}

}  // namespace locinv
