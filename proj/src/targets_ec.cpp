#include "locinv/targets.hpp"

namespace locinv {

namespace {

mpz_class mod_inv(const mpz_class& a, const mpz_class& q) {
    mpz_class r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), q.get_mpz_t()) == 0)
        throw BadInstance("non-invertible denominator mod q");
    return r;
}

mpz_class mod_q(mpz_class v, const mpz_class& q) {
    v %= q;
    if (v < 0) v += q;
    return v;
}

size_t ceil_log2(const mpz_class& v) {
    if (v <= 1) return 0;
    size_t bits = mpz_sizeinbase(v.get_mpz_t(), 2);
    mpz_class pow2 = 1;
    pow2 <<= (bits - 1);
    return pow2 == v ? bits - 1 : bits;
}

}  // namespace

EcCurve::EcCurve(mpz_class qq, mpz_class aa, mpz_class bb)
    : q(std::move(qq)), A(std::move(aa)), B(std::move(bb)) {
    if (q < 5 || mpz_probab_prime_p(q.get_mpz_t(), 32) == 0)
        throw BadInstance("curve modulus must be a prime >= 5");
    A = mod_q(A, q);
    B = mod_q(B, q);
    mpz_class disc = mod_q(4 * A * A * A + 27 * B * B, q);
    if (disc == 0) throw BadInstance("singular curve: 4A^3 + 27B^2 = 0");
}

bool EcCurve::on_curve(const EcPoint& p) const {
    if (p.inf) return true;
    if (p.x < 0 || p.x >= q || p.y < 0 || p.y >= q) return false;
    mpz_class lhs = mod_q(p.y * p.y, q);
    mpz_class rhs = mod_q(p.x * p.x * p.x + A * p.x + B, q);
    return lhs == rhs;
}

EcPoint EcCurve::neg(const EcPoint& p) const {
    if (p.inf) return p;
    return EcPoint(p.x, p.y == 0 ? mpz_class(0) : mpz_class(q - p.y));
}

EcPoint EcCurve::dbl(const EcPoint& p) const {
    if (p.inf || p.y == 0) return EcPoint();
    mpz_class lam = mod_q((3 * p.x * p.x + A) * mod_inv(mod_q(2 * p.y, q), q), q);
    mpz_class x3 = mod_q(lam * lam - 2 * p.x, q);
    mpz_class y3 = mod_q(lam * (p.x - x3) - p.y, q);
    return EcPoint(std::move(x3), std::move(y3));
}

EcPoint EcCurve::add(const EcPoint& p, const EcPoint& r) const {
    if (p.inf) return r;
    if (r.inf) return p;
    if (p.x == r.x) {
        if (mod_q(p.y + r.y, q) == 0) return EcPoint();
        return dbl(p);
    }
    mpz_class lam = mod_q((r.y - p.y) * mod_inv(mod_q(r.x - p.x, q), q), q);
    mpz_class x3 = mod_q(lam * lam - p.x - r.x, q);
    mpz_class y3 = mod_q(lam * (p.x - x3) - p.y, q);
    return EcPoint(std::move(x3), std::move(y3));
}

EcPoint EcCurve::scalar_mul(const mpz_class& k, const EcPoint& p) const {
    if (!on_curve(p)) throw NotOnCurve();
    if (k < 0) throw ValueOutOfRange("negative scalar");
    EcPoint acc;  // infinity
    EcPoint base = p;
    mpz_class e = k;
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) acc = add(acc, base);
        base = dbl(base);
        e >>= 1;
    }
    return acc;
}

EcdlpInstance::EcdlpInstance(EcCurve c, EcPoint p, EcPoint q_pt, const mpz_class& order)
    : curve(std::move(c)), P(std::move(p)), Q(std::move(q_pt)), n_ord(order) {
    if (!curve.on_curve(P) || P.inf) throw BadInstance("base point invalid");
    if (!curve.on_curve(Q)) throw BadInstance("target point not on curve");
    if (n_ord < 2) throw BadInstance("base point order must be >= 2");
    if (!curve.scalar_mul(n_ord, P).inf)
        throw BadInstance("claimed order does not annihilate the base point");
    // Hasse sanity: the subgroup order cannot exceed the curve cardinality.
    mpz_class root;
    mpz_sqrt(root.get_mpz_t(), curve.q.get_mpz_t());
    if (n_ord > curve.q + 1 + 2 * (root + 1))
        throw BadInstance("order violates the Hasse bound");
    r = ceil_log2(n_ord);
    if (r == 0) r = 1;
    wq = ceil_log2(curve.q);
    l = 2 * wq;
    if (r >= l) throw BadInstance("multiplier width must be below point width");
}

StateVec ec_encode_point(const EcdlpInstance& inst, const EcPoint& p) {
    if (p.inf) throw InfinityEncoding();
    Field f = Field::gf2();
    StateVec out(f, inst.l);
    for (size_t i = 0; i < inst.wq; ++i) {
        out.set_bit(i, mpz_tstbit(p.x.get_mpz_t(), i));
        out.set_bit(inst.wq + i, mpz_tstbit(p.y.get_mpz_t(), i));
    }
    return out;
}

BlackBoxMap ecdlp_map(const EcdlpInstance& inst) {
    BlackBoxMap map;
    map.field = Field::gf2();
    map.n_in = inst.r;
    map.n_out = inst.l;
    map.name = "ecdlp";
    auto shared = std::make_shared<EcdlpInstance>(inst);
    map.fn = [shared](const StateVec& x) {
        mpz_class k = decode_value(x) % shared->n_ord;
        if (k == 0) throw InfinityEncoding();
        EcPoint r = shared->curve.scalar_mul(k, shared->P);
        return ec_encode_point(*shared, r);
    };
    return map;
}

}  // namespace locinv
