#include "locinv/targets.hpp"

namespace locinv {

size_t rsa_bits(const mpz_class& n) { return mpz_sizeinbase(n.get_mpz_t(), 2); }

RsaInstance RsaInstance::create(const mpz_class& p, const mpz_class& q,
                                const mpz_class& e) {
    if (p == q) throw BadInstance("RSA primes must be distinct");
    if (mpz_probab_prime_p(p.get_mpz_t(), 32) == 0 ||
        mpz_probab_prime_p(q.get_mpz_t(), 32) == 0)
        throw BadInstance("RSA parameter is not prime");
    if (mpz_even_p(p.get_mpz_t()) || mpz_even_p(q.get_mpz_t()))
        throw BadInstance("RSA primes must be odd");
    RsaInstance inst;
    inst.p = p;
    inst.q = q;
    inst.e = e;
    inst.n = p * q;
    inst.phi = (p - 1) * (q - 1);
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), e.get_mpz_t(), inst.phi.get_mpz_t());
    if (g != 1) throw BadInstance("RSA exponent is not coprime to phi");
    inst.l = rsa_bits(inst.n);
    return inst;
}

namespace {

void check_rsa_params(const mpz_class& n, const mpz_class& other, const char* what) {
    if (n < 6) throw BadInstance("RSA modulus too small");
    if (other < 0 || other >= n) throw BadInstance(what);
}

}  // namespace

BlackBoxMap rsa_fe_map(const mpz_class& n, const mpz_class& e) {
    if (n < 6) throw BadInstance("RSA modulus too small");
    if (e < 2) throw BadInstance("RSA exponent must be at least 2");
    size_t l = rsa_bits(n);
    BlackBoxMap map;
    map.field = Field::gf2();
    map.n_in = map.n_out = l;
    map.name = "rsa_fe";
    map.fn = [n, e, l](const StateVec& x) {
        mpz_class v = decode_value(x) % n;
        mpz_class r;
        mpz_powm(r.get_mpz_t(), v.get_mpz_t(), e.get_mpz_t(), n.get_mpz_t());
        return encode_value(x.field(), l, r);
    };
    return map;
}

BlackBoxMap rsa_fc_map(const mpz_class& n, const mpz_class& c) {
    check_rsa_params(n, c, "ciphertext must lie in [0, n)");
    size_t l = rsa_bits(n);
    BlackBoxMap map;
    map.field = Field::gf2();
    map.n_in = map.n_out = l;
    map.name = "rsa_fc";
    map.fn = [n, c, l](const StateVec& x) {
        mpz_class v = decode_value(x) % n;
        mpz_class r;
        mpz_powm(r.get_mpz_t(), c.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
        return encode_value(x.field(), l, r);
    };
    return map;
}

uint64_t mul_order(const mpz_class& a, const mpz_class& m, uint64_t bound) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    if (g != 1) throw BadInstance("mul_order of a non-unit");
    mpz_class acc = a % m;
    for (uint64_t k = 1; k <= bound; ++k) {
        if (acc == 1) return k;
        acc = (acc * a) % m;
    }
    throw ValueOutOfRange("multiplicative order exceeds bound");
}

}  // namespace locinv
