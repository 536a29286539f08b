#pragma once

// Concrete attack targets, each packaged as a black-box map so the same
// inversion engine applies uniformly:
//
//   spn_kpa_map      key-recovery map K -> E_K(P) of a toy 16-bit SPN
//   stream_kpa_map   key -> keystream window of a toy filter generator
//   rsa_fe_map       (x) -> (decode(x) mod n)^e mod n on l = bitlen(n) bits
//   rsa_fc_map       (x) -> c^(decode(x) mod n) mod n       (CCA exponent map)
//   dlp_fp_map       x -> a^x mod p, scalar map over GF(p)
//   dlp_f2w_map      bits -> representation of a^[bits] in GF(2^w)
//   ecdlp_map        multiplier bits -> encoded [k]P, an r -> 2*wq embedding
//   lut_map          arbitrary small map given by a lookup table (fixtures)

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "locinv/lrs.hpp"

namespace locinv {

// ---------------------------------------------------------------------------
// Toy SPN: 16-bit block and key, 4 rounds. Round = key mix, 4-bit S-box on
// each nibble, fixed bit permutation; a final whitening key follows round 4.
// Round keys are rotations of the key xored with round constants.
struct SpnCipher {
    static constexpr unsigned kRounds = 4;
    static uint16_t encrypt(uint16_t key, uint16_t pt);
    static uint16_t decrypt(uint16_t key, uint16_t ct);
    static uint16_t sbox_layer(uint16_t v);
    static uint16_t inv_sbox_layer(uint16_t v);
    static uint16_t permute(uint16_t v);
    static uint16_t inv_permute(uint16_t v);
    static std::array<uint16_t, kRounds + 1> round_keys(uint16_t key);
};

// Known-plaintext key-recovery map F_P(K) = E_K(P) over GF(2)^16.
BlackBoxMap spn_kpa_map(uint16_t plaintext);

// ---------------------------------------------------------------------------
// Toy stream cipher: 24-bit LFSR (primitive feedback) with a nonlinear output
// filter. The generator is seeded with state = key (16 bits) || iv (8 bits);
// keystream bit w(k) is the filter applied to the state after k clocks.
struct StreamCipher {
    static constexpr unsigned kStateBits = 24;
    static constexpr unsigned kKeyBits = 16;
    static constexpr unsigned kIvBits = 8;
    // Feedback mask: taps of x^24 + x^23 + x^22 + x^17 + 1.
    static uint32_t step(uint32_t state);
    static bool filter(uint32_t state);
    static uint32_t seed(uint16_t key, uint8_t iv);
    // w(k0), ..., w(k0+len-1)
    static std::vector<bool> keystream(uint16_t key, uint8_t iv, size_t k0, size_t len);
};

// Key-recovery map K -> 16 keystream bits starting at clock k0, over GF(2)^16.
BlackBoxMap stream_kpa_map(uint8_t iv, size_t k0 = 8);

// ---------------------------------------------------------------------------
// RSA. Maps are built from the public pair (n, e) alone; RsaInstance exists
// for tests and samplers that construct moduli from known primes.
struct RsaInstance {
    mpz_class p, q, n, e, phi;
    size_t l = 0;  // bit length of n
    static RsaInstance create(const mpz_class& p, const mpz_class& q,
                              const mpz_class& e);
};

size_t rsa_bits(const mpz_class& n);
BlackBoxMap rsa_fe_map(const mpz_class& n, const mpz_class& e);
BlackBoxMap rsa_fc_map(const mpz_class& n, const mpz_class& c);

// ---------------------------------------------------------------------------
// Discrete log over GF(p): scalar map x -> a^x mod p on the full residue
// domain [0, p-1] (note a^0 = a^(p-1) = 1, so 0 never appears as an output).
BlackBoxMap dlp_fp_map(const mpz_class& p, const mpz_class& a);

// Discrete log over GF(2^w): w bits -> representation of a^[bits], where
// [bits] reads the window LSB-first by default; reversed_decode flips it.
BlackBoxMap dlp_f2w_map(unsigned w, uint64_t reduction, uint64_t a,
                        bool reversed_decode = false);

// Standard irreducible reduction polynomials shipped for convenience.
std::optional<uint64_t> standard_reduction(unsigned w);

// Multiplicative order of a mod m by iterated multiplication (m small).
uint64_t mul_order(const mpz_class& a, const mpz_class& m, uint64_t bound);

// ---------------------------------------------------------------------------
// Elliptic curves, short Weierstrass y^2 = x^3 + A x + B over GF(q), affine.
struct EcPoint {
    mpz_class x, y;
    bool inf = true;
    EcPoint() = default;
    EcPoint(mpz_class px, mpz_class py) : x(std::move(px)), y(std::move(py)), inf(false) {}
    bool operator==(const EcPoint& o) const {
        return inf == o.inf && (inf || (x == o.x && y == o.y));
    }
};

struct EcCurve {
    mpz_class q, A, B;
    EcCurve(mpz_class qq, mpz_class aa, mpz_class bb);  // checks discriminant
    bool on_curve(const EcPoint& p) const;
    EcPoint add(const EcPoint& p, const EcPoint& r) const;
    EcPoint dbl(const EcPoint& p) const;
    EcPoint neg(const EcPoint& p) const;
    EcPoint scalar_mul(const mpz_class& k, const EcPoint& p) const;  // NotOnCurve
};

struct EcdlpInstance {
    EcCurve curve;
    EcPoint P, Q;
    mpz_class n_ord;   // order of P; [n_ord]P = infinity is validated
    size_t r = 0;      // ceil(log2 n_ord): multiplier bits
    size_t wq = 0;     // ceil(log2 q): bits per coordinate
    size_t l = 0;      // 2*wq: encoded point width
    EcdlpInstance(EcCurve c, EcPoint p, EcPoint q_pt, const mpz_class& order);
};

// Encode an affine point as wq bits of x followed by wq bits of y (LSB-first
// each). The point at infinity has no encoding (InfinityEncoding).
StateVec ec_encode_point(const EcdlpInstance& inst, const EcPoint& p);

// Multiplier bits -> encoded [k]P with k = decode(bits) mod n_ord; k = 0
// raises InfinityEncoding. An r -> l embedding for invert_embedding.
BlackBoxMap ecdlp_map(const EcdlpInstance& inst);

// ---------------------------------------------------------------------------
// Small lookup-table map over GF(2)^n (n <= 20): table[i] = image index.
BlackBoxMap lut_map(size_t n, std::vector<uint64_t> table);

}  // namespace locinv
