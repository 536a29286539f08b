#include "locinv/targets.hpp"

namespace locinv {

namespace {

// 4-bit S-box (the PRESENT one) and its inverse.
constexpr uint8_t kSbox[16] = {0xc, 0x5, 0x6, 0xb, 0x9, 0x0, 0xa, 0xd,
                               0x3, 0xe, 0xf, 0x8, 0x4, 0x7, 0x1, 0x2};
constexpr uint8_t kSboxInv[16] = {0x5, 0xe, 0xf, 0x8, 0xc, 0x1, 0x2, 0xd,
                                  0xb, 0x4, 0x6, 0x3, 0x0, 0x7, 0x9, 0xa};

// Bit i of the state moves to position (4*i) mod 15, bit 15 stays.
constexpr unsigned perm_pos(unsigned i) { return i == 15 ? 15 : (4 * i) % 15; }

constexpr uint16_t kRoundConst[5] = {0x1a2b, 0x3c4d, 0x5e6f, 0x7081, 0x92a3};

uint16_t rotl16(uint16_t v, unsigned r) {
    r %= 16;
    if (r == 0) return v;
    return static_cast<uint16_t>((v << r) | (v >> (16 - r)));
}

}  // namespace

uint16_t SpnCipher::sbox_layer(uint16_t v) {
    uint16_t out = 0;
    for (unsigned i = 0; i < 4; ++i)
        out |= static_cast<uint16_t>(kSbox[(v >> (4 * i)) & 0xf]) << (4 * i);
    return out;
}

uint16_t SpnCipher::inv_sbox_layer(uint16_t v) {
    uint16_t out = 0;
    for (unsigned i = 0; i < 4; ++i)
        out |= static_cast<uint16_t>(kSboxInv[(v >> (4 * i)) & 0xf]) << (4 * i);
    return out;
}

uint16_t SpnCipher::permute(uint16_t v) {
    uint16_t out = 0;
    for (unsigned i = 0; i < 16; ++i)
        if (v & (1u << i)) out |= 1u << perm_pos(i);
    return out;
}

uint16_t SpnCipher::inv_permute(uint16_t v) {
    uint16_t out = 0;
    for (unsigned i = 0; i < 16; ++i)
        if (v & (1u << perm_pos(i))) out |= 1u << i;
    return out;
}

std::array<uint16_t, SpnCipher::kRounds + 1> SpnCipher::round_keys(uint16_t key) {
    std::array<uint16_t, kRounds + 1> rk;
    for (unsigned r = 0; r <= kRounds; ++r)
        rk[r] = static_cast<uint16_t>(rotl16(key, 3 * r) ^ kRoundConst[r]);
    return rk;
}

uint16_t SpnCipher::encrypt(uint16_t key, uint16_t pt) {
    auto rk = round_keys(key);
    uint16_t s = pt;
    for (unsigned r = 0; r < kRounds; ++r) {
        s ^= rk[r];
        s = sbox_layer(s);
        s = permute(s);
    }
    return s ^ rk[kRounds];
}

uint16_t SpnCipher::decrypt(uint16_t key, uint16_t ct) {
    auto rk = round_keys(key);
    uint16_t s = ct ^ rk[kRounds];
    for (unsigned r = kRounds; r-- > 0;) {
        s = inv_permute(s);
        s = inv_sbox_layer(s);
        s ^= rk[r];
    }
    return s;
}

BlackBoxMap spn_kpa_map(uint16_t plaintext) {
    BlackBoxMap map;
    map.field = Field::gf2();
    map.n_in = map.n_out = 16;
    map.name = "spn_kpa";
    map.fn = [plaintext](const StateVec& x) {
        uint16_t key = static_cast<uint16_t>(x.words()[0] & 0xffff);
        uint16_t ct = SpnCipher::encrypt(key, plaintext);
        StateVec out(x.field(), 16);
        out.words()[0] = ct;
        return out;
    };
    return map;
}

}  // namespace locinv
