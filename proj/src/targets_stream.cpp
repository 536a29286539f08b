#include "locinv/targets.hpp"

namespace locinv {

// Fibonacci LFSR for x^24 + x^23 + x^22 + x^17 + 1 (maximal length): state
// bit i holds u_{k+i}; the recurrence is
// u_{k+24} = u_{k+23} ^ u_{k+22} ^ u_{k+17} ^ u_k.
uint32_t StreamCipher::step(uint32_t state) {
    uint32_t fb = ((state >> 23) ^ (state >> 22) ^ (state >> 17) ^ state) & 1u;
    return ((state >> 1) | (fb << 23)) & 0xffffffu;
}

// Nonlinear output filter:
// f(s) = s0 ^ s5*s12 ^ s9*s17*s21 ^ s14.
bool StreamCipher::filter(uint32_t s) {
    uint32_t b0 = s & 1u;
    uint32_t q2 = (s >> 5) & (s >> 12) & 1u;
    uint32_t q3 = (s >> 9) & (s >> 17) & (s >> 21) & 1u;
    uint32_t b1 = (s >> 14) & 1u;
    return (b0 ^ q2 ^ q3 ^ b1) != 0;
}

uint32_t StreamCipher::seed(uint16_t key, uint8_t iv) {
    return (static_cast<uint32_t>(iv) << 16) | key;
}

std::vector<bool> StreamCipher::keystream(uint16_t key, uint8_t iv, size_t k0,
                                          size_t len) {
    uint32_t s = seed(key, iv);
    for (size_t k = 0; k < k0; ++k) s = step(s);
    std::vector<bool> out;
    out.reserve(len);
    for (size_t k = 0; k < len; ++k) {
        out.push_back(filter(s));
        s = step(s);
    }
    return out;
}

BlackBoxMap stream_kpa_map(uint8_t iv, size_t k0) {
    BlackBoxMap map;
    map.field = Field::gf2();
    map.n_in = map.n_out = StreamCipher::kKeyBits;
    map.name = "stream_kpa";
    map.fn = [iv, k0](const StateVec& x) {
        uint16_t key = static_cast<uint16_t>(x.words()[0] & 0xffff);
        auto bits = StreamCipher::keystream(key, iv, k0, StreamCipher::kKeyBits);
        StateVec out(x.field(), StreamCipher::kKeyBits);
        for (size_t i = 0; i < bits.size(); ++i) out.set_bit(i, bits[i]);
        return out;
    };
    return map;
}

}  // namespace locinv
