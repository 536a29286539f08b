#include "locinv/targets.hpp"

namespace locinv {

BlackBoxMap dlp_fp_map(const mpz_class& p, const mpz_class& a) {
    Field f = Field::gfp(p);
    if (a < 2 || a > p - 1) throw BadInstance("DLP base must lie in [2, p-1]");
    BlackBoxMap map;
    map.field = f;
    map.n_in = map.n_out = 1;
    map.name = "dlp_fp";
    map.fn = [p, a](const StateVec& x) {
        mpz_class r;
        mpz_powm(r.get_mpz_t(), a.get_mpz_t(), x.get(0).z.get_mpz_t(), p.get_mpz_t());
        StateVec out(x.field(), 1);
        out.set(0, Fe(std::move(r)));
        return out;
    };
    return map;
}

std::optional<uint64_t> standard_reduction(unsigned w) {
    switch (w) {
        case 4: return 0x13;        // x^4 + x + 1
        case 8: return 0x11b;       // x^8 + x^4 + x^3 + x + 1
        case 16: return 0x1002b;    // x^16 + x^5 + x^3 + x + 1
        default: return std::nullopt;
    }
}

BlackBoxMap dlp_f2w_map(unsigned w, uint64_t reduction, uint64_t a,
                        bool reversed_decode) {
    Field fw = Field::gf2w(w, reduction);  // validates the reduction
    if (a < 2 || (w < 64 && a >> w)) throw BadInstance("DLP base must be a field element, not 0/1");
    BlackBoxMap map;
    map.field = Field::gf2();
    map.n_in = map.n_out = w;
    map.name = "dlp_f2w";
    map.fn = [fw, w, a, reversed_decode](const StateVec& x) {
        uint64_t exp = 0;
        for (unsigned i = 0; i < w; ++i) {
            unsigned pos = reversed_decode ? (w - 1 - i) : i;
            if (x.bit(pos)) exp |= uint64_t(1) << i;
        }
        Fe r = fw.pow(Fe(a), exp);
        StateVec out(x.field(), w);
        for (unsigned i = 0; i < w; ++i) out.set_bit(i, (r.w >> i) & 1);
        return out;
    };
    return map;
}

}  // namespace locinv
