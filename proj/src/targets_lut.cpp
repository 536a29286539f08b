#include "locinv/targets.hpp"

namespace locinv {

BlackBoxMap lut_map(size_t n, std::vector<uint64_t> table) {
    if (n == 0 || n > 20) throw BadInstance("lut width must be in [1,20]");
    size_t domain = size_t(1) << n;
    if (table.size() != domain) throw BadInstance("lut table size must be 2^n");
    for (uint64_t v : table)
        if (v >= domain) throw BadInstance("lut entry exceeds the domain");
    BlackBoxMap map;
    map.field = Field::gf2();
    map.n_in = map.n_out = n;
    map.name = "lut";
    auto shared = std::make_shared<std::vector<uint64_t>>(std::move(table));
    map.fn = [shared, n](const StateVec& x) {
        uint64_t idx = x.words()[0] & ((uint64_t(1) << n) - 1);
        StateVec out(x.field(), n);
        out.words()[0] = (*shared)[idx];
        return out;
    };
    return map;
}

}  // namespace locinv
