#pragma once

// Exhaustive ground truth for small domains: brute-force pre-images, full
// functional-graph decomposition (periodic orbits, chains, garden-of-eden
// states), and exact linear complexity of iterate sequences. Everything here
// is reference-grade and guarded to at most 2^24 states.

#include <cstdint>
#include <vector>

#include "locinv/lrs.hpp"

namespace locinv {

constexpr uint64_t kOracleGuard = uint64_t(1) << 24;

// All x with F(x) = y, by scanning the domain in index order.
std::vector<StateVec> brute_invert(const BlackBoxMap& map, const StateVec& y);

// Full decomposition of the functional graph of a square map. States are
// addressed by their codec index.
struct OrbitDecomposition {
    uint64_t states = 0;
    std::vector<uint32_t> orbit_id;    // cycle id reached from each state
    std::vector<uint32_t> preperiod;   // steps to reach that cycle (0 = on it)
    std::vector<uint64_t> periods;     // period per cycle id
    std::vector<uint64_t> goe;         // states with no pre-image, ascending

    bool on_cycle(uint64_t idx) const { return preperiod[idx] == 0; }
    uint64_t period_of(uint64_t idx) const { return periods[orbit_id[idx]]; }
};

OrbitDecomposition orbit_decompose(const BlackBoxMap& map);

// Exact period, linear complexity and minimal polynomial of S(F, y) for y on
// a periodic orbit (NotPeriodic otherwise). The minimal polynomial comes from
// the least-degree consistent all-window system, independent of the Hankel
// acceptance logic. guard bounds the walk that finds the period.
struct ExactLc {
    uint64_t period = 0;
    size_t lc = 0;
    MinPoly minpoly;
};

ExactLc exact_lc(const BlackBoxMap& map, const StateVec& y,
                 uint64_t guard = kOracleGuard);

}  // namespace locinv
