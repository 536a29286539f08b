#pragma once

// Bound-table arithmetic and the weak-instance density harness.
//
// bounds_row computes M = l^k and floor(M/2) exactly; the pretty label uses
// a fixed rounding rule (three significant figures with Million / Billion /
// Trillion unit words once a value reaches 10^6, grouped digits below that).
// canonical_bound_tables returns the block-cipher, RSA-modulus, and curve
// tables with per-row notes where a commonly quoted figure disagrees with
// the arithmetic.
//
// density_run samples S independent instances of a target family, runs the
// bounded inversion on each, and reports per-sample records plus a summary.
// Sub-seeds are derived from (seed, index), so records are independent of
// evaluation order and thread count; the CSV is byte-identical across runs
// with the same configuration.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "locinv/lrs.hpp"

namespace locinv {

struct BoundRow {
    unsigned l = 0;
    unsigned k = 0;
    mpz_class bound;  // l^k
    mpz_class half;   // floor(l^k / 2)
    std::string note; // non-empty when a published figure disagrees
};

BoundRow bounds_row(unsigned l, unsigned k);

// Grouped digits: 1048576 -> "1,048,576".
std::string group_digits(const mpz_class& v);
// "1,048,576 (1.05 Million)" above 10^6, plain grouped digits below.
std::string bounds_label(const mpz_class& v);

struct BoundTable {
    std::string name;
    std::string caption;
    std::vector<BoundRow> rows;
};

std::vector<BoundTable> canonical_bound_tables();
nlohmann::json bound_tables_json();
std::string bound_tables_text();

// ---------------------------------------------------------------------------
// Density harness
// ---------------------------------------------------------------------------

struct DensityConfig {
    std::string family;          // sampler name, see family_help()
    nlohmann::json params;       // family parameters (hex strings for numbers)
    size_t samples = 1;
    uint64_t bound = 64;         // compute bound M
    InvertMode mode = InvertMode::paper;
    bool early_shortcut = true;
    uint64_t seed = 0;
    unsigned threads = 1;
};

struct DensityRecord {
    std::string target;
    uint64_t instance_id = 0;
    size_t n_bits = 0;
    uint64_t bound = 0;
    std::string mode;
    std::string outcome;             // solved | early_period | no_conclusion | no_solution | error
    std::optional<uint64_t> lc;      // present when solved
    std::optional<uint64_t> period;  // present when early_period
    bool verify_ok = false;
    uint64_t false_positives = 0;
    uint64_t eval_count = 0;
    uint64_t seed = 0;               // per-sample sub-seed
    std::string error;               // outcome == error only (not in CSV)
};

struct DensitySummary {
    size_t samples = 0;
    size_t solved = 0;
    size_t early_period = 0;
    size_t no_conclusion = 0;
    size_t no_solution = 0;
    size_t errors = 0;
    double fraction = 0.0;  // (solved + early_period) / samples
    std::map<uint64_t, uint64_t> lc_histogram;
    std::string sampling;   // secret-forward | uniform-y
    uint64_t wall_ms = 0;
};

struct DensityResult {
    std::vector<DensityRecord> records;  // ordered by instance_id
    DensitySummary summary;
};

DensityResult density_run(const DensityConfig& cfg);

// CSV with the fixed column set; elapsed_ms is pinned to 0 so identical
// configurations serialize byte-identically (wall time lives in the summary).
std::string density_csv(const std::vector<DensityRecord>& records);
nlohmann::json density_summary_json(const DensityConfig& cfg, const DensitySummary& s);

// One line per supported family: name, parameters, sampling style.
std::string family_help();

// SplitMix64 step; the sub-seed for sample i is derived from (seed, i).
uint64_t splitmix64(uint64_t& state);
uint64_t subseed(uint64_t seed, uint64_t index);

}  // namespace locinv
