#pragma once

// Linear-recurrence engine for local inversion.
//
// Given a black-box map F over F^n and a target value y, the iterate sequence
// S = { y, F(y), F^(2)(y), ... } is an eventually-periodic vector sequence.
// When y lies on a periodic orbit, S satisfies a linear recurrence whose
// minimal polynomial m(X) = X^m - sum_{i<m} a_i X^i has a nonzero constant
// term, and the unique pre-image of y in the orbit is
//
//   x = (1/a_0) * ( F^(m-1)(y) - sum_{i=1..m-1} a_i F^(i-1)(y) ).
//
// The minimal degree is certified within a compute bound by rank conditions
// on block-Hankel matrices of the sequence: m is accepted when
// rank H(m) = rank H(m+1) = m. invert_local drives the degree schedule,
// solves for the coefficients, applies the formula and verifies F(x) = y.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "locinv/field.hpp"
#include "locinv/mat.hpp"
#include "locinv/poly.hpp"

namespace locinv {

// Pure function from F^n_in to F^n_out. Evaluations must be deterministic
// and safe to run concurrently.
struct BlackBoxMap {
    Field field;
    size_t n_in = 0;
    size_t n_out = 0;
    std::string name;
    std::function<StateVec(const StateVec&)> fn;

    bool square() const { return n_in == n_out; }
    // Checked evaluation: validates field and dimensions on both sides.
    StateVec eval(const StateVec& x) const;
};

// Iterate sequence with early-period bookkeeping. When the generator saw the
// trajectory return to y at step N, term(k) is defined for every k via
// wraparound (the orbit is purely periodic from index 0); otherwise only the
// stored prefix is addressable.
class IterSeq {
  public:
    IterSeq() = default;
    IterSeq(const Field& f, size_t n) : field_(f), n_(n) {}

    const Field& field() const { return field_; }
    size_t n() const { return n_; }
    size_t stored() const { return terms_.size(); }
    std::optional<size_t> early_period() const { return period_; }
    bool periodic() const { return period_.has_value(); }
    // Number of logically addressable terms (SIZE_MAX when periodic).
    size_t available() const;
    // term(k): stored term, or wrapped index k mod N when periodic.
    const StateVec& term(size_t k) const;

    void push(StateVec v) { terms_.push_back(std::move(v)); }
    void mark_period(size_t N) { period_ = N; }

  private:
    Field field_;
    size_t n_ = 0;
    std::vector<StateVec> terms_;
    std::optional<size_t> period_;
};

struct SeqOptions {
    // Stop generating as soon as the trajectory returns to y (and record the
    // period). Disabled when a full window of terms is wanted regardless.
    bool stop_on_return = true;
};

// Generates terms k = 0..M (M+1 terms), stopping early at the first k <= M
// with F^(k)(y) = y if requested. eval_count, when given, is incremented per
// map evaluation. Throws on map evaluation failure.
IterSeq seq_generate(const BlackBoxMap& map, const StateVec& y, size_t M,
                     uint64_t* eval_count = nullptr, SeqOptions opts = {});

// m(X) = X^degree - sum_{i<degree} alpha[i] X^i over `field`.
struct MinPoly {
    Field field;
    size_t degree = 0;
    std::vector<Fe> alpha;
};

Poly minpoly_to_poly(const MinPoly& mp);

// Block-Hankel matrix of the sequence with block (r,c) = term(r+c+j),
// r,c in [0,m), flattened to an (m*n) x m scalar matrix: scalar row r*n+i
// holds coordinate i of the block row r. Needs terms 0..2m-2+j.
Mat hankel_build(const IterSeq& seq, size_t m, size_t j);
// Flattened right-hand side [term(m+j), ..., term(2m-1+j)], length m*n.
StateVec hankel_rhs(const IterSeq& seq, size_t m, size_t j);

struct RankMismatch {
    size_t rank_m = 0;
    size_t rank_m1 = 0;
};
struct HankelInconsistent {};
using MinPolyResult = std::variant<MinPoly, RankMismatch, HankelInconsistent>;

// Tests rank H(m) = rank H(m+1) = m and solves H(m) a = h(m+1) on success.
// Needs 2m+1 logical terms; throws InsufficientTerms otherwise.
MinPolyResult minpoly_hankel(const IterSeq& seq, size_t m);

// Independent route: per-coordinate Berlekamp-Massey over the first
// `use_terms` logical terms, combined by polynomial lcm.
MinPoly minpoly_bm_lcm(const IterSeq& seq, size_t use_terms);

// Smallest N <= bound with X^N = 1 mod m(X), by iterated multiplication by X
// in F[X]/(m). Requires alpha_0 != 0 (throws ZeroConstantTerm). nullopt when
// the order exceeds the bound.
std::optional<uint64_t> poly_order(const MinPoly& mp, uint64_t bound);

// Applies the solution formula. Requires alpha_0 != 0 and degree terms.
StateVec solve_from_minpoly(const IterSeq& seq, const MinPoly& mp);

enum class InvertMode { paper, progressive };

struct InvertOptions {
    InvertMode mode = InvertMode::paper;
    // Return EarlyPeriod as soon as the trajectory closes (the shortcut in the
    // reference procedure). Disable to force the Hankel path, e.g. to obtain
    // the linear complexity on full-period data.
    bool early_shortcut = true;
};

struct Solved {
    StateVec x;
    size_t lc = 0;
    MinPoly minpoly;
};
struct EarlyPeriod {
    StateVec x;
    size_t period = 0;
};
struct NoConclusion {
    size_t bound = 0;
};
// Only oracle-backed callers can certify absence of a pre-image.
struct NoSolution {};

struct ProjectionNote {
    size_t index = 0;          // 1-based window index
    std::string outcome;       // solved | early_period | no_conclusion | error
    size_t lc_or_period = 0;
    bool cross_verified = false;
};

struct InversionOutcome {
    std::variant<Solved, EarlyPeriod, NoConclusion, NoSolution> result;
    uint64_t eval_count = 0;
    uint64_t false_positives = 0;
    std::optional<size_t> projection;      // set by the embedding solver
    std::vector<ProjectionNote> notes;     // per-projection summaries

    bool concluded() const {
        return std::holds_alternative<Solved>(result) ||
               std::holds_alternative<EarlyPeriod>(result);
    }
    const StateVec* solution() const {
        if (auto* s = std::get_if<Solved>(&result)) return &s->x;
        if (auto* e = std::get_if<EarlyPeriod>(&result)) return &e->x;
        return nullptr;
    }
    std::string outcome_name() const;
};

// Local inversion within compute bound M (M >= 2). The map must be square.
// paper mode: start at m = floor(M/2); accept on rank H(m) = rank H(m+1) = m
// with verified solution; stop with NoConclusion when rank H(m) < rank H(m+1)
// or the schedule is exhausted at m = 1; otherwise decrement m.
// progressive mode: candidate windows double from 1 up to floor(M/2); equal
// ranks r < m at a window refine the candidate degree to r.
InversionOutcome invert_local(const BlackBoxMap& map, const StateVec& y, size_t M,
                              InvertOptions opts = {});

}  // namespace locinv
