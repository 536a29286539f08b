#include "locinv/embed.hpp"

namespace locinv {

StateVec project(size_t i, const StateVec& x, size_t n) {
    if (n == 0 || n > x.dim()) throw DimensionMismatch("project window length");
    size_t t = x.dim() - n;
    if (i < 1 || i > t + 1) throw IndexOutOfRange("projection window index");
    StateVec out(x.field(), n);
    if (x.field().kind() == FieldKind::GF2) {
        for (size_t k = 0; k < n; ++k) out.set_bit(k, x.bit(i - 1 + k));
    } else {
        for (size_t k = 0; k < n; ++k) out.set(k, x.get(i - 1 + k));
    }
    return out;
}

namespace {

struct Candidate {
    InversionOutcome outcome;  // per-projection result (verified)
    size_t index;              // window index
    size_t lc_or_period;
    bool is_solved;
};

}  // namespace

InversionOutcome invert_embedding(const BlackBoxMap& map, const StateVec& y,
                                  size_t M, InvertOptions opts) {
    size_t n = map.n_in, m = map.n_out;
    if (n > m) throw DimensionMismatch("invert_embedding needs n_in <= n_out");
    if (y.field() != map.field || y.dim() != m)
        throw MismatchedField("invert_embedding target value");
    size_t t = m - n;

    // Window coverage: [i-1, i+n-2] over i = 1..t+1 tiles [0, m-1].
    if (t + n != m) throw DimensionMismatch("projection windows do not cover output");

    InversionOutcome total;
    total.result = NoConclusion{M};

    std::vector<Candidate> verified;

    for (size_t i = 1; i <= t + 1; ++i) {
        BlackBoxMap fi;
        fi.field = map.field;
        fi.n_in = n;
        fi.n_out = n;
        fi.name = map.name + "|window" + std::to_string(i);
        const BlackBoxMap* base = &map;
        fi.fn = [base, i, n](const StateVec& x) {
            return project(i, base->eval(x), n);
        };
        StateVec yi = project(i, y, n);

        ProjectionNote note;
        note.index = i;

        InversionOutcome sub;
        bool errored = false;
        try {
            sub = invert_local(fi, yi, M, opts);
        } catch (const MapEvalError&) {
            errored = true;
        }
        total.eval_count += sub.eval_count;
        total.false_positives += sub.false_positives;

        if (errored) {
            note.outcome = "error";
            total.notes.push_back(note);
            continue;
        }
        note.outcome = sub.outcome_name();
        if (auto* s = std::get_if<Solved>(&sub.result)) note.lc_or_period = s->lc;
        if (auto* e = std::get_if<EarlyPeriod>(&sub.result)) note.lc_or_period = e->period;

        if (sub.concluded()) {
            // Cross-verify: every other window of y, then the full equation.
            const StateVec& x = *sub.solution();
            StateVec fx;
            bool ok = true;
            try {
                fx = map.eval(x);
                ++total.eval_count;
            } catch (const MapEvalError&) {
                ok = false;
            }
            if (ok) {
                for (size_t jw = 1; jw <= t + 1 && ok; ++jw) {
                    if (jw == i) continue;
                    ok = project(jw, fx, n) == project(jw, y, n);
                }
                ok = ok && fx == y;
            }
            note.cross_verified = ok;
            if (ok) {
                Candidate cand;
                cand.outcome = std::move(sub);
                cand.index = i;
                cand.lc_or_period = note.lc_or_period;
                cand.is_solved = std::holds_alternative<Solved>(cand.outcome.result);
                verified.push_back(std::move(cand));
            }
        }
        total.notes.push_back(note);
    }

    // Keep the verified conclusion with the smallest linear complexity;
    // Solved (exact LC) beats EarlyPeriod (period is only an upper bound),
    // ties break to the lowest window index.
    const Candidate* best = nullptr;
    for (const auto& c : verified) {
        if (!best) {
            best = &c;
            continue;
        }
        if (c.is_solved != best->is_solved) {
            if (c.is_solved) best = &c;
            continue;
        }
        if (c.lc_or_period < best->lc_or_period) best = &c;
    }
    if (best) {
        total.result = best->outcome.result;
        total.projection = best->index;
    }
    return total;
}

}  // namespace locinv
