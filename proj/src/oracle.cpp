#include "locinv/oracle.hpp"

#include <algorithm>

namespace locinv {

namespace {

uint64_t domain_size_checked(const BlackBoxMap& map) {
    mpz_class size = 1;
    mpz_class order = map.field.order();
    for (size_t i = 0; i < map.n_in; ++i) {
        size *= order;
        if (size > kOracleGuard)
            throw DomainTooLarge(map.name + ": |F|^n exceeds 2^24");
    }
    return mpz_get_ui(size.get_mpz_t());
}

}  // namespace

std::vector<StateVec> brute_invert(const BlackBoxMap& map, const StateVec& y) {
    if (y.field() != map.field || y.dim() != map.n_out)
        throw MismatchedField("brute_invert target");
    uint64_t domain = domain_size_checked(map);
    std::vector<StateVec> out;
    for (uint64_t i = 0; i < domain; ++i) {
        StateVec x = encode_value(map.field, map.n_in, mpz_class(static_cast<unsigned long>(i)));
        if (map.eval(x) == y) out.push_back(std::move(x));
    }
    return out;
}

OrbitDecomposition orbit_decompose(const BlackBoxMap& map) {
    if (!map.square()) throw DimensionMismatch("orbit_decompose needs a square map");
    uint64_t domain = domain_size_checked(map);

    // Tabulate successor indices once.
    std::vector<uint32_t> next(domain);
    std::vector<uint8_t> has_preimage(domain, 0);
    for (uint64_t i = 0; i < domain; ++i) {
        StateVec x = encode_value(map.field, map.n_in, mpz_class(static_cast<unsigned long>(i)));
        uint64_t img = decode_index(map.eval(x));
        next[i] = static_cast<uint32_t>(img);
        has_preimage[img] = 1;
    }

    OrbitDecomposition d;
    d.states = domain;
    d.orbit_id.assign(domain, UINT32_MAX);
    d.preperiod.assign(domain, 0);
    for (uint64_t i = 0; i < domain; ++i)
        if (!has_preimage[i]) d.goe.push_back(i);

    // Iterative trajectory coloring: walk until a state with known orbit or a
    // state already on the current path, then unwind the stack.
    std::vector<uint32_t> mark(domain, UINT32_MAX);  // position on current path
    std::vector<uint32_t> path;
    for (uint64_t s = 0; s < domain; ++s) {
        if (d.orbit_id[s] != UINT32_MAX) continue;
        path.clear();
        uint32_t cur = static_cast<uint32_t>(s);
        while (d.orbit_id[cur] == UINT32_MAX && mark[cur] == UINT32_MAX) {
            mark[cur] = static_cast<uint32_t>(path.size());
            path.push_back(cur);
            cur = next[cur];
        }
        size_t tail_pre;  // preperiod of the state the path ran into
        uint32_t oid;
        bool new_cycle = false;
        if (d.orbit_id[cur] != UINT32_MAX) {
            oid = d.orbit_id[cur];
            tail_pre = d.preperiod[cur];
        } else {
            new_cycle = true;
            // New cycle: starts at mark[cur] within the current path.
            oid = static_cast<uint32_t>(d.periods.size());
            size_t start = mark[cur];
            d.periods.push_back(path.size() - start);
            for (size_t k = start; k < path.size(); ++k) {
                d.orbit_id[path[k]] = oid;
                d.preperiod[path[k]] = 0;
            }
            path.resize(start);
            tail_pre = 0;
        }
        for (size_t k = path.size(); k-- > 0;) {
            d.orbit_id[path[k]] = oid;
            d.preperiod[path[k]] = static_cast<uint32_t>(tail_pre + (path.size() - k));
        }
        for (uint32_t v : path) mark[v] = UINT32_MAX;
        if (new_cycle) {
            uint32_t v = cur;
            do {
                mark[v] = UINT32_MAX;
                v = next[v];
            } while (v != cur);
        }
    }
    return d;
}

ExactLc exact_lc(const BlackBoxMap& map, const StateVec& y, uint64_t guard) {
    if (!map.square()) throw DimensionMismatch("exact_lc needs a square map");
    if (y.field() != map.field || y.dim() != map.n_in)
        throw MismatchedField("exact_lc target");

    // Find the period by walking until the trajectory returns to y.
    uint64_t period = 0;
    {
        StateVec cur = y;
        for (uint64_t k = 1; k <= guard; ++k) {
            cur = map.eval(cur);
            if (cur == y) {
                period = k;
                break;
            }
        }
    }
    if (period == 0) throw NotPeriodic("no return to y within the guard");

    // The all-zero trajectory (y = 0 fixed at 0) is annihilated by the
    // constant polynomial: linear complexity 0.
    if (period == 1 && y == StateVec(map.field, map.n_in)) {
        ExactLc out;
        out.period = 1;
        out.lc = 0;
        out.minpoly.field = map.field;
        out.minpoly.degree = 0;
        return out;
    }

    // Full period plus one extra cycle of terms, so every window of any
    // degree <= period wraps at least once.
    IterSeq seq(map.field, map.n_in);
    {
        StateVec cur = y;
        seq.push(cur);
        for (uint64_t k = 0; k < 2 * period + 1; ++k) {
            cur = map.eval(cur);
            seq.push(cur);
        }
        seq.mark_period(period);
    }

    // Least degree m whose all-window system
    //   term(k+m) = sum_i alpha_i term(k+i),  k = 0..T-m-1
    // is consistent. Consistency is monotone in m (an annihilator times X is
    // still a solution one degree up), so binary search applies; any solution
    // at the least degree is the minimal polynomial.
    size_t T = seq.stored();
    const Field& f = map.field;
    size_t n = map.n_in;
    auto try_degree = [&](size_t m) -> std::optional<LinSolution> {
        size_t rows = (T - m) * n;
        Mat a(f, rows, m);
        StateVec b(f, rows);
        for (size_t k = 0; k + m < T; ++k) {
            for (size_t c = 0; c < m; ++c) {
                const StateVec& t = seq.term(k + c);
                for (size_t i = 0; i < n; ++i) a.set((k * n) + i, c, t.get(i));
            }
            const StateVec& t = seq.term(k + m);
            for (size_t i = 0; i < n; ++i) b.set((k * n) + i, t.get(i));
        }
        SolveResult sol = mat_solve(a, b);
        if (std::holds_alternative<Inconsistent>(sol)) return std::nullopt;
        return std::get<LinSolution>(std::move(sol));
    };

    // X^period - 1 always annihilates, so the predicate is true at `period`.
    size_t lo = 1, hi = period;
    std::optional<LinSolution> best;
    while (lo < hi) {
        size_t mid = lo + (hi - lo) / 2;
        if (auto sol = try_degree(mid)) {
            best = std::move(sol);
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    if (!best) best = try_degree(lo);
    if (!best) throw Error("exact_lc: no annihilator up to the period (unreachable)");

    ExactLc out;
    out.period = period;
    out.lc = lo;
    out.minpoly.field = f;
    out.minpoly.degree = lo;
    for (size_t i = 0; i < lo; ++i) out.minpoly.alpha.push_back(best->x.get(i));
    return out;
}

}  // namespace locinv
