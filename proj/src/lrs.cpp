#include "locinv/lrs.hpp"

#include <algorithm>

namespace locinv {

StateVec BlackBoxMap::eval(const StateVec& x) const {
    if (x.field() != field) throw MismatchedField("map input for " + name);
    if (x.dim() != n_in) throw DimensionMismatch("map input for " + name);
    StateVec out = fn(x);
    if (out.field() != field) throw MismatchedField("map output for " + name);
    if (out.dim() != n_out) throw DimensionMismatch("map output for " + name);
    return out;
}

size_t IterSeq::available() const {
    return period_ ? SIZE_MAX : terms_.size();
}

const StateVec& IterSeq::term(size_t k) const {
    if (k < terms_.size()) return terms_[k];
    if (period_) return terms_[k % *period_];
    throw InsufficientTerms("term " + std::to_string(k) + " of " +
                            std::to_string(terms_.size()));
}

IterSeq seq_generate(const BlackBoxMap& map, const StateVec& y, size_t M,
                     uint64_t* eval_count, SeqOptions opts) {
    if (!map.square()) throw DimensionMismatch("seq_generate needs a square map");
    IterSeq seq(map.field, map.n_in);
    seq.push(y);
    StateVec cur = y;
    for (size_t k = 1; k <= M; ++k) {
        cur = map.eval(cur);
        if (eval_count) ++*eval_count;
        seq.push(cur);
        if (cur == y && !seq.periodic()) {
            seq.mark_period(k);
            if (opts.stop_on_return) break;
        }
    }
    return seq;
}

Poly minpoly_to_poly(const MinPoly& mp) {
    std::vector<Fe> c;
    c.reserve(mp.degree + 1);
    for (size_t i = 0; i < mp.degree; ++i) c.push_back(mp.field.neg(mp.alpha[i]));
    c.push_back(mp.field.one());
    return Poly(mp.field, std::move(c));
}

namespace {

MinPoly minpoly_from_poly(const Poly& p) {
    MinPoly mp;
    mp.field = p.f;
    if (p.is_zero()) throw ValueOutOfRange("zero polynomial is not an annihilator");
    mp.degree = static_cast<size_t>(p.degree());
    mp.alpha.reserve(mp.degree);
    for (size_t i = 0; i < mp.degree; ++i) mp.alpha.push_back(p.f.neg(p.coeff(i)));
    return mp;
}

size_t needed_terms(size_t m, size_t j) { return 2 * m - 1 + j; }

}  // namespace

Mat hankel_build(const IterSeq& seq, size_t m, size_t j) {
    if (m == 0) throw ValueOutOfRange("hankel_build with m = 0");
    if (seq.available() < needed_terms(m, j))
        throw InsufficientTerms("hankel_build m=" + std::to_string(m) +
                                " j=" + std::to_string(j));
    size_t n = seq.n();
    const Field& f = seq.field();
    Mat h(f, m * n, m);
    if (f.kind() == FieldKind::GF2) {
        for (size_t r = 0; r < m; ++r)
            for (size_t c = 0; c < m; ++c) {
                const StateVec& t = seq.term(r + c + j);
                for (size_t i = 0; i < n; ++i)
                    if (t.bit(i)) h.sbit(r * n + i, c, true);
            }
    } else {
        for (size_t r = 0; r < m; ++r)
            for (size_t c = 0; c < m; ++c) {
                const StateVec& t = seq.term(r + c + j);
                for (size_t i = 0; i < n; ++i) h.set(r * n + i, c, t.get(i));
            }
    }
    return h;
}

StateVec hankel_rhs(const IterSeq& seq, size_t m, size_t j) {
    if (m == 0) throw ValueOutOfRange("hankel_rhs with m = 0");
    if (seq.available() < 2 * m + j)
        throw InsufficientTerms("hankel_rhs m=" + std::to_string(m));
    size_t n = seq.n();
    const Field& f = seq.field();
    StateVec rhs(f, m * n);
    for (size_t r = 0; r < m; ++r) {
        const StateVec& t = seq.term(m + r + j);
        for (size_t i = 0; i < n; ++i) rhs.set(r * n + i, t.get(i));
    }
    return rhs;
}

MinPolyResult minpoly_hankel(const IterSeq& seq, size_t m) {
    if (m == 0) throw ValueOutOfRange("minpoly_hankel with m = 0");
    if (seq.available() < 2 * m + 1)
        throw InsufficientTerms("minpoly_hankel m=" + std::to_string(m) + " with " +
                                std::to_string(seq.stored()) + " stored terms");
    size_t r1 = mat_rank(hankel_build(seq, m, 0));
    size_t r2 = mat_rank(hankel_build(seq, m + 1, 0));
    if (r1 != m || r2 != m) return RankMismatch{r1, r2};
    SolveResult sol = mat_solve(hankel_build(seq, m, 0), hankel_rhs(seq, m, 0));
    if (std::holds_alternative<Inconsistent>(sol)) return HankelInconsistent{};
    const LinSolution& ls = std::get<LinSolution>(sol);
    MinPoly mp;
    mp.field = seq.field();
    mp.degree = m;
    mp.alpha.reserve(m);
    for (size_t i = 0; i < m; ++i) mp.alpha.push_back(ls.x.get(i));
    return mp;
}

namespace {

// Berlekamp-Massey on one scalar coordinate; returns the minimal monic
// annihilator in shift convention (degree = linear complexity of the data).
Poly bm_scalar(const Field& f, const std::vector<Fe>& s) {
    std::vector<Fe> C{f.one()}, B{f.one()};
    size_t L = 0, m = 1;
    Fe b = f.one();
    for (size_t n = 0; n < s.size(); ++n) {
        Fe d = s[n];
        for (size_t i = 1; i < C.size() && i <= L; ++i)
            d = f.add(d, f.mul(C[i], s[n - i]));
        if (f.is_zero(d)) {
            ++m;
        } else if (2 * L <= n) {
            std::vector<Fe> T = C;
            Fe coef = f.mul(d, f.inv(b));
            if (C.size() < B.size() + m) C.resize(B.size() + m, f.zero());
            for (size_t i = 0; i < B.size(); ++i)
                C[i + m] = f.sub(C[i + m], f.mul(coef, B[i]));
            L = n + 1 - L;
            B = std::move(T);
            b = d;
            m = 1;
        } else {
            Fe coef = f.mul(d, f.inv(b));
            if (C.size() < B.size() + m) C.resize(B.size() + m, f.zero());
            for (size_t i = 0; i < B.size(); ++i)
                C[i + m] = f.sub(C[i + m], f.mul(coef, B[i]));
            ++m;
        }
    }
    // Annihilator: reverse C padded to degree L.
    std::vector<Fe> out(L + 1, f.zero());
    for (size_t i = 0; i < C.size() && i <= L; ++i) out[L - i] = C[i];
    return Poly(f, std::move(out));
}

}  // namespace

MinPoly minpoly_bm_lcm(const IterSeq& seq, size_t use_terms) {
    if (seq.available() < use_terms)
        throw InsufficientTerms("minpoly_bm_lcm wants " + std::to_string(use_terms));
    const Field& f = seq.field();
    Poly acc = poly_one(f);
    for (size_t i = 0; i < seq.n(); ++i) {
        std::vector<Fe> s;
        s.reserve(use_terms);
        for (size_t k = 0; k < use_terms; ++k) s.push_back(seq.term(k).get(i));
        Poly p = bm_scalar(f, s);
        acc = poly_lcm(acc, p);
    }
    return minpoly_from_poly(acc);
}

std::optional<uint64_t> poly_order(const MinPoly& mp, uint64_t bound) {
    const Field& f = mp.field;
    if (mp.degree == 0) return 1;
    if (f.is_zero(mp.alpha[0])) throw ZeroConstantTerm();
    // r = X^k mod m(X), raising k by one per step; reduction uses
    // X^m = sum alpha_i X^i.
    std::vector<Fe> r(mp.degree, f.zero());
    std::vector<Fe> one_vec(mp.degree, f.zero());
    one_vec[0] = f.one();
    if (mp.degree == 1) {
        // X = alpha_0 mod (X - alpha_0)
        r[0] = mp.alpha[0];
    } else {
        r[1] = f.one();
    }
    for (uint64_t k = 1; k <= bound; ++k) {
        if (std::equal(r.begin(), r.end(), one_vec.begin(),
                       [&](const Fe& a, const Fe& b) { return f.eq(a, b); }))
            return k;
        // multiply by X
        Fe top = r.back();
        for (size_t i = mp.degree; i-- > 1;) r[i] = r[i - 1];
        r[0] = f.zero();
        if (!f.is_zero(top))
            for (size_t i = 0; i < mp.degree; ++i)
                r[i] = f.add(r[i], f.mul(top, mp.alpha[i]));
    }
    return std::nullopt;
}

StateVec solve_from_minpoly(const IterSeq& seq, const MinPoly& mp) {
    if (mp.field != seq.field()) throw MismatchedField("solve_from_minpoly");
    if (mp.degree == 0 || mp.field.is_zero(mp.alpha[0])) throw ZeroConstantTerm();
    const Field& f = seq.field();
    size_t m = mp.degree;
    StateVec x = seq.term(m - 1);
    for (size_t i = 1; i < m; ++i)
        x.add_scaled(seq.term(i - 1), f.neg(mp.alpha[i]));
    x.scale(f.inv(mp.alpha[0]));
    return x;
}

std::string InversionOutcome::outcome_name() const {
    if (std::holds_alternative<Solved>(result)) return "solved";
    if (std::holds_alternative<EarlyPeriod>(result)) return "early_period";
    if (std::holds_alternative<NoConclusion>(result)) return "no_conclusion";
    return "no_solution";
}

namespace {

// Solve + verify at an accepted degree. Returns true and fills `out` on a
// verified solution; false records a false positive with the schedule moving on.
bool try_conclude(const BlackBoxMap& map, const StateVec& y, const IterSeq& seq,
                  const MinPoly& mp, InversionOutcome& out) {
    StateVec x;
    try {
        x = solve_from_minpoly(seq, mp);
    } catch (const ZeroConstantTerm&) {
        ++out.false_positives;
        return false;
    }
    StateVec fx = map.eval(x);
    ++out.eval_count;
    if (fx == y) {
        out.result = Solved{std::move(x), mp.degree, mp};
        return true;
    }
    ++out.false_positives;
    return false;
}

}  // namespace

InversionOutcome invert_local(const BlackBoxMap& map, const StateVec& y, size_t M,
                              InvertOptions opts) {
    if (!map.square()) throw DimensionMismatch("invert_local needs a square map");
    if (M < 2) throw ValueOutOfRange("compute bound M must be >= 2");
    if (y.field() != map.field || y.dim() != map.n_in)
        throw MismatchedField("invert_local target value");

    InversionOutcome out;
    out.result = NoConclusion{M};
    SeqOptions so;
    so.stop_on_return = opts.early_shortcut;
    IterSeq seq = seq_generate(map, y, M, &out.eval_count, so);

    if (opts.early_shortcut && seq.periodic()) {
        size_t N = *seq.early_period();
        StateVec x = seq.term(N - 1);
        StateVec fx = map.eval(x);
        ++out.eval_count;
        if (fx == y) {
            out.result = EarlyPeriod{std::move(x), N};
        }
        return out;
    }

    size_t mmax = M / 2;
    if (mmax == 0) return out;

    if (opts.mode == InvertMode::paper) {
        // Descending walk; rank H(m+1) at step m is rank H(m) of the previous
        // step, so each step costs one fresh elimination.
        std::optional<size_t> carried_r2;
        for (size_t m = mmax;; --m) {
            size_t r2 = carried_r2 ? *carried_r2
                                   : mat_rank(hankel_build(seq, m + 1, 0));
            size_t r1 = mat_rank(hankel_build(seq, m, 0));
            carried_r2 = r1;
            if (r1 == m && r2 == m) {
                MinPolyResult mr = minpoly_hankel(seq, m);
                if (auto* mp = std::get_if<MinPoly>(&mr)) {
                    if (try_conclude(map, y, seq, *mp, out)) return out;
                } else {
                    ++out.false_positives;
                }
            } else if (r1 < r2) {
                out.result = NoConclusion{M};
                return out;
            }
            if (m == 1) break;
        }
        out.result = NoConclusion{M};
        return out;
    }

    // Progressive: windows double from 1; the final window is mmax. Equal
    // ranks r < m at a window refine the candidate degree to r.
    std::vector<size_t> windows;
    for (size_t m = 1; m < mmax; m *= 2) windows.push_back(m);
    windows.push_back(mmax);
    for (size_t m : windows) {
        size_t r1 = mat_rank(hankel_build(seq, m, 0));
        size_t r2 = mat_rank(hankel_build(seq, m + 1, 0));
        if (r1 != r2 || r1 == 0) continue;
        size_t cand = r1;
        MinPolyResult mr = minpoly_hankel(seq, cand);
        if (auto* mp = std::get_if<MinPoly>(&mr)) {
            if (try_conclude(map, y, seq, *mp, out)) return out;
        }
    }
    out.result = NoConclusion{M};
    return out;
}

}  // namespace locinv
