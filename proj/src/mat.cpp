#include "locinv/mat.hpp"

#include <algorithm>

namespace locinv {

Mat::Mat(const Field& f, size_t rows, size_t cols)
    : field_(f), rows_(rows), cols_(cols) {
    if (f.kind() == FieldKind::GF2) {
        stride_ = (cols + 63) / 64;
        u_.assign(rows * stride_, 0);
    } else {
        e_.assign(rows * cols, f.zero());
    }
}

Fe Mat::get(size_t r, size_t c) const {
    if (r >= rows_ || c >= cols_) throw IndexOutOfRange("Mat::get");
    if (field_.kind() == FieldKind::GF2)
        return Fe(uint64_t((u_[r * stride_ + c / 64] >> (c % 64)) & 1));
    return e_[r * cols_ + c];
}

void Mat::set(size_t r, size_t c, const Fe& v) {
    if (r >= rows_ || c >= cols_) throw IndexOutOfRange("Mat::set");
    if (field_.kind() == FieldKind::GF2) {
        if (v.w & 1)
            u_[r * stride_ + c / 64] |= uint64_t(1) << (c % 64);
        else
            u_[r * stride_ + c / 64] &= ~(uint64_t(1) << (c % 64));
    } else {
        e_[r * cols_ + c] = v;
    }
}

bool Mat::gbit(size_t r, size_t c) const {
    return (u_[r * stride_ + c / 64] >> (c % 64)) & 1;
}

void Mat::sbit(size_t r, size_t c, bool b) {
    if (b)
        u_[r * stride_ + c / 64] |= uint64_t(1) << (c % 64);
    else
        u_[r * stride_ + c / 64] &= ~(uint64_t(1) << (c % 64));
}

namespace {

// Row-echelon elimination on a working copy; shared by rank and solve.
// For solve, the right-hand side rides along as one extra column.
struct Gf2Work {
    size_t rows, cols, stride;
    std::vector<uint64_t> w;

    Gf2Work(const Mat& a, const StateVec* b) {
        rows = a.rows();
        cols = a.cols() + (b ? 1 : 0);
        stride = (cols + 63) / 64;
        w.assign(rows * stride, 0);
        size_t as = a.word_stride();
        for (size_t r = 0; r < rows; ++r) {
            const uint64_t* src = a.row_words(r);
            uint64_t* dst = &w[r * stride];
            std::copy(src, src + as, dst);
            if (b && b->bit(r)) dst[a.cols() / 64] |= uint64_t(1) << (a.cols() % 64);
        }
    }

    bool bit(size_t r, size_t c) const { return (w[r * stride + c / 64] >> (c % 64)) & 1; }

    // The pivot row is zero left of its pivot column, so the xor can start at
    // that word.
    void xor_rows(size_t dst, size_t src, size_t from_word) {
        uint64_t* d = &w[dst * stride];
        const uint64_t* s = &w[src * stride];
        for (size_t k = from_word; k < stride; ++k) d[k] ^= s[k];
    }

    void swap_rows(size_t a, size_t b) {
        if (a == b) return;
        std::swap_ranges(w.begin() + a * stride, w.begin() + (a + 1) * stride,
                         w.begin() + b * stride);
    }

    // Reduced echelon over the leading `ncols` columns; returns pivot columns.
    std::vector<size_t> eliminate(size_t ncols) {
        std::vector<size_t> pivots;
        size_t pr = 0;
        for (size_t c = 0; c < ncols && pr < rows; ++c) {
            size_t sel = rows;
            for (size_t r = pr; r < rows; ++r)
                if (bit(r, c)) { sel = r; break; }
            if (sel == rows) continue;
            swap_rows(pr, sel);
            for (size_t r = 0; r < rows; ++r)
                if (r != pr && bit(r, c)) xor_rows(r, pr, c / 64);
            pivots.push_back(c);
            ++pr;
        }
        return pivots;
    }
};

struct GenWork {
    Field f;
    size_t rows, cols;
    std::vector<Fe> w;

    GenWork(const Mat& a, const StateVec* b) : f(a.field()) {
        rows = a.rows();
        cols = a.cols() + (b ? 1 : 0);
        w.reserve(rows * cols);
        for (size_t r = 0; r < rows; ++r) {
            for (size_t c = 0; c < a.cols(); ++c) w.push_back(a.get(r, c));
            if (b) w.push_back(b->get(r));
        }
    }

    Fe& at(size_t r, size_t c) { return w[r * cols + c]; }

    std::vector<size_t> eliminate(size_t ncols) {
        std::vector<size_t> pivots;
        size_t pr = 0;
        for (size_t c = 0; c < ncols && pr < rows; ++c) {
            size_t sel = rows;
            for (size_t r = pr; r < rows; ++r)
                if (!f.is_zero(at(r, c))) { sel = r; break; }
            if (sel == rows) continue;
            if (sel != pr)
                for (size_t k = 0; k < cols; ++k) std::swap(at(pr, k), at(sel, k));
            Fe piv_inv = f.inv(at(pr, c));
            for (size_t k = c; k < cols; ++k) at(pr, k) = f.mul(at(pr, k), piv_inv);
            for (size_t r = 0; r < rows; ++r) {
                if (r == pr || f.is_zero(at(r, c))) continue;
                Fe scale = at(r, c);
                for (size_t k = c; k < cols; ++k)
                    at(r, k) = f.sub(at(r, k), f.mul(scale, at(pr, k)));
            }
            pivots.push_back(c);
            ++pr;
        }
        return pivots;
    }
};

}  // namespace

size_t mat_rank(const Mat& a) {
    if (a.rows() == 0 || a.cols() == 0) return 0;
    if (a.field().kind() == FieldKind::GF2) {
        Gf2Work work(a, nullptr);
        return work.eliminate(a.cols()).size();
    }
    GenWork work(a, nullptr);
    return work.eliminate(a.cols()).size();
}

SolveResult mat_solve(const Mat& a, const StateVec& b) {
    if (b.field() != a.field()) throw MismatchedField("mat_solve");
    if (b.dim() != a.rows()) throw DimensionMismatch("mat_solve rhs");
    const Field& f = a.field();
    size_t n = a.cols();

    if (f.kind() == FieldKind::GF2) {
        Gf2Work work(a, &b);
        auto pivots = work.eliminate(n);
        for (size_t r = pivots.size(); r < work.rows; ++r)
            if (work.bit(r, n)) return Inconsistent{};
        LinSolution sol{StateVec(f, n), n - pivots.size()};
        for (size_t i = 0; i < pivots.size(); ++i)
            sol.x.set_bit(pivots[i], work.bit(i, n));
        return sol;
    }

    GenWork work(a, &b);
    auto pivots = work.eliminate(n);
    for (size_t r = pivots.size(); r < work.rows; ++r)
        if (!f.is_zero(work.at(r, n))) return Inconsistent{};
    LinSolution sol{StateVec(f, n), n - pivots.size()};
    for (size_t i = 0; i < pivots.size(); ++i) sol.x.set(pivots[i], work.at(i, n));
    return sol;
}

}  // namespace locinv
