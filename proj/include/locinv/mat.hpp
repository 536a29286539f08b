#pragma once

// Dense matrices over a field with exact Gaussian elimination.
//
// GF(2) matrices are stored row-major as packed 64-bit words, and elimination
// works word-at-a-time; this is the performance path the Hankel rank tests
// ride. Other fields use one element per entry. Pivoting is deterministic
// (first nonzero entry in column order), so results are reproducible.

#include <cstdint>
#include <variant>
#include <vector>

#include "locinv/field.hpp"

namespace locinv {

class Mat {
  public:
    Mat() = default;
    Mat(const Field& f, size_t rows, size_t cols);

    const Field& field() const { return field_; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    Fe get(size_t r, size_t c) const;
    void set(size_t r, size_t c, const Fe& v);

    // GF(2) fast accessors.
    bool gbit(size_t r, size_t c) const;
    void sbit(size_t r, size_t c, bool b);
    size_t word_stride() const { return stride_; }
    uint64_t* row_words(size_t r) { return u_.data() + r * stride_; }
    const uint64_t* row_words(size_t r) const { return u_.data() + r * stride_; }

  private:
    Field field_;
    size_t rows_ = 0, cols_ = 0;
    size_t stride_ = 0;              // GF2: words per row
    std::vector<uint64_t> u_;        // GF2 packed storage
    std::vector<Fe> e_;              // generic storage, row-major

    friend size_t mat_rank(const Mat&);
    friend class Eliminator;
};

size_t mat_rank(const Mat& a);

// Solution of a*x = b. nullity == 0 means the solution is unique; otherwise
// x is the particular solution with all free variables set to zero.
struct LinSolution {
    StateVec x;
    size_t nullity = 0;
};
struct Inconsistent {};
using SolveResult = std::variant<LinSolution, Inconsistent>;

SolveResult mat_solve(const Mat& a, const StateVec& b);

}  // namespace locinv
