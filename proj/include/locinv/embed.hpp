#pragma once

// Local inversion of embeddings F : F^n -> F^m with n < m, via sliding
// projection windows. Window i (1-based, i = 1..t+1 with t = m-n) keeps
// coordinates i-1 .. i+n-2, so the composed maps F_i = window_i . F are
// square and the union of windows covers all m output coordinates. A
// candidate pre-image from any window must reproduce every other window of y
// and the full equation y = F(x) before it is accepted.

#include "locinv/lrs.hpp"

namespace locinv {

// Coordinates i-1 .. i+n-2 of x (window index is 1-based).
StateVec project(size_t i, const StateVec& x, size_t n);

InversionOutcome invert_embedding(const BlackBoxMap& map, const StateVec& y,
                                  size_t M, InvertOptions opts = {});

}  // namespace locinv
