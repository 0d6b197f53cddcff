#pragma once

#include "nas/lie.hpp"
#include "nas/series.hpp"

namespace nas {

// The F_p-linear projectors S and R on the windowed Laurent ring, split by
// the sign class of the exponent:
//   a > 0:             S = 0,  R = -sum_{i>=0} sigma^i   (finite in window)
//   a = 0:             S = alpha0 Tr,  R = sum_{0<=j<i<N0} sigma^j(alpha0) sigma^i
//   a = -a1 p^m < 0:   S = sigma^{-m}, R = sum_{1<=i<=m} sigma^{-i}
// They satisfy b = S(b) + (sigma - id) R(b) exactly within the window.

Series op_S(const Series& b, const GfElem& alpha0);
Series op_R(const Series& b, const GfElem& alpha0);

// returns (S(b), R(b)) and checks the splitting identity within the window
std::pair<Series, Series> split_check(const Series& b, const GfElem& alpha0);

// coefficient-wise extension through the Laurent factor of Lie x Series
LieSeries op_S_lie(const LieSeries& x, const GfElem& alpha0);
LieSeries op_R_lie(const LieSeries& x, const GfElem& alpha0);

// number of sigma-orbit steps before exponent e leaves the window; throws
// if the orbit cannot leave (unbounded window in the driving component)
int orbit_steps(const MultiIndex& e, Int p, const Window& w);

} // namespace nas
