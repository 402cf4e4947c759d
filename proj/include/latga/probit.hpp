#pragma once

namespace latga {

/// Standard normal quantile (inverse CDF) for q in (0, 1).
/// Rational approximation refined with one Newton step; absolute error
/// is well below 1e-9 across the open interval.
/// Throws std::domain_error outside (0, 1).
double probit(double q);

}  // namespace latga
