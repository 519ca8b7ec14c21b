#pragma once

namespace lgldyadic {

/// Highest Legendre degree the evaluator accepts.
inline constexpr int kMaxLegendreDegree = 2001;

/// L_N(x) together with its first and second derivatives, normalized so L_N(1) = 1.
struct LegendreEval {
  double value = 0.0;
  double derivative = 0.0;
  double second_derivative = 0.0;
};

enum class Endpoint { left, right };

/// Evaluates L_N, L_N' and L_N'' at x in [-1, 1].
///
/// Throws std::out_of_range if degree is outside [0, kMaxLegendreDegree] and
/// std::domain_error if x is outside [-1, 1].
LegendreEval legendre_eval(int degree, double x);

/// Evaluates at x = -1 + offset (left) or x = 1 - offset (right).
///
/// The offset enters the recurrence only multiplicatively when it is small,
/// so nodes clustered at an endpoint keep their full relative precision.
/// Requires offset in [0, 2].
LegendreEval legendre_eval_near_endpoint(int degree, Endpoint side, double offset);

}  // namespace lgldyadic
