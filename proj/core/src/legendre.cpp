#include "lgldyadic/legendre.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace lgldyadic {
namespace {

void check_degree(int degree) {
  if (degree < 0 || degree > kMaxLegendreDegree) {
    throw std::out_of_range("legendre degree " + std::to_string(degree) +
                            " outside [0, " + std::to_string(kMaxLegendreDegree) + "]");
  }
}

// k/(k+1) and (2k+1)/(k+1): keeps divisions out of the recurrence chain.
struct Coefficients {
  std::array<double, kMaxLegendreDegree + 1> ratio{};
  std::array<double, kMaxLegendreDegree + 1> weight{};
  Coefficients() {
    for (int k = 0; k <= kMaxLegendreDegree; ++k) {
      ratio[k] = k / (k + 1.0);
      weight[k] = (2.0 * k + 1.0) / (k + 1.0);
    }
  }
};

const Coefficients& coefficients() {
  static const Coefficients table;
  return table;
}

// Evaluates at y = 1 - u. Both are passed so that neither has to be
// reconstructed from the other with a rounding error.
LegendreEval eval_from_right(int n, double y, double u) {
  if (n == 0) {
    return {1.0, 0.0, 0.0};
  }

  double p_prev = 1.0;
  double p = y;
  double dp_prev = 0.0;
  double dp = 1.0;
  double ddp_prev = 0.0;
  double ddp = 0.0;

  // Near y = 1 the three-term recurrence is rewritten in terms of the
  // increments P_{k+1} - P_k, in which u appears only as a factor.
  const bool incremental = u < 0.5;
  double increment = -u;

  const Coefficients& c = coefficients();
  for (int k = 1; k < n; ++k) {
    const double two_k_plus_one = 2.0 * k + 1.0;
    double p_next;
    if (incremental) {
      increment = c.ratio[k] * increment - c.weight[k] * u * p;
      p_next = p + increment;
    } else {
      p_next = c.weight[k] * y * p - c.ratio[k] * p_prev;
    }
    // P'_{k+1} = P'_{k-1} + (2k+1) P_k, differentiated once more for P''.
    const double dp_next = dp_prev + two_k_plus_one * p;
    const double ddp_next = ddp_prev + two_k_plus_one * dp;

    p_prev = p;
    p = p_next;
    dp_prev = dp;
    dp = dp_next;
    ddp_prev = ddp;
    ddp = ddp_next;
  }
  return {p, dp, ddp};
}

LegendreEval reflect(int n, LegendreEval e) {
  if (n % 2 == 0) {
    e.derivative = -e.derivative;
  } else {
    e.value = -e.value;
    e.second_derivative = -e.second_derivative;
  }
  return e;
}

}  // namespace

LegendreEval legendre_eval(int degree, double x) {
  check_degree(degree);
  if (!(x >= -1.0 && x <= 1.0)) {
    throw std::domain_error("legendre argument outside [-1, 1]");
  }
  const double y = std::fabs(x);
  const LegendreEval e = eval_from_right(degree, y, 1.0 - y);
  return x < 0.0 ? reflect(degree, e) : e;
}

LegendreEval legendre_eval_near_endpoint(int degree, Endpoint side, double offset) {
  check_degree(degree);
  if (!(offset >= 0.0 && offset <= 2.0)) {
    throw std::domain_error("endpoint offset outside [0, 2]");
  }
  const LegendreEval e = eval_from_right(degree, 1.0 - offset, offset);
  return side == Endpoint::left ? reflect(degree, e) : e;
}

}  // namespace lgldyadic
