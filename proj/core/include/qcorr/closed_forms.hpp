#pragma once

#include <array>

#include "qcorr/dynamics.hpp"

namespace qcorr {

/// Closed-form quantifier expressions for the JC model, written in terms of
/// the frozen-noise entries (u, v, w, z, y). Evaluated as written: square
/// roots of negative arguments and divisions by zero give NaN. Pairs with a
/// vanishing eigenvalue sum inside the Fisher sums are dropped, as in the
/// generic pipeline.
struct JCClosedForms {
  double w11 = 0.0;
  double w22 = 0.0;
  double w33 = 0.0;
  double lqu = 0.0;
  std::array<double, 4> eta{};  // eta_1 .. eta_4 in closed-form order
  double chi_minus = 0.0;
  double chi_plus = 0.0;
  // Same ratio with the factor 16 under the root replaced by 1, which is the
  // form consistent with eta_3,4.
  double chi_minus_alt = 0.0;
  double chi_plus_alt = 0.0;
  double m11 = 0.0;
  double m22 = 0.0;
  double m33 = 0.0;
  double lqfi = 0.0;
  double coherence = 0.0;  // natural logarithms over 2 ln 2, i.e. bits
};

JCClosedForms jc_closed_forms(const JCParams& p);

/// Closed-form quantifier expressions for the dephasing model.
struct DephasingClosedForms {
  std::array<double, 4> lambda{};  // lambda_1 .. lambda_4 in closed-form order
  double eps_minus = 0.0;
  double eps_plus = 0.0;
  double m11 = 0.0;
  double m22 = 0.0;
  double m33 = 0.0;
  double lqfi = 0.0;
  double sigma = 0.0;
  double theta = 0.0;
  double w11 = 0.0;
  double w22 = 0.0;
  double w33 = 0.0;
  double lqu = 0.0;
  double varpi = 0.0;
  double delta = 0.0;
  double coherence = 0.0;  // natural logarithms as written
};

DephasingClosedForms dephasing_closed_forms(const DephasingParams& p);

}  // namespace qcorr
