#pragma once

namespace authsim::specfun {

/// Gaussian tail probability Q(x) = P[N(0,1) >= x].
double gauss_q(double x);

/// Inverse of gauss_q on (0, 1).
double gauss_q_inv(double p);

/// Upper regularized incomplete gamma for integer order:
/// Q(M, x) = e^{-x} sum_{k=0}^{M-1} x^k / k!  (survival of Gamma(M, 1) at x).
double inc_gamma_upper_reg(int m, double x);

/// Generalized Marcum Q-function Q_M(a, b): survival function of the
/// normalized noncentral chi-square with 2M degrees of freedom and
/// noncentrality a^2, evaluated at b^2. Absolute accuracy ~1e-10.
double marcum_q(int m, double a, double b);

/// Solve Q_M(a, b) = q for b >= 0 (q in (0,1)); bracketing + bisection on b^2.
double marcum_q_inv_b(int m, double a, double q);

}  // namespace authsim::specfun
