#include "authsim/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "authsim/types.hpp"

namespace authsim::specfun {

namespace {

constexpr double kSqrt2 = 1.4142135623730950488016887242097;
constexpr int kMaxSeriesTerms = 100000;

double clamp01(double p) { return std::min(1.0, std::max(0.0, p)); }

/// Poisson pmf e^{-mu} mu^n / n! evaluated in log space.
double poisson_pmf(long n, double mu) {
    if (mu == 0.0) return n == 0 ? 1.0 : 0.0;
    return std::exp(static_cast<double>(n) * std::log(mu) - std::lgamma(static_cast<double>(n) + 1.0) - mu);
}

/// Rational approximation for the standard normal quantile (P. Acklam).
double norm_quantile_estimate(double q) {
    static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                               -2.759285104469687e+02, 1.383577518672690e+02,
                               -3.066479806614716e+01, 2.506628277459239e+00};
    static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                               -1.556989798598866e+02, 6.680131188771972e+01,
                               -1.328068155288572e+01};
    static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                               -2.400758277161838e+00, -2.549732539343734e+00,
                               4.374664141464968e+00,  2.938163982698783e+00};
    static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                               2.445134137142996e+00, 3.754408661907416e+00};
    const double plow = 0.02425;
    if (q < plow) {
        const double u = std::sqrt(-2.0 * std::log(q));
        return (((((c[0] * u + c[1]) * u + c[2]) * u + c[3]) * u + c[4]) * u + c[5]) /
               ((((d[0] * u + d[1]) * u + d[2]) * u + d[3]) * u + 1.0);
    }
    if (q > 1.0 - plow) {
        const double u = std::sqrt(-2.0 * std::log(1.0 - q));
        return -(((((c[0] * u + c[1]) * u + c[2]) * u + c[3]) * u + c[4]) * u + c[5]) /
               ((((d[0] * u + d[1]) * u + d[2]) * u + d[3]) * u + 1.0);
    }
    const double u = q - 0.5;
    const double r = u * u;
    return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * u /
           (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
}

}  // namespace

double gauss_q(double x) { return 0.5 * std::erfc(x / kSqrt2); }

double gauss_q_inv(double p) {
    if (!(p > 0.0 && p < 1.0)) {
        throw DomainError("gauss_q_inv: p must lie in (0,1)");
    }
    // Q(x) = p  <=>  x is the standard normal quantile of 1-p.
    double x = norm_quantile_estimate(1.0 - p);
    for (int i = 0; i < 3; ++i) {
        const double pdf = std::exp(-0.5 * x * x) * 0.39894228040143267794;
        if (pdf <= std::numeric_limits<double>::min()) break;
        x += (gauss_q(x) - p) / pdf;
    }
    return x;
}

double inc_gamma_upper_reg(int m, double x) {
    if (m < 1) throw DomainError("inc_gamma_upper_reg: M must be >= 1");
    if (x < 0.0) throw DomainError("inc_gamma_upper_reg: x must be >= 0");
    if (x == 0.0) return 1.0;
    double sum;
    if (x < 700.0) {
        double term = std::exp(-x);
        sum = term;
        for (int k = 1; k < m; ++k) {
            term *= x / static_cast<double>(k);
            sum += term;
        }
    } else {
        sum = 0.0;
        for (int k = 0; k < m; ++k) sum += poisson_pmf(k, x);
    }
    return clamp01(sum);
}

double marcum_q(int m, double a, double b) {
    if (m < 1) throw DomainError("marcum_q: M must be >= 1");
    if (a < 0.0 || b < 0.0) throw DomainError("marcum_q: a and b must be >= 0");
    if (!std::isfinite(a) || !std::isfinite(b)) throw DomainError("marcum_q: arguments must be finite");
    const double x = 0.5 * a * a;  // Poisson intensity of the mixture
    const double y = 0.5 * b * b;  // incomplete-gamma argument
    if (y == 0.0) return 1.0;
    if (x == 0.0) return inc_gamma_upper_reg(m, y);

    // Q_M(a,b) = sum_k pois(k; x) * Q(M+k, y). Sweep outward from the
    // Poisson mode so the weights never underflow, updating the gamma
    // term incrementally: Q(n+1, y) = Q(n, y) + pois(n; y).
    const long k0 = static_cast<long>(std::floor(x));
    if (k0 + m > kMaxSeriesTerms) {
        throw Error("marcum_q: series did not converge within term budget");
    }
    const double w0 = poisson_pmf(k0, x);
    const double g0 = inc_gamma_upper_reg(m + static_cast<int>(k0), y);
    const double t0 = poisson_pmf(m + k0, y);  // pois(M+k0; y)

    double total = w0 * g0;
    double weight_seen = w0;

    // Upward sweep: k = k0+1, k0+2, ...
    {
        double w = w0, g = g0, t = t0;
        long k = k0;
        for (int steps = 0; steps < kMaxSeriesTerms; ++steps) {
            g = std::min(1.0, g + t);
            w *= x / static_cast<double>(k + 1);
            ++k;
            total += w * g;
            weight_seen += w;
            if (1.0 - weight_seen < 1e-12) break;
            t *= y / static_cast<double>(m + k);
        }
    }

    // Downward sweep: k = k0-1, ..., 0.
    {
        double w = w0, g = g0;
        double t = poisson_pmf(m + k0 - 1, y);  // pois(M+k-1; y) for the step to k-1
        for (long k = k0; k > 0; --k) {
            w *= static_cast<double>(k) / x;
            g = std::max(0.0, g - t);
            total += w * g;
            weight_seen += w;
            if (1.0 - weight_seen < 1e-12) break;
            t *= static_cast<double>(m + k - 1) / y;
        }
    }

    if (1.0 - weight_seen >= 1e-9) {
        throw Error("marcum_q: series did not converge within term budget");
    }
    return clamp01(total);
}

double marcum_q_inv_b(int m, double a, double q) {
    if (!(q > 0.0 && q < 1.0)) throw DomainError("marcum_q_inv_b: q must lie in (0,1)");
    if (a < 0.0) throw DomainError("marcum_q_inv_b: a must be >= 0");
    // Bracket on y = b^2/2; the distribution mean is 2M + a^2 in chi-square
    // units, i.e. M + a^2/2 in y units.
    double lo = 0.0;
    double hi = m + 0.5 * a * a + 10.0 * std::sqrt(static_cast<double>(m) + a * a) + 10.0;
    for (int i = 0; i < 200 && marcum_q(m, a, std::sqrt(2.0 * hi)) > q; ++i) hi *= 2.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (marcum_q(m, a, std::sqrt(2.0 * mid)) > q) {
            lo = mid;
        } else {
            hi = mid;
        }
        if (hi - lo <= 0.5e-10 * std::max(1.0, hi)) break;
    }
    return std::sqrt(2.0 * 0.5 * (lo + hi));
}

}  // namespace authsim::specfun
