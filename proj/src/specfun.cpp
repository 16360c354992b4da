#include "specfun.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace shotrng {

namespace {

constexpr long double kPiL = 3.141592653589793238462643383279503L;

// Largest term count for which the ascending series is used.  Beyond this
// the continued-fraction / downward-recurrence route takes over; the two
// regimes overlap around z ~ 6e3 and agree to ~1e-13 there.
constexpr double kSeriesMaxTerms = 4000.0;

// Index of the largest term of the ascending series for I_j(z).
double series_peak(long long j, double z) {
  const double jp = static_cast<double>(j) + 1.0;
  return 0.5 * (std::hypot(jp, z) - jp);
}

// Ascending series, accumulated in long double with a running maximum so
// that only ratios ever leave log space.  All terms are positive.
double log_bessel_series(long long j, double z) {
  const long double half_log = logl(static_cast<long double>(z) * 0.5L);
  long double t = static_cast<long double>(j) * half_log -
                  lgammal(static_cast<long double>(j) + 1.0L);
  long double best = t;
  long double acc = 1.0L;  // sum of exp(t_m - best)
  const double peak = series_peak(j, z);
  const long long hard_cap =
      static_cast<long long>(kSeriesMaxTerms) + 2000;
  for (long long m = 1; m <= hard_cap; ++m) {
    t += 2.0L * half_log - logl(static_cast<long double>(m)) -
         logl(static_cast<long double>(m + j));
    if (t > best) {
      acc = acc * expl(best - t) + 1.0L;
      best = t;
    } else {
      const long double d = t - best;
      // Past the peak the terms decay super-geometrically; exp(-64) puts
      // the omitted tail far below the double representation of the sum.
      if (d < -64.0L && static_cast<double>(m) > peak) break;
      acc += expl(d);
    }
  }
  return static_cast<double>(best + logl(acc));
}

// Large-argument expansion of ln I_0(z); requires z >= 50, where the
// truncated tail and the subdominant e^{-z} branch are both below 1e-20
// relative.
double log_bessel_i0_large(double z) {
  const long double zl = static_cast<long double>(z);
  long double s = 1.0L;
  long double t = 1.0L;
  for (int k = 1; k <= 40; ++k) {
    const long double odd = 2.0L * k - 1.0L;
    t *= odd * odd / (8.0L * k * zl);
    s += t;
    if (t < s * 1e-22L) break;
  }
  return static_cast<double>(zl - 0.5L * logl(2.0L * kPiL * zl) + logl(s));
}

// I_{nu+1}(z) / I_nu(z) by the modified Lentz continued fraction.
double bessel_ratio_cf(long long nu, double z) {
  const double tiny = 1e-300;
  double f = tiny;
  double c = f;
  double d = 0.0;
  const double nud = static_cast<double>(nu);
  const long long maxit =
      static_cast<long long>(std::sqrt(nud * nud + 60.0 * z) - nud) + 400;
  for (long long k = 1; k <= maxit; ++k) {
    const double b = 2.0 * (nud + static_cast<double>(k)) / z;
    d = b + d;
    if (d == 0.0) d = tiny;
    c = b + 1.0 / c;
    if (c == 0.0) c = tiny;
    d = 1.0 / d;
    const double delta = c * d;
    f *= delta;
    if (std::abs(delta - 1.0) < 1e-16) return f;
  }
  throw std::runtime_error("log_bessel_i: ratio continued fraction stalled");
}

// Downward recurrence f_{k-1} = f_{k+1} + (2k/z) f_k seeded at `top` with
// the continued-fraction ratio.  Errors stay relatively bounded because the
// wanted solution dominates in the downward direction.  Returns
// ln(I_k / I_top) for k = 0..top.
std::vector<double> sweep_levels(long long top, double z) {
  std::vector<double> lf(static_cast<std::size_t>(top) + 1);
  double f_up = bessel_ratio_cf(top, z);  // f_{top+1}
  double f_k = 1.0;
  double scale = 0.0;
  lf[static_cast<std::size_t>(top)] = 0.0;
  for (long long k = top; k >= 1; --k) {
    const double f_down = f_up + (2.0 * static_cast<double>(k) / z) * f_k;
    f_up = f_k;
    f_k = f_down;
    if (f_k > 1e280) {
      f_up /= f_k;
      scale += std::log(f_k);
      f_k = 1.0;
    }
    lf[static_cast<std::size_t>(k - 1)] = std::log(f_k) + scale;
  }
  return lf;
}

double log_bessel_sweep(long long j, double z) {
  double f_up = bessel_ratio_cf(j, z);
  double f_k = 1.0;
  double scale = 0.0;
  for (long long k = j; k >= 1; --k) {
    const double f_down = f_up + (2.0 * static_cast<double>(k) / z) * f_k;
    f_up = f_k;
    f_k = f_down;
    if (f_k > 1e280) {
      f_up /= f_k;
      scale += std::log(f_k);
      f_k = 1.0;
    }
  }
  const double ln_f0 = std::log(f_k) + scale;  // ln(I_0 / I_j)
  return log_bessel_i0_large(z) - ln_f0;
}

void check_argument(double z) {
  if (!std::isfinite(z) || z < 0.0)
    throw std::domain_error("log_bessel_i: argument must be finite and >= 0");
}

}  // namespace

double log_sum_exp(std::span<const double> terms) {
  double m = kLogZero;
  for (double t : terms) {
    if (std::isnan(t) || t == std::numeric_limits<double>::infinity())
      throw std::domain_error("log_sum_exp: NaN or +inf term");
    m = std::max(m, t);
  }
  if (terms.empty() || m == kLogZero) return kLogZero;
  double s = 0.0;
  double comp = 0.0;
  for (double t : terms) {
    const double e = std::exp(t - m);
    const double y = e - comp;
    const double u = s + y;
    comp = (u - s) - y;
    s = u;
  }
  return m + std::log(s);
}

double log_add(double a, double b) {
  const double terms[2] = {a, b};
  return log_sum_exp(terms);
}

double log_factorial(long long n) {
  if (n < 0) throw std::domain_error("log_factorial: negative argument");
  static constexpr unsigned long long kFact[21] = {
      1ULL,
      1ULL,
      2ULL,
      6ULL,
      24ULL,
      120ULL,
      720ULL,
      5040ULL,
      40320ULL,
      362880ULL,
      3628800ULL,
      39916800ULL,
      479001600ULL,
      6227020800ULL,
      87178291200ULL,
      1307674368000ULL,
      20922789888000ULL,
      355687428096000ULL,
      6402373705728000ULL,
      121645100408832000ULL,
      2432902008176640000ULL};
  if (n <= 20) return static_cast<double>(logl(static_cast<long double>(kFact[n])));
  return static_cast<double>(lgammal(static_cast<long double>(n) + 1.0L));
}

double log_bessel_i(long long order, double z) {
  check_argument(z);
  const long long j = order < 0 ? -order : order;  // I_{-j} = I_j
  if (z == 0.0) return j == 0 ? 0.0 : kLogZero;
  const double peak = series_peak(j, z);
  const double estimated_terms = peak + 15.0 * std::sqrt(peak + 1.0) + 40.0;
  if (estimated_terms <= kSeriesMaxTerms) return log_bessel_series(j, z);
  return log_bessel_sweep(j, z);
}

std::vector<double> log_bessel_i_family(long long max_order, double z) {
  check_argument(z);
  if (max_order < 0)
    throw std::domain_error("log_bessel_i_family: negative max_order");
  std::vector<double> out(static_cast<std::size_t>(max_order) + 1);
  if (z == 0.0) {
    out.assign(out.size(), kLogZero);
    out[0] = 0.0;
    return out;
  }
  if (z < 50.0) {
    // Small arguments: the per-order series is a handful of terms.
    for (long long k = 0; k <= max_order; ++k)
      out[static_cast<std::size_t>(k)] = log_bessel_series(k, z);
    return out;
  }
  const auto lf = sweep_levels(max_order, z);
  const double anchor = log_bessel_i0_large(z);
  for (std::size_t k = 0; k < out.size(); ++k)
    out[k] = anchor + (lf[k] - lf[0]);
  return out;
}

}  // namespace shotrng
