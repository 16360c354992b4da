#pragma once

#include <limits>
#include <span>
#include <vector>

namespace shotrng {

// Log-domain convention used throughout the library: a nonnegative real x is
// carried as ln(x), with -infinity standing for x == 0.
inline constexpr double kLogZero = -std::numeric_limits<double>::infinity();

/// ln(sum_i exp(terms[i])) without overflow.  Empty input yields -inf.
/// Throws std::domain_error if any term is NaN or +inf.
double log_sum_exp(std::span<const double> terms);

/// Two-term log_sum_exp.
double log_add(double a, double b);

/// ln(n!).  Exact integer product for n <= 20, log-gamma beyond.
double log_factorial(long long n);

/// ln I_j(z) for integer order and real z >= 0.
///
/// Negative orders are folded with I_{-j} = I_j.  Relative accuracy in
/// I_j(z) is ~1e-13 for order <= 1e6, z <= 1e8, up to the representation
/// limit of double once |ln I| exceeds ~1e4 (the ulp of the stored log then
/// dominates).  Evaluation uses the ascending series where it converges in
/// a bounded number of terms, and otherwise a continued-fraction ratio seed
/// with downward recurrence anchored at a large-argument evaluation of I_0.
double log_bessel_i(long long order, double z);

/// ln I_j(z) for every order j = 0..max_order in one pass.
std::vector<double> log_bessel_i_family(long long max_order, double z);

}  // namespace shotrng
