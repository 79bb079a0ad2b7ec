#pragma once

// Centered differences, translations and the discrete (anti)integral on the
// integer lattice. Lattice functions vanish outside [0, N], which makes the
// antidifference series a finite sum.

#include <cmath>
#include <string>

#include "dqwell/errors.hpp"
#include "dqwell/lattice.hpp"

namespace dqwell {

namespace detail {
template <typename Scalar>
void require_site(const LatticeFunction<Scalar>& f, long n, const char* what) {
  if (!f.in_range(n))
    throw DomainError(std::string(what) + ": site " + std::to_string(n) + " outside [0, " +
                      std::to_string(f.N()) + "]");
}
}  // namespace detail

/// (f(n+1) - f(n-1)) / 2a
template <typename Scalar>
Scalar centered_diff1(const LatticeFunction<Scalar>& f, long n, Scalar a) {
  detail::require_site(f, n, "centered_diff1");
  return (f(n + 1) - f(n - 1)) / (Scalar(2) * a);
}

/// (f(n+2) - 2 f(n) + f(n-2)) / 4a^2, the square of centered_diff1.
template <typename Scalar>
Scalar centered_diff2(const LatticeFunction<Scalar>& f, long n, Scalar a) {
  detail::require_site(f, n, "centered_diff2");
  return (f(n + 2) - Scalar(2) * f(n) + f(n - 2)) / (Scalar(4) * a * a);
}

/// T_m f: result(n) = f(n + m), zero where n + m leaves the support.
template <typename Scalar>
LatticeFunction<Scalar> translate(const LatticeFunction<Scalar>& f, long m) {
  LatticeFunction<Scalar> out(f.N());
  for (long n = 0; n <= f.N(); ++n) out[n] = f(n + m);
  return out;
}

/// F(n) = -2a sum_{k>=0} f(n + 2k + 1). Any integer n is accepted; the sum
/// stops at the end of the support.
template <typename Scalar>
Scalar antiderivative_series(const LatticeFunction<Scalar>& f, long n, Scalar a) {
  Scalar sum(0);
  long m = n + 1;
  if (m < 0) m += 2 * ((-m + 1) / 2);  // first same-parity site >= 0
  for (; m <= f.N(); m += 2) sum += f(m);
  return Scalar(-2) * a * sum;
}

/// antiderivative_series tabulated on every site.
template <typename Scalar>
LatticeFunction<Scalar> antiderivative(const LatticeFunction<Scalar>& f, Scalar a) {
  const long N = f.N();
  LatticeFunction<Scalar> F(N);
  // Suffix sums on each sublattice: F(n) = F(n+2) - 2a f(n+1).
  if (N >= 0) F[N] = Scalar(0);
  if (N >= 1) F[N - 1] = Scalar(-2) * a * f(N);
  for (long n = N - 2; n >= 0; --n) F[n] = F[n + 2] - Scalar(2) * a * f(n + 1);
  return F;
}

/// F(n_max) - F(n_min) with F from antiderivative_series.
template <typename Scalar>
Scalar definite_integral(const LatticeFunction<Scalar>& f, long n_min, long n_max, Scalar a) {
  detail::require_site(f, n_min, "definite_integral");
  detail::require_site(f, n_max, "definite_integral");
  if (n_min > n_max)
    throw DomainError("definite_integral: n_min " + std::to_string(n_min) + " > n_max " +
                      std::to_string(n_max));
  return antiderivative_series(f, n_max, a) - antiderivative_series(f, n_min, a);
}

/// Integral over the whole lattice [0, N].
template <typename Scalar>
Scalar definite_integral(const LatticeFunction<Scalar>& f, Scalar a) {
  return definite_integral(f, 0, f.N(), a);
}

enum class AntiderivativeKind { one, cos, sin, sin2 };

inline constexpr double kSingularSineTolerance = 1e-12;

/// Tabulated antidifferences with unit spacing:
///   1 -> n,  cos na -> sin na / sin a,  sin na -> -cos na / sin a,
///   sin^2 na -> n/2 - sin 2na / (2 sin 2a).
/// Throws SingularQuadrature when the sine denominator vanishes.
template <typename Scalar>
Scalar closed_form_antiderivative(AntiderivativeKind kind, Scalar alpha, long n) {
  using std::cos;
  using std::sin;
  using std::abs;
  const Scalar nn = static_cast<Scalar>(n);
  switch (kind) {
    case AntiderivativeKind::one:
      return nn;
    case AntiderivativeKind::cos:
    case AntiderivativeKind::sin: {
      const Scalar s = sin(alpha);
      if (abs(s) < Scalar(kSingularSineTolerance))
        throw SingularQuadrature("closed_form_antiderivative: sin(alpha) = 0");
      return kind == AntiderivativeKind::cos ? sin(nn * alpha) / s : -cos(nn * alpha) / s;
    }
    case AntiderivativeKind::sin2: {
      const Scalar s2 = sin(Scalar(2) * alpha);
      if (abs(s2) < Scalar(kSingularSineTolerance))
        throw SingularQuadrature("closed_form_antiderivative: sin(2 alpha) = 0");
      return nn / Scalar(2) - sin(Scalar(2) * nn * alpha) / (Scalar(2) * s2);
    }
  }
  return Scalar(0);
}

}  // namespace dqwell
