#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <string>

#include "dqwell/errors.hpp"

namespace dqwell {

/// Uniform lattice x_n = a n on sites n = 0..N; the well width is L = N a.
class LatticeSpec {
 public:
  static LatticeSpec from_spacing(long N, double a) { return LatticeSpec(N, a); }
  static LatticeSpec from_width(long N, double L) {
    if (N < 2) throw DomainError("lattice: N must be >= 2, got " + std::to_string(N));
    return LatticeSpec(N, L / static_cast<double>(N));
  }

  long N() const noexcept { return N_; }
  double a() const noexcept { return a_; }
  double L() const noexcept { return L_; }
  double x(long n) const noexcept { return a_ * static_cast<double>(n); }
  long sites() const noexcept { return N_ + 1; }

  /// Nearest lattice site to a physical position.
  long nearest_site(double x) const;

 private:
  LatticeSpec(long N, double a) : N_(N), a_(a), L_(static_cast<double>(N) * a) {
    if (N < 2) throw DomainError("lattice: N must be >= 2, got " + std::to_string(N));
    if (!(a > 0.0)) throw DomainError("lattice: spacing a must be positive");
  }

  long N_;
  double a_;
  double L_;
};

enum class UnitMode { natural, SI };

/// Mass, Planck and Boltzmann constants of one particle species.
struct ParticleSpec {
  double m_star = 1.0;
  double hbar = 1.0;
  double k_B = 1.0;
  UnitMode unit_mode = UnitMode::natural;

  static ParticleSpec natural() { return {}; }

  static constexpr double kHbarSI = 1.054e-34;  // J s
  static constexpr double kBoltzmannSI = 1.38e-23;  // J/K
  static constexpr double kElectronMassSI = 9.1e-31;  // kg

  static ParticleSpec si(double m_star, double hbar = kHbarSI, double k_B = kBoltzmannSI);

  /// hbar^2 / (2 m* a^2).
  double energy_scale(double a) const noexcept { return hbar * hbar / (2.0 * m_star * a * a); }
};

/// Real function on sites 0..N, extended by zero outside.
template <typename Scalar = double>
class LatticeFunction {
 public:
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  explicit LatticeFunction(long N) : values_(Vector::Zero(N + 1)) {
    if (N < 0) throw DomainError("lattice function: negative N");
  }
  explicit LatticeFunction(Vector values) : values_(std::move(values)) {}

  template <typename F>
  static LatticeFunction sample(long N, F&& f) {
    LatticeFunction out(N);
    for (long n = 0; n <= N; ++n) out.values_[n] = static_cast<Scalar>(f(n));
    return out;
  }

  long N() const noexcept { return static_cast<long>(values_.size()) - 1; }
  bool in_range(long n) const noexcept { return n >= 0 && n <= N(); }

  /// Value at site n; zero outside [0, N].
  Scalar operator()(long n) const noexcept { return in_range(n) ? values_[n] : Scalar(0); }
  Scalar& operator[](long n) { return values_[n]; }
  const Scalar& operator[](long n) const { return values_[n]; }

  const Vector& values() const noexcept { return values_; }
  Vector& values() noexcept { return values_; }

  friend LatticeFunction operator*(const LatticeFunction& f, const LatticeFunction& g) {
    return LatticeFunction(Vector(f.values_.cwiseProduct(g.values_)));
  }

 private:
  Vector values_;
};

using LatticeFunctiond = LatticeFunction<double>;

}  // namespace dqwell
