#include "dqwell/lattice.hpp"

#include <cmath>

namespace dqwell {

long LatticeSpec::nearest_site(double x) const {
  const long n = std::lround(x / a_);
  if (n < 0 || n > N_) throw DomainError("nearest_site: position outside the well");
  return n;
}

ParticleSpec ParticleSpec::si(double m_star, double hbar, double k_B) {
  if (!(m_star > 0.0)) throw DomainError("particle: m_star must be positive");
  if (!(hbar > 0.0)) throw DomainError("particle: hbar must be positive");
  if (!(k_B > 0.0)) throw DomainError("particle: k_B must be positive");
  return {m_star, hbar, k_B, UnitMode::SI};
}

}  // namespace dqwell
