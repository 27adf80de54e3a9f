#ifndef PATHLAT_UNITS_HPP
#define PATHLAT_UNITS_HPP

#include <cstdint>
#include <vector>

#include "pathlat/rational.hpp"

namespace pathlat {

/// Scaled physical constants with th/2m = 1 fixed exactly.  t = pi * t_over_pi
/// and h are the free inputs; m = th/2 and hbar = h/2pi are derived.  Other
/// integer values of th/2m would need small changes in several formulas and
/// are not supported.
class UnitSystem {
 public:
  static UnitSystem make(const Rational& t_over_pi, const Rational& h);

  PiScalar t() const { return PiScalar(t_over_pi_, 1); }
  Rational t_over_pi() const { return t_over_pi_; }
  Rational h() const { return h_; }
  PiScalar h_scalar() const { return PiScalar::rational(h_); }
  PiScalar m() const { return t() * h_scalar() / PiScalar::rational(2); }
  PiScalar hbar() const { return PiScalar(h_ / 2, -1); }

  /// th/m, exactly 2 by construction.
  Rational th_over_m() const { return (t() * h_scalar() / m()).as_rational(); }

  /// m/(2 pi hbar t) = 1/(th/m); enters every kernel amplitude.
  Rational m_over_2pi_hbar_t() const {
    return (m() / (PiScalar::rational(2) * PiScalar::pi_multiple(1) * hbar() * t())).as_rational();
  }

 private:
  Rational t_over_pi_;
  Rational h_;
};

/// N = sqrt_n^2 with the divisibility constraints the lattice family imposes.
struct LatticeSpec {
  std::int64_t sqrt_n = 0;
  std::vector<std::int64_t> required_divisors;
  static LatticeSpec make(std::int64_t sqrt_n, std::vector<std::int64_t> required_divisors = {});
  std::int64_t n() const { return sqrt_n * sqrt_n; }
};

/// delta: {1..k_max} -> {1,2,...}; constant or tabulated.  delta(k) drives the
/// time splitting n*(k) = 2^{2 delta(k)} and the scaled lattice N^d_k.
class DeltaSchedule {
 public:
  enum class Kind { Constant, Table };

  static DeltaSchedule constant(unsigned s, unsigned k_max);
  static DeltaSchedule table(std::vector<unsigned> values);

  unsigned at(unsigned k) const;
  unsigned k_max() const { return k_max_; }
  Kind kind() const { return kind_; }

  /// n*(delta, k) = 2^{2 delta(k)}
  std::int64_t n_star(unsigned k) const { return std::int64_t(1) << (2 * at(k)); }

 private:
  Kind kind_ = Kind::Constant;
  unsigned k_max_ = 0;
  std::vector<unsigned> values_;
};

/// N_k = prod_{i=0}^{k} p_i^{2k}; grows beyond machine range quickly, hence
/// big integers.
BigInt nk(unsigned k);
BigInt sqrt_nk(unsigned k);

struct ScaledN {
  BigInt n_d;
  Rational h_d;
};
/// N^d_k = 2^{2 delta(k)} N_k with h scaled to 2^{2 delta(k)} h.
ScaledN scaled_n(unsigned k, const DeltaSchedule& delta, const UnitSystem& u);

/// k is delta-good iff delta(p) <= delta(k) for all p < k.
bool is_delta_good(unsigned k, const DeltaSchedule& delta);

}  // namespace pathlat

#endif
