#ifndef PATHLAT_PHASE_SUM_HPP
#define PATHLAT_PHASE_SUM_HPP

#include <complex>
#include <cstdint>
#include <map>
#include <utility>

#include "pathlat/rational.hpp"

namespace pathlat {

/// Exponent of a unit-modulus term: angle = pi * pi_coeff + pi^2 * pi2_coeff.
/// Kinetic contributions are exact rational multiples of pi (Remark-2 unit
/// constraints); a rational-valued potential contributes through tau/hbar,
/// which carries one more factor of pi.
struct PhaseExponent {
  Rational pi_coeff{0};
  Rational pi2_coeff{0};
  PhaseExponent& operator+=(const PhaseExponent& o) {
    pi_coeff += o.pi_coeff;
    pi2_coeff += o.pi2_coeff;
    return *this;
  }
};

/// Sums unit-modulus terms e^{i(pi q1 + pi^2 q2)} with exact bookkeeping:
/// q1 is reduced mod 2 into [0,1) (the residual pi flips the sign of the
/// integer weight), terms are grouped by the reduced pair, and only the final
/// readout touches floating point.  Sums that cancel term-by-term - the
/// spiked zeros of the lattice kernel - therefore come out exactly zero.
class PhaseAccumulator {
 public:
  void add(const PhaseExponent& e, std::int64_t weight = 1);
  void add(const PhaseAccumulator& other);

  bool exactly_zero() const;
  std::complex<double> value() const;
  std::size_t group_count() const { return groups_.size(); }

 private:
  struct Key {
    Rational q1;  // in [0,1)
    Rational q2;
    bool operator<(const Key& o) const {
      int c = cmp(q1, o.q1);
      if (c != 0) return c < 0;
      return cmp(q2, o.q2) < 0;
    }
  };
  std::map<Key, BigInt> groups_;
};

}  // namespace pathlat

#endif
