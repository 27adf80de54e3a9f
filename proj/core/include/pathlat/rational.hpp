#ifndef PATHLAT_RATIONAL_HPP
#define PATHLAT_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace pathlat {

using Rational = mpq_class;
using BigInt = mpz_class;

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// Parses "p", "-p" or "p/q" into an exact rational.
Rational parse_rational(const std::string& text);

inline double to_double(const Rational& q) { return q.get_d(); }

/// q mod 2 reduced into [0, 2).
Rational mod2(const Rational& q);

/// Exact q^e for integer e (e < 0 requires q != 0).
Rational pow_int(const Rational& q, long e);

/// An exact scalar of the form coeff * pi^pi_pow.  The unit constraints of
/// the scaled system (t/pi and th/pi rational) keep every quantity we track
/// in this form; sums are only defined between scalars of equal pi power.
class PiScalar {
 public:
  PiScalar() : coeff_(0), pi_pow_(0) {}
  PiScalar(Rational coeff, int pi_pow) : coeff_(std::move(coeff)), pi_pow_(coeff_ == 0 ? 0 : pi_pow) {}
  static PiScalar rational(Rational q) { return PiScalar(std::move(q), 0); }
  static PiScalar pi_multiple(Rational q) { return PiScalar(std::move(q), 1); }

  const Rational& coeff() const { return coeff_; }
  int pi_pow() const { return pi_pow_; }

  bool positive() const { return coeff_ > 0; }
  bool is_zero() const { return coeff_ == 0; }

  /// The rational value; throws unless the pi power is zero.
  Rational as_rational() const;
  double to_double() const;

  PiScalar operator*(const PiScalar& o) const { return PiScalar(coeff_ * o.coeff_, pi_pow_ + o.pi_pow_); }
  PiScalar operator/(const PiScalar& o) const;
  PiScalar operator+(const PiScalar& o) const;
  PiScalar operator-(const PiScalar& o) const;
  bool operator==(const PiScalar& o) const { return coeff_ == o.coeff_ && pi_pow_ == o.pi_pow_; }

 private:
  Rational coeff_;
  int pi_pow_;
};

}  // namespace pathlat

#endif
