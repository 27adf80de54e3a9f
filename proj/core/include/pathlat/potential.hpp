#ifndef PATHLAT_POTENTIAL_HPP
#define PATHLAT_POTENTIAL_HPP

#include <optional>
#include <string>
#include <vector>

#include "pathlat/rational.hpp"
#include "pathlat/units.hpp"

namespace pathlat {

/// f_v: the configured potential energy function.  Free, harmonic (q x^2/2)
/// or polynomial with rational coefficients; rational-valuedness on rational
/// grid points is what the exact phase mode relies on.
class Potential {
 public:
  enum class Kind { Free, Harmonic, Poly };

  static Potential free_particle();
  static Potential harmonic(Rational spring);
  static Potential poly(std::vector<Rational> coeffs);  // coeffs[i] * x^i

  Kind kind() const { return kind_; }
  const Rational& spring() const { return spring_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  double eval(double x) const;
  Rational eval_exact(const Rational& x) const;
  bool is_free() const { return kind_ == Kind::Free; }

  /// omega = sqrt(q/m) for the harmonic case.
  double omega(const UnitSystem& u) const;

  std::string describe() const;

 private:
  Kind kind_ = Kind::Free;
  Rational spring_ = 0;
  std::vector<Rational> coeffs_;
};

}  // namespace pathlat

#endif
