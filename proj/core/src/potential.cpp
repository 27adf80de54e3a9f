#include "pathlat/potential.hpp"

#include <cmath>

#include "pathlat/errors.hpp"

namespace pathlat {

Potential Potential::free_particle() { return Potential{}; }

Potential Potential::harmonic(Rational spring) {
  if (!(spring > 0)) throw DomainError("harmonic potential needs spring > 0");
  Potential p;
  p.kind_ = Kind::Harmonic;
  p.spring_ = std::move(spring);
  return p;
}

Potential Potential::poly(std::vector<Rational> coeffs) {
  Potential p;
  p.kind_ = Kind::Poly;
  p.coeffs_ = std::move(coeffs);
  return p;
}

double Potential::eval(double x) const {
  switch (kind_) {
    case Kind::Free:
      return 0.0;
    case Kind::Harmonic:
      return 0.5 * to_double(spring_) * x * x;
    case Kind::Poly: {
      double acc = 0;
      for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + to_double(*it);
      return acc;
    }
  }
  return 0.0;
}

Rational Potential::eval_exact(const Rational& x) const {
  switch (kind_) {
    case Kind::Free:
      return Rational(0);
    case Kind::Harmonic:
      return spring_ * x * x / 2;
    case Kind::Poly: {
      Rational acc(0);
      for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
      return acc;
    }
  }
  return Rational(0);
}

double Potential::omega(const UnitSystem& u) const {
  if (kind_ != Kind::Harmonic) throw DomainError("omega defined for the harmonic potential only");
  return std::sqrt(to_double(spring_) / u.m().to_double());
}

std::string Potential::describe() const {
  switch (kind_) {
    case Kind::Free:
      return "free";
    case Kind::Harmonic:
      return "harmonic(q=" + spring_.get_str() + ")";
    case Kind::Poly:
      return "poly(deg=" + std::to_string(coeffs_.empty() ? 0 : coeffs_.size() - 1) + ")";
  }
  return "?";
}

}  // namespace pathlat
