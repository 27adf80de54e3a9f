#include "pathlat/hilbert.hpp"

#include <cmath>

#include "pathlat/errors.hpp"

namespace pathlat {

double StateVector::norm_sq() const {
  double s = 0;
  for (const Complex& c : a_) s += std::norm(c);
  return s;
}

double StateVector::norm() const { return std::sqrt(norm_sq()); }

bool StateVector::finite() const {
  for (const Complex& c : a_)
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) return false;
  return true;
}

StateVector StateVector::basis(std::int64_t dim, std::int64_t idx) {
  if (idx < 0 || idx >= dim) throw DomainError("basis index out of range");
  StateVector v(dim);
  v[idx] = 1.0;
  return v;
}

StateVector embed_function(const GridFunction& f, const Grid& g) {
  StateVector v(g.n());
  const double w = std::pow(static_cast<double>(g.n()), -0.25);
  if (f.exact) {
    for (std::int64_t i = 0; i < g.n(); ++i) v[i] = w * f.exact(g.value(i));
  } else {
    for (std::int64_t i = 0; i < g.n(); ++i) v[i] = w * f.approx(g.value_d(i));
  }
  return v;
}

StateVector embed_function(const std::function<Complex(double)>& f, const Grid& g) {
  GridFunction gf;
  gf.approx = f;
  return embed_function(gf, g);
}

GridFunction step_function(const Rational& y, std::int64_t p) {
  if (p < 1) throw DomainError("step_function: p must be >= 1");
  Rational lo = y - Rational(1, p);
  Rational hi = y + Rational(1, p);
  GridFunction f;
  f.exact = [lo, hi](const Rational& x) -> Complex { return (x >= lo && x < hi) ? 1.0 : 0.0; };
  double lo_d = to_double(lo), hi_d = to_double(hi);
  f.approx = [lo_d, hi_d](double x) -> Complex { return (x >= lo_d && x < hi_d) ? 1.0 : 0.0; };
  return f;
}

Complex inner_product(const StateVector& a, const StateVector& b) {
  if (a.dim() != b.dim()) throw DomainError("inner_product: dimension mismatch");
  Complex s = 0;
  for (std::int64_t i = 0; i < a.dim(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

}  // namespace pathlat
