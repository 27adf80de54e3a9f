#ifndef PATHLAT_HILBERT_HPP
#define PATHLAT_HILBERT_HPP

#include <complex>
#include <functional>
#include <vector>

#include "pathlat/lattice.hpp"
#include "pathlat/rational.hpp"

namespace pathlat {

using Complex = std::complex<double>;

/// Amplitude vector over the u(n) basis of H_N.
class StateVector {
 public:
  StateVector() = default;
  explicit StateVector(std::int64_t dim) : a_(static_cast<std::size_t>(dim)) {}

  std::int64_t dim() const { return static_cast<std::int64_t>(a_.size()); }
  Complex& operator[](std::int64_t i) { return a_[static_cast<std::size_t>(i)]; }
  const Complex& operator[](std::int64_t i) const { return a_[static_cast<std::size_t>(i)]; }
  std::vector<Complex>& data() { return a_; }
  const std::vector<Complex>& data() const { return a_; }

  double norm_sq() const;
  double norm() const;
  bool finite() const;

  static StateVector basis(std::int64_t dim, std::int64_t idx);

 private:
  std::vector<Complex> a_;
};

/// Functions sampled on grid eigenvalues.  The rational overload is used when
/// half-open interval membership must be decided exactly (step functions).
struct GridFunction {
  std::function<Complex(double)> approx;                 // always present
  std::function<Complex(const Rational&)> exact;         // optional
  Complex operator()(const Rational& x) const { return exact ? exact(x) : approx(to_double(x)); }
};

/// F_N(f) = N^{-1/4} sum_x f(x) |x>.
StateVector embed_function(const GridFunction& f, const Grid& g);
StateVector embed_function(const std::function<Complex(double)>& f, const Grid& g);

/// Indicator of [y - 1/p, y + 1/p), with exact edge decisions.
GridFunction step_function(const Rational& y, std::int64_t p);

/// <a|b>, conjugate-linear in the first slot.
Complex inner_product(const StateVector& a, const StateVector& b);

}  // namespace pathlat

#endif
