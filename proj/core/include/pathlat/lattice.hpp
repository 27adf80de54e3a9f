#ifndef PATHLAT_LATTICE_HPP
#define PATHLAT_LATTICE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "pathlat/rational.hpp"

namespace pathlat {

/// Position eigenvalue grid of H_N.  Index n < N carries eigenvalue
/// unit_scale * n/sqrt(N) for n < N/2 and unit_scale * (n-N)/sqrt(N)
/// otherwise.  unit_scale = 2^-unit_log2 is 1 for H_k and 2^-delta when an
/// X^d_k grid is expressed in the original units of H_k (the canonical
/// external representation; native H^d units are unit_log2 = 0).
class Grid {
 public:
  static Grid hk(std::int64_t sqrt_n);
  /// The scaled grid X^d_k in H_k units: N^d = 2^{2 delta} N_k.
  static Grid hd(std::int64_t sqrt_nk, unsigned delta);
  /// Same lattice, native H^d_k units.
  static Grid hd_native(std::int64_t sqrt_nk, unsigned delta);

  std::int64_t n() const { return n_; }
  std::int64_t sqrt_n() const { return sqrt_n_; }
  unsigned unit_log2() const { return unit_log2_; }
  unsigned delta() const { return delta_; }

  /// Signed index in (-N/2, N/2].
  std::int64_t wrap(std::int64_t idx) const;
  Rational value(std::int64_t idx) const;
  double value_d(std::int64_t idx) const;

  /// Index whose eigenvalue equals x, if any.
  std::optional<std::int64_t> index_of(const Rational& x) const;

  /// Grid spacing unit_scale/sqrt(N).
  Rational spacing() const;
  Rational min_value() const;
  Rational max_value() const;

  /// Largest on-grid value <= x, or min when none exists (edge fallback).
  std::int64_t floor_index(const Rational& x) const;
  std::int64_t floor_index(double x) const;

 private:
  std::int64_t n_ = 0;
  std::int64_t sqrt_n_ = 0;
  unsigned unit_log2_ = 0;
  unsigned delta_ = 0;
};

/// X^{2d}: members of a scaled grid whose half is on the same grid; exactly
/// the even-index half.
class EvenSubgrid {
 public:
  explicit EvenSubgrid(Grid parent) : parent_(parent) {}

  const Grid& parent() const { return parent_; }
  std::int64_t size() const { return parent_.n() / 2; }
  static bool is_member_index(std::int64_t parent_idx) { return parent_idx % 2 == 0; }

  /// j-th member, j < N/2; parent index 2j.
  std::int64_t parent_index(std::int64_t j) const { return 2 * j; }
  Rational value(std::int64_t j) const { return parent_.value(2 * j); }
  double value_d(std::int64_t j) const { return parent_.value_d(2 * j); }

  Rational spacing() const { return parent_.spacing() * 2; }
  Rational min_value() const;

  /// Largest member value <= x (member ordinal), min member when none.
  std::int64_t floor_member(const Rational& x) const;
  std::int64_t floor_member(double x) const;

 private:
  Grid parent_;
};

/// Index of the G_k image of basis vector u(idx): u(2^{2 delta} idx).
std::int64_t gk_index(std::int64_t idx, unsigned delta_k);

/// X(y, p) = { x on g : y - 1/p <= x < y + 1/p }, returned as indices.
std::vector<std::int64_t> window(const Grid& g, const Rational& y, std::int64_t p);

}  // namespace pathlat

#endif
