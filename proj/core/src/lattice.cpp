#include "pathlat/lattice.hpp"

#include <cmath>

#include "pathlat/errors.hpp"

namespace pathlat {

namespace {

// floor(q) for exact rationals
std::int64_t rational_floor(const Rational& q) {
  BigInt fl;
  mpz_fdiv_q(fl.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  if (!fl.fits_slong_p()) throw DomainError("rational floor out of int64 range");
  return fl.get_si();
}

// smallest integer >= q
std::int64_t rational_ceil(const Rational& q) {
  BigInt cl;
  mpz_cdiv_q(cl.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  if (!cl.fits_slong_p()) throw DomainError("rational ceil out of int64 range");
  return cl.get_si();
}

}  // namespace

Grid Grid::hk(std::int64_t sqrt_n) {
  if (sqrt_n < 2 || sqrt_n % 2 != 0) throw DomainError("sqrt_n must be even and >= 2");
  Grid g;
  g.sqrt_n_ = sqrt_n;
  g.n_ = sqrt_n * sqrt_n;
  g.unit_log2_ = 0;
  g.delta_ = 0;
  return g;
}

Grid Grid::hd(std::int64_t sqrt_nk, unsigned delta) {
  Grid g = hd_native(sqrt_nk, delta);
  g.unit_log2_ = delta;
  return g;
}

Grid Grid::hd_native(std::int64_t sqrt_nk, unsigned delta) {
  if (delta < 1) throw DomainError("delta must be >= 1");
  if (sqrt_nk < 2 || sqrt_nk % 2 != 0) throw DomainError("sqrt_n must be even and >= 2");
  Grid g;
  g.sqrt_n_ = sqrt_nk << delta;
  g.n_ = g.sqrt_n_ * g.sqrt_n_;
  g.unit_log2_ = 0;
  g.delta_ = delta;
  return g;
}

std::int64_t Grid::wrap(std::int64_t idx) const {
  if (idx < 0 || idx >= n_) throw DomainError("grid index out of range");
  return idx < n_ / 2 ? idx : idx - n_;
}

Rational Grid::value(std::int64_t idx) const {
  Rational q(wrap(idx), sqrt_n_ * (std::int64_t(1) << unit_log2_));
  q.canonicalize();
  return q;
}

double Grid::value_d(std::int64_t idx) const {
  return static_cast<double>(wrap(idx)) / static_cast<double>(sqrt_n_) /
         static_cast<double>(std::int64_t(1) << unit_log2_);
}

std::optional<std::int64_t> Grid::index_of(const Rational& x) const {
  Rational w = x * sqrt_n_ * (std::int64_t(1) << unit_log2_);
  if (w.get_den() != 1) return std::nullopt;
  if (!w.get_num().fits_slong_p()) return std::nullopt;
  std::int64_t s = w.get_num().get_si();
  if (s >= -n_ / 2 && s < 0) return s + n_;
  if (s >= 0 && s < n_ / 2) return s;
  return std::nullopt;
}

Rational Grid::spacing() const {
  Rational q(1, sqrt_n_ * (std::int64_t(1) << unit_log2_));
  q.canonicalize();
  return q;
}

Rational Grid::min_value() const { return spacing() * (-(n_ / 2)); }
Rational Grid::max_value() const { return spacing() * (n_ / 2 - 1); }

std::int64_t Grid::floor_index(const Rational& x) const {
  if (x < min_value()) return n_ / 2;  // min-element fallback (wrapped index)
  std::int64_t s = rational_floor(x / spacing());
  if (s >= n_ / 2) s = n_ / 2 - 1;  // clamp at the top edge
  return s >= 0 ? s : s + n_;
}

std::int64_t Grid::floor_index(double x) const { return floor_index(Rational(x)); }

Rational EvenSubgrid::min_value() const { return parent_.min_value(); }

std::int64_t EvenSubgrid::floor_member(const Rational& x) const {
  if (x < min_value()) return size() / 2;  // ordinal of the minimum member
  std::int64_t s = parent_.wrap(parent_.floor_index(x));
  if (s % 2 != 0) s -= 1;  // step down to even
  std::int64_t pidx = s >= 0 ? s : s + parent_.n();
  return pidx / 2;
}

std::int64_t EvenSubgrid::floor_member(double x) const { return floor_member(Rational(x)); }

std::int64_t gk_index(std::int64_t idx, unsigned delta_k) {
  if (idx < 0) throw DomainError("gk_index: negative index");
  return idx << (2 * delta_k);
}

std::vector<std::int64_t> window(const Grid& g, const Rational& y, std::int64_t p) {
  if (p < 1) throw DomainError("window: p must be >= 1");
  std::int64_t scale = g.sqrt_n() * (std::int64_t(1) << g.unit_log2());
  // signed lattice steps w with lo <= w/scale < hi
  std::int64_t w_lo = rational_ceil((y - Rational(1, p)) * scale);
  std::int64_t w_hi = rational_ceil((y + Rational(1, p)) * scale);
  w_lo = std::max(w_lo, -(g.n() / 2));
  w_hi = std::min(w_hi, g.n() / 2);
  std::vector<std::int64_t> out;
  for (std::int64_t w = w_lo; w < w_hi; ++w) out.push_back(w >= 0 ? w : w + g.n());
  return out;
}

}  // namespace pathlat
