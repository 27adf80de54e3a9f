#include "pathlat/operators.hpp"

#include <cmath>
#include <cstdlib>
#include <mutex>

#include "pathlat/errors.hpp"
#include "pathlat/fourier.hpp"

namespace pathlat {

namespace {

using int128 = __int128;

// Angle of the kinetic factor at DFT index m, in units of pi, reduced into
// [0, 2).  tau_over_t = a/b:  q = 2 a 4^delta w^2 / (b N)  mod 2.
double kinetic_angle_pi(std::int64_t w, std::int64_t n, unsigned delta, std::int64_t a, std::int64_t b) {
  const int128 hscale = int128(1) << (2 * delta);
  const int128 den = int128(b) * n;            // q*den/2 = a*hscale*w^2 mod den
  int128 num = int128(a) % den * hscale % den;
  num = num * w % den;
  num = num * w % den;
  if (num < 0) num += den;
  // q = 2*num/den in [0,2)
  return 2.0 * static_cast<double>(num) / static_cast<double>(den);
}

std::vector<Complex> kinetic_phases(const Grid& g, const Rational& tau_over_t) {
  if (!(tau_over_t > 0)) throw DomainError("kinetic factor needs tau > 0");
  if (!tau_over_t.get_num().fits_slong_p() || !tau_over_t.get_den().fits_slong_p())
    throw DomainError("tau/t outside supported range");
  const std::int64_t a = tau_over_t.get_num().get_si();
  const std::int64_t b = tau_over_t.get_den().get_si();
  const std::int64_t n = g.n();
  std::vector<Complex> d(static_cast<std::size_t>(n));
  for (std::int64_t m = 0; m < n; ++m) {
    const std::int64_t w = m < n / 2 ? m : m - n;
    const double ang = -M_PI * kinetic_angle_pi(w, n, g.delta(), a, b);
    d[static_cast<std::size_t>(m)] = Complex(std::cos(ang), std::sin(ang));
  }
  return d;
}

void check_dims(const StateVector& psi, const Grid& g) {
  if (psi.dim() != g.n()) throw DomainError("state/grid dimension mismatch");
}

}  // namespace

std::int64_t dense_cap() {
  static std::int64_t cap = [] {
    if (const char* env = std::getenv("LFI_DENSE_CAP")) {
      long v = std::atol(env);
      if (v > 0) return static_cast<std::int64_t>(v);
    }
    return std::int64_t(4096);
  }();
  return cap;
}

StateVector apply_kinetic(const StateVector& psi, const PiScalar& tau, const Grid& g, const UnitSystem& u) {
  check_dims(psi, g);
  const Rational frac = (tau / u.t()).as_rational();
  const std::vector<Complex> d = kinetic_phases(g, frac);
  StateVector out = psi;
  fourier::forward(out);
  for (std::int64_t m = 0; m < g.n(); ++m) out[m] *= d[static_cast<std::size_t>(m)];
  fourier::inverse(out);
  return out;
}

StateVector apply_potential(const StateVector& psi, const PiScalar& tau, const Potential& f_v, const Grid& g,
                            const UnitSystem& u, bool scaled) {
  check_dims(psi, g);
  if (!tau.positive()) throw DomainError("potential factor needs tau > 0");
  if (scaled && g.delta() < 1) throw DomainError("scaled potential on an unscaled grid");
  if (f_v.is_free()) return psi;
  // scaled: f_v^eff(x) = 2^{2d} f_v(x/2^d) with hbar_eff = 2^{2d} hbar, so the
  // per-site angle is tau f_v(x_hk)/hbar either way; x_hk is the grid value
  // brought to H_k units.
  const double tau_over_hbar = (tau / u.hbar()).to_double();
  const double unit_fix = scaled ? std::pow(2.0, static_cast<int>(g.unit_log2()) - static_cast<int>(g.delta())) : 1.0;
  StateVector out = psi;
  for (std::int64_t i = 0; i < g.n(); ++i) {
    const double x = g.value_d(i) * unit_fix;
    const double ang = -tau_over_hbar * f_v.eval(x);
    out[i] *= Complex(std::cos(ang), std::sin(ang));
  }
  return out;
}

StateVector trotter_power(const StateVector& psi, std::int64_t r, unsigned delta_k, const Potential& f_v,
                          const Grid& g, const UnitSystem& u) {
  check_dims(psi, g);
  const std::int64_t n_star = std::int64_t(1) << (2 * delta_k);
  if (r < 1 || r > n_star) throw DomainError("trotter_power: need 1 <= r <= 2^{2 delta_k}");
  const bool scaled = g.delta() >= 1;
  const Rational frac(1, n_star);
  const std::vector<Complex> kin = kinetic_phases(g, frac);

  std::vector<Complex> pot;
  if (!f_v.is_free()) {
    const PiScalar dt = u.t() / PiScalar::rational(Rational(n_star));
    const double tau_over_hbar = (dt / u.hbar()).to_double();
    const double unit_fix =
        scaled ? std::pow(2.0, static_cast<int>(g.unit_log2()) - static_cast<int>(g.delta())) : 1.0;
    pot.resize(static_cast<std::size_t>(g.n()));
    for (std::int64_t i = 0; i < g.n(); ++i) {
      const double ang = -tau_over_hbar * f_v.eval(g.value_d(i) * unit_fix);
      pot[static_cast<std::size_t>(i)] = Complex(std::cos(ang), std::sin(ang));
    }
  }

  StateVector out = psi;
  for (std::int64_t step = 0; step < r; ++step) {
    if (!pot.empty())
      for (std::int64_t i = 0; i < g.n(); ++i) out[i] *= pot[static_cast<std::size_t>(i)];
    fourier::forward(out);
    for (std::int64_t m = 0; m < g.n(); ++m) out[m] *= kin[static_cast<std::size_t>(m)];
    fourier::inverse(out);
  }
  return out;
}

DenseMatrix dense_matrix(const std::function<StateVector(const StateVector&)>& apply, std::int64_t n) {
  if (n > dense_cap()) throw CapExceededError("dense matrix dimension exceeds cap");
  DenseMatrix m(n, n);
  for (std::int64_t j = 0; j < n; ++j) {
    StateVector col = apply(StateVector::basis(n, j));
    for (std::int64_t i = 0; i < n; ++i) m(i, j) = col[i];
  }
  return m;
}

StateVector exact_evolution_oracle(const StateVector& psi, const PiScalar& tau, const Potential& f_v, const Grid& g,
                                   const UnitSystem& u) {
  check_dims(psi, g);
  const std::int64_t n = g.n();
  if (n > dense_cap()) throw CapExceededError("exact evolution oracle exceeds dense cap");

  // kinetic energy over hbar_eff: (h_eff x)^2/(2 m hbar_eff) = pi (h_eff/h) x^2 * (th/m) / t * ...
  // computed via the same exact reduction as the factor phases, per unit time.
  const double t_d = u.t().to_double();
  DenseMatrix h_over_hbar = dense_matrix(
      [&](const StateVector& v) {
        StateVector w = v;
        fourier::forward(w);
        for (std::int64_t m = 0; m < n; ++m) {
          const std::int64_t s = m < n / 2 ? m : m - n;
          // (h_eff x_m)^2 / (2 m hbar_eff) = 2 pi 4^delta w^2 / (N t)
          const double e = 2.0 * M_PI * std::pow(4.0, g.delta()) * static_cast<double>(s) * static_cast<double>(s) /
                           static_cast<double>(n) / t_d;
          w[m] *= e;
        }
        fourier::inverse(w);
        return w;
      },
      n);
  if (!f_v.is_free()) {
    const double inv_hbar = 1.0 / u.hbar().to_double();
    const bool scaled = g.delta() >= 1;
    const double unit_fix =
        scaled ? std::pow(2.0, static_cast<int>(g.unit_log2()) - static_cast<int>(g.delta())) : 1.0;
    for (std::int64_t i = 0; i < n; ++i) {
      // scaled potential over scaled hbar reduces to f_v at the H_k-unit point
      h_over_hbar(i, i) += f_v.eval(g.value_d(i) * unit_fix) * inv_hbar;
    }
  }

  const double herm_residual = (h_over_hbar - h_over_hbar.adjoint()).cwiseAbs().maxCoeff();
  if (herm_residual > 1e-9) throw Error("exact oracle: non-Hermitian residual " + std::to_string(herm_residual));

  Eigen::SelfAdjointEigenSolver<DenseMatrix> es((h_over_hbar + h_over_hbar.adjoint()) / 2.0);
  const double tau_d = tau.to_double();
  Eigen::VectorXcd coeff = es.eigenvectors().adjoint() * Eigen::Map<const Eigen::VectorXcd>(psi.data().data(), n);
  for (std::int64_t j = 0; j < n; ++j) {
    const double ang = -tau_d * es.eigenvalues()[j];
    coeff[j] *= Complex(std::cos(ang), std::sin(ang));
  }
  Eigen::VectorXcd res = es.eigenvectors() * coeff;
  StateVector out(n);
  for (std::int64_t i = 0; i < n; ++i) out[i] = res[i];
  return out;
}

}  // namespace pathlat
