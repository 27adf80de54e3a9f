#include "pathlat/kernels.hpp"

#include <cmath>

#include "pathlat/errors.hpp"
#include "pathlat/operators.hpp"

namespace pathlat {

namespace {

// amplitude (m/2 pi hbar tau)^{1/2} and the e^{-i pi/4} branch
Complex kstar_amplitude(const PiScalar& tau, const UnitSystem& u) {
  const Rational mod_sq = (u.m() / (PiScalar::rational(2) * PiScalar::pi_multiple(1) * u.hbar() * tau)).as_rational();
  const double amp = std::sqrt(to_double(mod_sq));
  return amp * Complex(std::cos(M_PI / 4), -std::sin(M_PI / 4));
}

}  // namespace

Complex free_kernel_continuum(const Rational& x0, const Rational& x1, const PiScalar& tau, const UnitSystem& u) {
  if (!tau.positive()) throw DomainError("free kernel needs tau > 0");
  // m dx^2/(2 hbar tau) = pi dx^2 (t/tau) / (th/m); reduce the rational angle mod 2
  const Rational dx = x1 - x0;
  const Rational angle_pi = mod2(dx * dx / (tau / u.t()).as_rational() / u.th_over_m());
  const double ang = M_PI * to_double(angle_pi);
  return kstar_amplitude(tau, u) * Complex(std::cos(ang), std::sin(ang));
}

Complex free_kernel_continuum(double x0, double x1, const PiScalar& tau, const UnitSystem& u) {
  if (!tau.positive()) throw DomainError("free kernel needs tau > 0");
  const double dx = x1 - x0;
  const double ang = M_PI * dx * dx / (tau / u.t()).as_rational().get_d() / to_double(u.th_over_m());
  return kstar_amplitude(tau, u) * Complex(std::cos(ang), std::sin(ang));
}

KernelValue free_kernel_lattice(const Rational& x0, const Rational& x1, const Grid& g, const UnitSystem& u) {
  if (u.th_over_m() != 2) throw DomainError("lattice kernel assumes th/m = 2");
  auto i0 = g.index_of(x0), i1 = g.index_of(x1);
  if (!i0 || !i1) throw DomainError("free_kernel_lattice: off-grid endpoint");
  KernelValue out;
  // th/m | sqrt(N) (x1 - x0): equivalent to an even index difference
  const std::int64_t diff = g.wrap(*i1) - g.wrap(*i0);
  if (((diff % 2) + 2) % 2 != 0) {
    out.spiked_zero = true;
    return out;
  }
  const double scale = to_double(u.th_over_m()) / std::sqrt(static_cast<double>(g.n()));
  out.value = scale * free_kernel_continuum(x0, x1, u.t(), u);
  return out;
}

Complex mehler_kernel(double x0, double x1, const PiScalar& tau, double omega, const UnitSystem& u) {
  if (!tau.positive()) throw DomainError("mehler kernel needs tau > 0");
  const double t_d = tau.to_double();
  const double st = std::sin(omega * t_d), ct = std::cos(omega * t_d);
  if (std::abs(st) < 1e-9) throw CausticError("mehler kernel at a caustic (sin wt ~ 0)");
  const double m_d = u.m().to_double();
  const double hbar_d = u.hbar().to_double();
  const double amp = std::sqrt(m_d * omega / (2 * M_PI * hbar_d * std::abs(st)));
  const Complex branch = st > 0 ? Complex(std::cos(M_PI / 4), -std::sin(M_PI / 4))
                                : Complex(std::cos(M_PI / 4), std::sin(M_PI / 4));
  const double ang = m_d * omega * ((x0 * x0 + x1 * x1) * ct - 2 * x0 * x1) / (2 * hbar_d * st);
  return amp * branch * Complex(std::cos(ang), std::sin(ang));
}

Complex extract_propagator_window(const Rational& y0, const Rational& y1, std::int64_t p,
                                  const std::function<StateVector(const StateVector&)>& evolution, const Grid& g,
                                  const UnitSystem& u) {
  (void)u;
  const std::vector<std::int64_t> w0 = window(g, y0, p);
  const std::vector<std::int64_t> w1 = window(g, y1, p);
  if (w0.empty() || w1.empty()) throw DomainError("extract_propagator_window: empty window");
  const double amp = std::pow(static_cast<double>(g.n()), -0.25);
  StateVector phi0(g.n()), phi1(g.n());
  for (std::int64_t i : w0) phi0[i] = amp;
  for (std::int64_t i : w1) phi1[i] = amp;
  const StateVector evolved = evolution(phi0);
  const double pref = static_cast<double>(p) * static_cast<double>(p) / 4.0;
  return pref * inner_product(phi1, evolved);
}

KernelValue free_propagator_direct(const Rational& y0, const Rational& y1, const Grid& g, const UnitSystem& u) {
  auto i0 = g.index_of(y0), i1 = g.index_of(y1);
  if (!i0 || !i1) throw DomainError("free_propagator_direct: off-grid endpoint");
  KernelValue out;
  const std::int64_t diff = g.wrap(*i1) - g.wrap(*i0);
  if (((diff % 2) + 2) % 2 != 0) {
    out.spiked_zero = true;
    return out;
  }
  StateVector evolved = apply_kinetic(StateVector::basis(g.n(), *i0), u.t(), g, u);
  out.value = (std::sqrt(static_cast<double>(g.n())) / 2.0) * evolved[*i1];
  return out;
}

}  // namespace pathlat
