#ifndef PATHLAT_KERNELS_HPP
#define PATHLAT_KERNELS_HPP

#include <functional>

#include "pathlat/hilbert.hpp"
#include "pathlat/lattice.hpp"
#include "pathlat/rational.hpp"
#include "pathlat/units.hpp"

namespace pathlat {

/// Lattice propagator entry; spiked_zero marks the divisibility failure of
/// the closed form ("otherwise it is 0").
struct KernelValue {
  Complex value{0.0, 0.0};
  bool spiked_zero = false;
};

/// K*(x0,x1,tau) = (m/2 pi i hbar tau)^{1/2} e^{i m (x1-x0)^2 / 2 hbar tau},
/// branch (1/i)^{1/2} = e^{-i pi/4} (fixed by the DFT Gauss-sum phase).
Complex free_kernel_continuum(const Rational& x0, const Rational& x1, const PiScalar& tau, const UnitSystem& u);
Complex free_kernel_continuum(double x0, double x1, const PiScalar& tau, const UnitSystem& u);

/// Lemma-style closed form for <x1|e^{-i t P^2/2 m hbar}|x0> at the full time
/// t: if th/m (= 2) divides sqrt(N)(x1 - x0) the value is
/// 2 N^{-1/2} K*(x0, x1, t); otherwise an exact zero.  x0, x1 must be on-grid.
KernelValue free_kernel_lattice(const Rational& x0, const Rational& x1, const Grid& g, const UnitSystem& u);

/// Mehler kernel for the harmonic oscillator, the reference oracle:
/// (m w / 2 pi i hbar sin wt)^{1/2} exp(i m w ((x0^2+x1^2) cos wt - 2 x0 x1)/(2 hbar sin wt)).
/// Rejects caustics |sin wt| < 1e-9.
Complex mehler_kernel(double x0, double x1, const PiScalar& tau, double omega, const UnitSystem& u);

/// (p^2 / 4 sqrt(N)) sum over the two windows of <x1|U|x0>, computed as
/// (p/2)^2 <F_N(phi_{y1,p})| U |F_N(phi_{y0,p})>.  The caller sweeps lattices
/// and Trotter resolutions and inspects stabilization.
Complex extract_propagator_window(const Rational& y0, const Rational& y1, std::int64_t p,
                                  const std::function<StateVector(const StateVector&)>& evolution, const Grid& g,
                                  const UnitSystem& u);

/// (sqrt(N)/2) <y1|U_kin(t)|y0>; equals K*(y0,y1,t) whenever the index
/// difference is even, for any single admissible lattice.
KernelValue free_propagator_direct(const Rational& y0, const Rational& y1, const Grid& g, const UnitSystem& u);

}  // namespace pathlat

#endif
