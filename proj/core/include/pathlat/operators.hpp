#ifndef PATHLAT_OPERATORS_HPP
#define PATHLAT_OPERATORS_HPP

#include <Eigen/Dense>
#include <functional>

#include "pathlat/hilbert.hpp"
#include "pathlat/lattice.hpp"
#include "pathlat/potential.hpp"
#include "pathlat/rational.hpp"
#include "pathlat/units.hpp"

namespace pathlat {

using DenseMatrix = Eigen::MatrixXcd;

std::int64_t dense_cap();  // default 4096, overridable via LFI_DENSE_CAP

/// e^{-i tau P^2 / 2 m hbar} psi.  P is Q conjugated with the Fourier
/// transform; its eigenvalue at DFT index m is h_eff * x_m with x_m the
/// wrapped grid value in the grid's native units and h_eff = 2^{2 delta} h on
/// scaled grids.  The diagonal phase angle reduces to
///   2 pi (tau/t) 2^{2 delta} w(m)^2 / N  (mod 2 pi),
/// computed in exact integer arithmetic before any trig call; this is what
/// keeps the Gauss-sum structure bit-stable at large N.
StateVector apply_kinetic(const StateVector& psi, const PiScalar& tau, const Grid& g, const UnitSystem& u);

/// e^{-i tau V / hbar_eff} psi with V(u(n)) = f_v^eff(x) u(n).  When scaled,
/// f_v^eff(x) = 2^{2 delta} f_v(x / 2^delta) and hbar_eff = 2^{2 delta} hbar,
/// which per site equals the unscaled phase at the halved point.
StateVector apply_potential(const StateVector& psi, const PiScalar& tau, const Potential& f_v, const Grid& g,
                            const UnitSystem& u, bool scaled);

/// r alternating (kinetic o potential) steps, each at Delta t = t/2^{2 delta_k}:
/// (e^{-i t P^2 / 2^{2 dk} 2 m hbar} e^{-i t V / 2^{2 dk} hbar})^r.
/// On an H^d grid the scaled potential and scaled h are used automatically.
StateVector trotter_power(const StateVector& psi, std::int64_t r, unsigned delta_k, const Potential& f_v,
                          const Grid& g, const UnitSystem& u);

/// Columns of U from applying it to every basis vector; guarded by the dense cap.
DenseMatrix dense_matrix(const std::function<StateVector(const StateVector&)>& apply, std::int64_t n);

/// e^{-i tau H / hbar}, H = P^2/2m + V, via Hermitian eigendecomposition.
/// Reference oracle for the Trotter product's limit on the lattice.
StateVector exact_evolution_oracle(const StateVector& psi, const PiScalar& tau, const Potential& f_v, const Grid& g,
                                   const UnitSystem& u);

}  // namespace pathlat

#endif
