#ifndef PATHLAT_PATHSUM_HPP
#define PATHLAT_PATHSUM_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "pathlat/hilbert.hpp"
#include "pathlat/lattice.hpp"
#include "pathlat/phase_sum.hpp"
#include "pathlat/potential.hpp"
#include "pathlat/units.hpp"

namespace pathlat {

/// Per-step action density S*(x, y, dt) = m (y-x)^2 / (2 dt^2) - f_v(x),
/// evaluated in H_k units (where the scaled potential reduces to plain f_v).
struct ActionDensityParams {
  PiScalar m;
  PiScalar dt;
  Potential f_v;

  static ActionDensityParams make(const UnitSystem& u, unsigned delta_k, Potential f_v);
};

double action_density(double x, double y, const ActionDensityParams& p);

/// e^{i dt sum_j S*(x_{j-1}, x_j, dt) / hbar} for a full path (n*+1 points).
Complex path_phase(std::span<const double> path, const ActionDensityParams& p, const UnitSystem& u);

/// Exact exponent of one step's phase contribution, in (pi, pi^2) grading.
PhaseExponent step_phase_exponent(const Rational& x, const Rational& y, std::int64_t n_star, const Potential& f_v,
                                  const UnitSystem& u);

/// The instance every path sum runs on: the scaled lattice H^d_k in original
/// H_k units, with its interior sublattice X^{2d}.
struct PathIntegralSetup {
  Grid hd;  // Grid::hd(sqrt_nk, delta): values reported in H_k units
  unsigned delta_k = 1;
  UnitSystem units;
  Potential f_v;
  std::int64_t n_star() const { return std::int64_t(1) << (2 * delta_k); }

  static PathIntegralSetup make(std::int64_t sqrt_nk, unsigned delta_k, const UnitSystem& u, Potential f_v);
};

enum class ArithmeticMode { Float, ExactPhase };

/// Which normalization multiplies the bare phase sum:
///  - Lemma3Raw: ((N^d)^{-1/2} (dt h/m) (m/2 pi i hbar dt)^{1/2})^{n*}; always valid.
///  - MeasureForm: (m/2 pi hbar t)^{1/2} sqrt(2) (N^d/2)^{-n*/2}; the i^{n*/2}
///    content disappears, so n* must be divisible by 8.
enum class PrefactorConvention { Lemma3Raw, MeasureForm };

struct BruteForceResult {
  Complex value{0.0, 0.0};
  bool exact_zero = false;  // exact-phase mode: the whole sum cancelled
  std::uint64_t terms = 0;
};

/// Full nested sum over (X^{2d})^{n*-1} interior points between two parent
/// grid indices (both in X^{2d}); the machine-checkable side of the path
/// integral formula.  Throws CapExceededError above term_cap.
BruteForceResult bruteforce_path_integral(std::int64_t x0_pidx, std::int64_t xn_pidx, const PathIntegralSetup& s,
                                          ArithmeticMode mode = ArithmeticMode::Float,
                                          PrefactorConvention pref = PrefactorConvention::Lemma3Raw,
                                          std::uint64_t term_cap = 10'000'000, int threads = 1);

/// <xN| L^t |x0> by n* sequential kinetic+potential applications on H^d.
Complex transfer_matrix_path_integral(std::int64_t x0_pidx, std::int64_t xn_pidx, const PathIntegralSetup& s);

/// The prefactor of the chosen convention (value multiplied onto phase sums).
Complex path_sum_prefactor(const PathIntegralSetup& s, PrefactorConvention pref);

/// Restricted variant used by the odd-sector identity: interior points drawn
/// from X^d minus X^{2d} (odd parity), endpoints there too.
BruteForceResult bruteforce_path_integral_odd_sector(std::int64_t x0_pidx, std::int64_t xn_pidx,
                                                     const PathIntegralSetup& s,
                                                     std::uint64_t term_cap = 10'000'000);

}  // namespace pathlat

#endif
