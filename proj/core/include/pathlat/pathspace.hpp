#ifndef PATHLAT_PATHSPACE_HPP
#define PATHLAT_PATHSPACE_HPP

#include <functional>
#include <optional>
#include <vector>

#include "pathlat/hilbert.hpp"
#include "pathlat/lattice.hpp"
#include "pathlat/potential.hpp"
#include "pathlat/units.hpp"

namespace pathlat {

/// Truncated element of C^omega: one complex entry per level k = 1..K_max.
/// "Limits" are read off as trailing-window stabilization, never collapsed.
class SequenceValue {
 public:
  SequenceValue() = default;
  explicit SequenceValue(unsigned k_max) : e_(k_max, Complex(0, 0)) {}

  unsigned k_max() const { return static_cast<unsigned>(e_.size()); }
  Complex& at(unsigned k);              // k in [1, k_max]
  const Complex& at(unsigned k) const;

  SequenceValue operator+(const SequenceValue& o) const;
  SequenceValue operator*(const SequenceValue& o) const;
  SequenceValue scaled(Complex c) const;

  /// |e(k) - e(k-1)| for k >= 2.
  std::vector<double> deltas() const;
  /// Largest delta among the last `window` consecutive pairs.
  double trailing_stabilization(unsigned window = 2) const;

 private:
  std::vector<Complex> e_;
};

/// Exact real of the form coeff * sqrt(2); the value ring of mu* (every case
/// is a rational multiple of some sqrt(2) (N^d/2)^{-n*/2}, and the sqrt(2)
/// factors out of all identities).
struct Sqrt2Rational {
  Rational coeff{0};
  Sqrt2Rational operator+(const Sqrt2Rational& o) const { return {coeff + o.coeff}; }
  Sqrt2Rational operator*(const Rational& q) const { return {coeff * q}; }
  bool operator==(const Sqrt2Rational& o) const { return coeff == o.coeff; }
  bool operator<(const Sqrt2Rational& o) const { return coeff < o.coeff; }
  bool operator<=(const Sqrt2Rational& o) const { return coeff <= o.coeff; }
  double to_double() const { return coeff.get_d() * std::sqrt(2.0); }
};

/// The materialized tower of lattices: level k carries H_k (sqrt N_k) and the
/// scaled H^d_k per the delta schedule, all values in H_k units.  Either the
/// prime-power N_k sequence or an explicit (surrogate) list of sqrt N values.
class LatticeSequence {
 public:
  static LatticeSequence nk_sequence(unsigned k_max, DeltaSchedule delta, UnitSystem u);
  static LatticeSequence explicit_list(std::vector<std::int64_t> sqrt_ns, DeltaSchedule delta, UnitSystem u);

  unsigned k_max() const { return static_cast<unsigned>(sqrt_n_.size()); }
  std::int64_t sqrt_nk(unsigned k) const;
  Grid hk(unsigned k) const;
  Grid hd(unsigned k) const;  // H_k-unit representation
  EvenSubgrid x2d(unsigned k) const { return EvenSubgrid(hd(k)); }
  std::int64_t n_star(unsigned k) const { return delta_.n_star(k); }
  const DeltaSchedule& delta() const { return delta_; }
  const UnitSystem& units() const { return units_; }
  bool good(unsigned k) const { return is_delta_good(k, delta_); }

  /// sqrt(N^d_r) | sqrt(N^d_k): the divisibility projections rely on.
  bool projectable(unsigned from_k, unsigned to_r) const;

 private:
  std::vector<std::int64_t> sqrt_n_;
  DeltaSchedule delta_ = DeltaSchedule::constant(1, 1);
  UnitSystem units_ = UnitSystem::make(1, 2);
};

/// Multi-level floor-sampling of a path: level k holds n*(k)+1 values in H_k
/// units, endpoints on X_k, interior points on X^{2d}_k.
struct PathApprox {
  std::vector<std::vector<Rational>> levels;  // levels[k-1]
  const std::vector<Rational>& level(unsigned k) const { return levels.at(k - 1); }
};

/// Floor-sample a C^1 path p:[0,t] -> R at every level.
PathApprox sample_path(const std::function<double(double)>& p, const LatticeSequence& lat);

/// Pr_{kr}: the level-r table determined by a level-k table (k delta-good,
/// r < k, grids nested).
std::vector<Rational> project_level(const std::vector<Rational>& table_k, unsigned k, unsigned r,
                                    const LatticeSequence& lat);

/// S(p)(k) = dt sum_j S*(p_{j-1}, p_j, t/n*(k)), in H_k units (real entries).
std::vector<double> discrete_action(const PathApprox& p, const Potential& f_v, const LatticeSequence& lat);

struct QuadratureResult {
  double value = 0;
  double error_estimate = 0;
};
/// Composite-Simpson value of int_0^t (m pdot^2/2 - f_v(p)) du.
QuadratureResult classical_action(const std::function<double(double)>& p, const std::function<double(double)>& pdot,
                                  const Potential& f_v, const UnitSystem& u, unsigned quadrature_n = 4096);

/// Basic open set N^k_x: the paths whose level-k sampling equals x.
struct BasicOpenSet {
  unsigned k = 1;
  std::int64_t x0_idx = 0;                  // index on X_k
  std::vector<std::int64_t> interior;       // member ordinals on X^{2d}_k
  std::int64_t xn_idx = 0;
  Rational mesh() const { return Rational(1, k); }
  bool operator==(const BasicOpenSet& o) const;
};

/// Tuple values of a cell in H_k units (x0, interior..., xn).
std::vector<Rational> cell_values(const BasicOpenSet& c, const LatticeSequence& lat);

/// The cell at level r determined by a level-k cell (r < k).
BasicOpenSet project_cell(const BasicOpenSet& c, unsigned r, const LatticeSequence& lat);

/// |{level-hi tuples projecting to the given level-lo cell}|, counting the
/// floor fibers coordinatewise (time refinement slots are unconstrained).
BigInt fiber_size(const BasicOpenSet& lo_cell, unsigned hi, const LatticeSequence& lat);

/// All members of that fiber (exhaustive; guarded by cap).
std::vector<BasicOpenSet> enumerate_fiber(const BasicOpenSet& lo_cell, unsigned hi, const LatticeSequence& lat,
                                          std::uint64_t cap = 2'000'000);

/// mu_r({x}): the per-point weight sqrt(2) (N^d_r/2)^{-n*(r)/2}.
Sqrt2Rational mu_point_weight(unsigned r, const LatticeSequence& lat);

/// The measure-like function, all three cases (r > k via the projection
/// fiber, r = k the point weight, r < k the m^i_x chain over delta-good
/// levels).
Sqrt2Rational mu_star(const BasicOpenSet& cell, unsigned r, const LatticeSequence& lat);

/// Uniformly continuous integrand: entry k of f(p) may depend only on levels
/// <= modulus(k) of p.
struct PathIntegrand {
  std::function<Complex(const PathApprox&, unsigned k)> eval;
  std::function<unsigned(unsigned)> modulus;  // defaults to identity
};

/// I_f over a finite disjoint union of basic opens: entry k is exact once the
/// partition is refined past the modulus (the limit is attained).
SequenceValue riemann_integral(const PathIntegrand& f, const std::vector<BasicOpenSet>& p0,
                               const LatticeSequence& lat, std::uint64_t fiber_cap = 2'000'000);

/// A representative path of a cell: levels <= k by projection (levels above
/// k are not populated).
PathApprox cell_representative(const BasicOpenSet& c, const LatticeSequence& lat);

/// P_{y0,y1,r} at level k: every level-k cell whose endpoints fall in the two
/// half-open windows.  Kept implicit (the interior block is the full
/// (X^{2d})^{n*-1}); materialize() expands it when small enough.
struct RestrictedPathSet {
  unsigned k = 1;
  std::vector<std::int64_t> w0;  // X_k indices allowed for x0
  std::vector<std::int64_t> w1;  // X_k indices allowed for xn
  BigInt cell_count(const LatticeSequence& lat) const;
  std::vector<BasicOpenSet> materialize(const LatticeSequence& lat, std::uint64_t cap = 2'000'000) const;
};

/// Requires k delta-good and the window edges on-grid with y - 1/r above the
/// grid minimum ("large enough k"); throws DomainError otherwise.
RestrictedPathSet restricted_path_set(const Rational& y0, const Rational& y1, std::int64_t r, unsigned k,
                                      const LatticeSequence& lat);

struct Theorem1Record {
  unsigned k = 0;
  std::int64_t r = 0;
  unsigned s = 0;  // delta(k)
  Complex estimate;
  Complex operator_side;
  double delta_to_previous = 0;
};

struct Theorem1Result {
  SequenceValue estimate;       // (m/2 pi hbar t)^{1/2} e^{-i pi n*/4} (r^2/4 sqrt(N_k)) I_f(X)(k)
  SequenceValue operator_side;  // (r^2/4) <G F_k(phi_{y1,r}) | L^t_k | G F_k(phi_{y0,r})> on H^d_k
  SequenceValue hk_operator;    // same bracket with L^t_{k-delta} on H_k (diagnostic)
  std::vector<Theorem1Record> records;
  double dfs_check_max_diff = 0;  // honest nested-loop re-evaluation, where affordable
};

struct Theorem1Options {
  int threads = 1;
  std::uint64_t dfs_cap = 20'000'000;      // nested-loop anchor below this many terms
  std::int64_t matrix_cap = 4096;          // |X^{2d}| bound for the step-phase chain
  std::int64_t state_cap = 8'000'000;      // H^d amplitudes for the operator side
};

/// Entry k of Theorem 1's estimator next to the operator-side bracket it must
/// equal; the e^{-i pi n*/4} factor restores the i^{n*/2} content the
/// measure-form normalization assumes away (it is 1 when 8 | n*).
Theorem1Result theorem1_estimate(const Rational& y0, const Rational& y1, std::int64_t r, const LatticeSequence& lat,
                                 const Potential& f_v, const Theorem1Options& opt = {});

}  // namespace pathlat

#endif
