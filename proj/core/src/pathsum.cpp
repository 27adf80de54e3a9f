#include "pathlat/pathsum.hpp"

#include <atomic>
#include <cmath>
#include <thread>

#include "pathlat/errors.hpp"
#include "pathlat/operators.hpp"

namespace pathlat {

ActionDensityParams ActionDensityParams::make(const UnitSystem& u, unsigned delta_k, Potential f_v) {
  ActionDensityParams p;
  p.m = u.m();
  p.dt = u.t() / PiScalar::rational(Rational(std::int64_t(1) << (2 * delta_k)));
  p.f_v = std::move(f_v);
  return p;
}

double action_density(double x, double y, const ActionDensityParams& p) {
  const double m_over_2dt2 = (p.m / (PiScalar::rational(2) * p.dt * p.dt)).to_double();
  const double d = y - x;
  return m_over_2dt2 * d * d - p.f_v.eval(x);
}

Complex path_phase(std::span<const double> path, const ActionDensityParams& p, const UnitSystem& u) {
  if (path.size() < 2) throw DomainError("path_phase: need at least two points");
  const double m_over_2dt2 = (p.m / (PiScalar::rational(2) * p.dt * p.dt)).to_double();
  const double dt_over_hbar = (p.dt / u.hbar()).to_double();
  double s = 0;
  for (std::size_t j = 1; j < path.size(); ++j) {
    const double d = path[j] - path[j - 1];
    s += m_over_2dt2 * d * d - p.f_v.eval(path[j - 1]);
  }
  const double ang = dt_over_hbar * s;
  return Complex(std::cos(ang), std::sin(ang));
}

PhaseExponent step_phase_exponent(const Rational& x, const Rational& y, std::int64_t n_star, const Potential& f_v,
                                  const UnitSystem& u) {
  // dt * (m dx^2/(2 dt^2)) / hbar = pi n* dx^2 / 2   (th/m = 2)
  // dt * f_v(x) / hbar = pi^2 * 2 (t/pi) f_v(x) / (n* h)
  PhaseExponent e;
  const Rational dx = y - x;
  e.pi_coeff = Rational(n_star) * dx * dx / 2;
  if (!f_v.is_free()) e.pi2_coeff = -2 * u.t_over_pi() * f_v.eval_exact(x) / (Rational(n_star) * u.h());
  return e;
}

PathIntegralSetup PathIntegralSetup::make(std::int64_t sqrt_nk, unsigned delta_k, const UnitSystem& u,
                                          Potential f_v) {
  return PathIntegralSetup{Grid::hd(sqrt_nk, delta_k), delta_k, u, std::move(f_v)};
}

Complex path_sum_prefactor(const PathIntegralSetup& s, PrefactorConvention pref) {
  const std::int64_t n_star = s.n_star();
  const double nd = static_cast<double>(s.hd.n());
  // both conventions share the modulus (2/N^d)^{n*/2}
  const double mag = std::pow(2.0 / nd, static_cast<double>(n_star) / 2.0);
  if (pref == PrefactorConvention::MeasureForm) {
    if (n_star % 8 != 0)
      throw DomainError("measure-form prefactor assumes n* divisible by 8 (n* = " + std::to_string(n_star) + ")");
    return Complex(mag, 0.0);
  }
  const double ang = -M_PI * static_cast<double>(n_star % 8) / 4.0;  // (1/i)^{n*/2}
  return mag * Complex(std::cos(ang), std::sin(ang));
}

namespace {

std::uint64_t pow_u64_capped(std::uint64_t base, unsigned exp, std::uint64_t cap) {
  std::uint64_t acc = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (acc > cap / base + 1) return cap + 1;
    acc *= base;
    if (acc > cap) return cap + 1;
  }
  return acc;
}

// One parity sector of X^d as H_k-unit values.
std::vector<double> sector_values(const Grid& hd, bool odd) {
  std::vector<double> vals;
  vals.reserve(static_cast<std::size_t>(hd.n() / 2));
  for (std::int64_t pidx = odd ? 1 : 0; pidx < hd.n(); pidx += 2) vals.push_back(hd.value_d(pidx));
  return vals;
}

// Shared float-mode enumeration.  The running angle is tracked in units of
// pi: a kinetic step adds (n*/2) dx^2, a potential evaluation at the step's
// starting point adds pi * pot_scale * f_v(x) (the exponent is pi^2-graded).
struct FloatEnumerator {
  const std::vector<double>& xs;
  double xn;
  double kin_scale;
  double pot_scale;
  const Potential& f_v;

  Complex tail(double prev, unsigned left, double angle_pi) const {
    if (left == 0) {
      const double d = xn - prev;
      const double ang = M_PI * (angle_pi + kin_scale * d * d);
      return Complex(std::cos(ang), std::sin(ang));
    }
    Complex acc(0, 0);
    for (double x : xs) {
      const double d = x - prev;
      acc += tail(x, left - 1, angle_pi + kin_scale * d * d + M_PI * pot_scale * f_v.eval(x));
    }
    return acc;
  }
};

BruteForceResult bruteforce_float(std::int64_t x0_pidx, std::int64_t xn_pidx, const PathIntegralSetup& s,
                                  PrefactorConvention pref, std::uint64_t term_cap, int threads, bool odd_sector) {
  const std::int64_t n_star = s.n_star();
  const std::uint64_t m = static_cast<std::uint64_t>(s.hd.n() / 2);
  const std::uint64_t total = pow_u64_capped(m, static_cast<unsigned>(n_star - 1), term_cap);
  if (total > term_cap) throw CapExceededError("bruteforce_path_integral: term count exceeds cap");

  const double kin_scale = static_cast<double>(n_star) / 2.0;
  const double pot_scale =
      s.f_v.is_free() ? 0.0 : to_double(Rational(-2) * s.units.t_over_pi() / (Rational(n_star) * s.units.h()));
  const std::vector<double> xs = sector_values(s.hd, odd_sector);
  const double x0 = s.hd.value_d(x0_pidx), xn = s.hd.value_d(xn_pidx);
  const FloatEnumerator en{xs, xn, kin_scale, pot_scale, s.f_v};
  const double base_angle = M_PI * pot_scale * s.f_v.eval(x0);

  BruteForceResult out;
  out.terms = total;
  if (n_star == 1) {
    const double d = xn - x0;
    const double ang = M_PI * (base_angle + kin_scale * d * d);
    out.value = path_sum_prefactor(s, pref) * Complex(std::cos(ang), std::sin(ang));
    return out;
  }

  const unsigned interior = static_cast<unsigned>(n_star - 1);
  const std::size_t nfirst = xs.size();
  std::vector<Complex> partial(nfirst);
  auto first_term = [&](std::size_t i) {
    const double x1 = xs[i];
    const double d = x1 - x0;
    partial[i] = en.tail(x1, interior - 1, base_angle + kin_scale * d * d + M_PI * pot_scale * s.f_v.eval(x1));
  };
  const int nthreads = std::max(1, threads);
  if (nthreads <= 1 || nfirst < 2) {
    for (std::size_t i = 0; i < nfirst; ++i) first_term(i);
  } else {
    std::atomic<std::size_t> cursor{0};
    auto runner = [&] {
      for (;;) {
        const std::size_t i = cursor.fetch_add(1);
        if (i >= nfirst) return;
        first_term(i);
      }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(runner);
    for (auto& t : pool) t.join();
  }
  // per-coordinate partials combined in index order: the reduction is
  // deterministic for any thread count
  Complex sum(0, 0);
  for (const Complex& c : partial) sum += c;
  out.value = path_sum_prefactor(s, pref) * sum;
  return out;
}

}  // namespace

BruteForceResult bruteforce_path_integral(std::int64_t x0_pidx, std::int64_t xn_pidx, const PathIntegralSetup& s,
                                          ArithmeticMode mode, PrefactorConvention pref, std::uint64_t term_cap,
                                          int threads) {
  if (x0_pidx % 2 != 0 || xn_pidx % 2 != 0)
    throw DomainError("bruteforce_path_integral: endpoints must lie in X^{2d} (even parent index)");
  if (mode == ArithmeticMode::Float) return bruteforce_float(x0_pidx, xn_pidx, s, pref, term_cap, threads, false);

  const std::int64_t n_star = s.n_star();
  const std::uint64_t m = static_cast<std::uint64_t>(s.hd.n() / 2);
  const std::uint64_t total = pow_u64_capped(m, static_cast<unsigned>(n_star - 1), term_cap);
  if (total > term_cap) throw CapExceededError("bruteforce_path_integral: term count exceeds cap");

  const Rational kin_scale_q = Rational(n_star) / 2;
  const Rational pot_scale_q =
      s.f_v.is_free() ? Rational(0) : Rational(-2) * s.units.t_over_pi() / (Rational(n_star) * s.units.h());
  std::vector<Rational> xs;
  xs.reserve(static_cast<std::size_t>(s.hd.n() / 2));
  for (std::int64_t pidx = 0; pidx < s.hd.n(); pidx += 2) xs.push_back(s.hd.value(pidx));
  const Rational x0 = s.hd.value(x0_pidx), xn = s.hd.value(xn_pidx);

  PhaseAccumulator acc;
  auto tail = [&](auto&& self, const Rational& prev, unsigned left, const PhaseExponent& e) -> void {
    if (left == 0) {
      PhaseExponent fin = e;
      const Rational d = xn - prev;
      fin.pi_coeff += kin_scale_q * d * d;
      acc.add(fin);
      return;
    }
    for (const Rational& x : xs) {
      PhaseExponent nxt = e;
      const Rational d = x - prev;
      nxt.pi_coeff += kin_scale_q * d * d;
      if (!s.f_v.is_free()) nxt.pi2_coeff += pot_scale_q * s.f_v.eval_exact(x);
      self(self, x, left - 1, nxt);
    }
  };
  PhaseExponent e0;
  if (!s.f_v.is_free()) e0.pi2_coeff = pot_scale_q * s.f_v.eval_exact(x0);
  BruteForceResult out;
  out.terms = total;
  if (n_star == 1) {
    PhaseExponent fin = e0;
    const Rational d = xn - x0;
    fin.pi_coeff += kin_scale_q * d * d;
    acc.add(fin);
  } else {
    tail(tail, x0, static_cast<unsigned>(n_star - 1), e0);
  }
  out.exact_zero = acc.exactly_zero();
  out.value = path_sum_prefactor(s, pref) * acc.value();
  return out;
}

Complex transfer_matrix_path_integral(std::int64_t x0_pidx, std::int64_t xn_pidx, const PathIntegralSetup& s) {
  StateVector start = StateVector::basis(s.hd.n(), x0_pidx);
  StateVector evolved = trotter_power(start, s.n_star(), s.delta_k, s.f_v, s.hd, s.units);
  return evolved[xn_pidx];
}

BruteForceResult bruteforce_path_integral_odd_sector(std::int64_t x0_pidx, std::int64_t xn_pidx,
                                                     const PathIntegralSetup& s, std::uint64_t term_cap) {
  if (x0_pidx % 2 == 0 || xn_pidx % 2 == 0)
    throw DomainError("odd-sector path integral: endpoints must lie in X^d minus X^{2d}");
  return bruteforce_float(x0_pidx, xn_pidx, s, PrefactorConvention::Lemma3Raw, term_cap, 1, true);
}

}  // namespace pathlat
