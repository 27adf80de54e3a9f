#include "pathlat/units.hpp"

#include <cmath>

#include "pathlat/errors.hpp"

namespace pathlat {

Rational parse_rational(const std::string& text) {
  try {
    Rational q;
    if (q.set_str(text, 10) != 0) throw ConfigError("not a rational: '" + text + "'");
    q.canonicalize();
    if (q.get_den() == 0) throw ConfigError("zero denominator: '" + text + "'");
    return q;
  } catch (const std::invalid_argument&) {
    throw ConfigError("not a rational: '" + text + "'");
  }
}

Rational mod2(const Rational& q) {
  // q - 2*floor(q/2)
  Rational half = q / 2;
  BigInt fl;
  mpz_fdiv_q(fl.get_mpz_t(), half.get_num().get_mpz_t(), half.get_den().get_mpz_t());
  Rational r = q - Rational(2) * Rational(fl);
  return r;
}

Rational pow_int(const Rational& q, long e) {
  if (e == 0) return Rational(1);
  if (q == 0 && e < 0) throw DomainError("0^negative");
  Rational base = e > 0 ? q : Rational(1) / q;
  unsigned long n = static_cast<unsigned long>(e > 0 ? e : -e);
  Rational acc(1);
  Rational cur = base;
  while (n) {
    if (n & 1) acc *= cur;
    cur *= cur;
    n >>= 1;
  }
  return acc;
}

Rational PiScalar::as_rational() const {
  if (pi_pow_ != 0 && coeff_ != 0) throw DomainError("PiScalar carries a pi factor; not a plain rational");
  return coeff_;
}

double PiScalar::to_double() const {
  return coeff_.get_d() * std::pow(M_PI, pi_pow_);
}

PiScalar PiScalar::operator/(const PiScalar& o) const {
  if (o.coeff_ == 0) throw DomainError("PiScalar division by zero");
  return PiScalar(coeff_ / o.coeff_, pi_pow_ - o.pi_pow_);
}

PiScalar PiScalar::operator+(const PiScalar& o) const {
  if (coeff_ == 0) return o;
  if (o.coeff_ == 0) return *this;
  if (pi_pow_ != o.pi_pow_) throw DomainError("PiScalar sum across pi powers");
  return PiScalar(coeff_ + o.coeff_, pi_pow_);
}

PiScalar PiScalar::operator-(const PiScalar& o) const {
  return *this + PiScalar(-o.coeff_, o.pi_pow_);
}

UnitSystem UnitSystem::make(const Rational& t_over_pi, const Rational& h) {
  if (!(t_over_pi > 0)) throw InvalidUnitsError("t must be positive (t/pi <= 0 given)");
  if (!(h > 0)) throw InvalidUnitsError("h must be positive");
  UnitSystem u;
  u.t_over_pi_ = t_over_pi;
  u.h_ = h;
  return u;
}

BigInt nk(unsigned k) {
  if (k < 1) throw DomainError("nk requires k >= 1 (N_0 = 1 is degenerate)");
  return sqrt_nk(k) * sqrt_nk(k);
}

BigInt sqrt_nk(unsigned k) {
  if (k < 1) throw DomainError("nk requires k >= 1");
  // product of the first k+1 primes, to the k-th power
  BigInt prod = 1;
  BigInt p = 2;
  for (unsigned i = 0; i <= k; ++i) {
    prod *= p;
    mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
  }
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), prod.get_mpz_t(), k);
  return out;
}

DeltaSchedule DeltaSchedule::constant(unsigned s, unsigned k_max) {
  if (s < 1) throw DomainError("delta schedule values must be >= 1");
  if (k_max < 1) throw DomainError("k_max must be >= 1");
  DeltaSchedule d;
  d.kind_ = Kind::Constant;
  d.k_max_ = k_max;
  d.values_.assign(k_max + 1, s);
  return d;
}

DeltaSchedule DeltaSchedule::table(std::vector<unsigned> values) {
  if (values.empty()) throw DomainError("delta table must be nonempty");
  for (unsigned v : values)
    if (v < 1) throw DomainError("delta schedule values must be >= 1");
  DeltaSchedule d;
  d.kind_ = Kind::Table;
  d.k_max_ = static_cast<unsigned>(values.size());
  d.values_ = std::move(values);
  // values_[i] is delta(i+1); keep a slot for k=0 unused
  d.values_.insert(d.values_.begin(), d.values_.front());
  return d;
}

unsigned DeltaSchedule::at(unsigned k) const {
  if (k < 1 || k > k_max_) throw DomainError("delta(k): k out of schedule range");
  return values_[k];
}

bool is_delta_good(unsigned k, const DeltaSchedule& delta) {
  unsigned dk = delta.at(k);
  for (unsigned p = 1; p < k; ++p)
    if (delta.at(p) > dk) return false;
  return true;
}

ScaledN scaled_n(unsigned k, const DeltaSchedule& delta, const UnitSystem& u) {
  unsigned dk = delta.at(k);
  BigInt factor;
  mpz_ui_pow_ui(factor.get_mpz_t(), 2, 2ul * dk);
  ScaledN out;
  out.n_d = factor * nk(k);
  out.h_d = Rational(factor) * u.h();
  return out;
}

LatticeSpec LatticeSpec::make(std::int64_t sqrt_n, std::vector<std::int64_t> required_divisors) {
  if (sqrt_n < 2) throw DomainError("sqrt_n must be >= 2");
  if (sqrt_n % 2 != 0) throw DomainError("sqrt_n must be even (th/m = 2)");
  for (std::int64_t d : required_divisors) {
    if (d <= 0) throw DomainError("divisors must be positive");
    if (sqrt_n % d != 0) throw DomainError("sqrt_n=" + std::to_string(sqrt_n) + " not divisible by " + std::to_string(d));
  }
  LatticeSpec s;
  s.sqrt_n = sqrt_n;
  s.required_divisors = std::move(required_divisors);
  return s;
}

}  // namespace pathlat
