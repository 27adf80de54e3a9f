#include "pathlat/phase_sum.hpp"

#include <cmath>

namespace pathlat {

void PhaseAccumulator::add(const PhaseExponent& e, std::int64_t weight) {
  if (weight == 0) return;
  Rational q1 = mod2(e.pi_coeff);
  std::int64_t sign = 1;
  if (q1 >= 1) {  // e^{i pi (q+1)} = -e^{i pi q}
    q1 -= 1;
    sign = -1;
  }
  Key key{q1, e.pi2_coeff};
  auto it = groups_.find(key);
  if (it == groups_.end()) it = groups_.emplace(key, BigInt(0)).first;
  it->second += BigInt(sign * weight);
  if (it->second == 0) groups_.erase(it);
}

void PhaseAccumulator::add(const PhaseAccumulator& other) {
  for (const auto& [key, w] : other.groups_) {
    auto it = groups_.find(key);
    if (it == groups_.end()) it = groups_.emplace(key, BigInt(0)).first;
    it->second += w;
    if (it->second == 0) groups_.erase(it);
  }
}

bool PhaseAccumulator::exactly_zero() const { return groups_.empty(); }

std::complex<double> PhaseAccumulator::value() const {
  std::complex<double> acc{0.0, 0.0};
  for (const auto& [key, w] : groups_) {
    const double ang = M_PI * to_double(key.q1) + M_PI * M_PI * to_double(key.q2);
    acc += w.get_d() * std::complex<double>(std::cos(ang), std::sin(ang));
  }
  return acc;
}

}  // namespace pathlat
