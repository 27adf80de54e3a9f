#include "pathlat/fourier.hpp"

#include <fftw3.h>

#include <cmath>
#include <cstring>
#include <map>
#include <mutex>

#include "pathlat/errors.hpp"

namespace pathlat::fourier {

namespace {

// Per-size aligned work buffer + in-place plans.  Executing the original plan
// on its own buffer keeps FFTW's alignment contract; the copies are cheap
// next to the transform.  FFTW_ESTIMATE keeps plan selection deterministic
// across runs, which the experiment reruns rely on.
struct SizedPlan {
  fftw_complex* buf = nullptr;
  fftw_plan fwd = nullptr;  // FFTW_BACKWARD: sum e^{+2 pi i mn/N}
  fftw_plan inv = nullptr;  // FFTW_FORWARD:  sum e^{-2 pi i mn/N}
  ~SizedPlan() {
    if (fwd) fftw_destroy_plan(fwd);
    if (inv) fftw_destroy_plan(inv);
    if (buf) fftw_free(buf);
  }
};

std::mutex fft_mutex;

SizedPlan& plans_for(std::int64_t n) {
  static std::map<std::int64_t, SizedPlan> cache;
  auto it = cache.find(n);
  if (it == cache.end()) {
    it = cache.emplace(std::piecewise_construct, std::forward_as_tuple(n), std::forward_as_tuple()).first;
    SizedPlan& p = it->second;
    p.buf = fftw_alloc_complex(static_cast<std::size_t>(n));
    p.fwd = fftw_plan_dft_1d(static_cast<int>(n), p.buf, p.buf, FFTW_BACKWARD, FFTW_ESTIMATE);
    p.inv = fftw_plan_dft_1d(static_cast<int>(n), p.buf, p.buf, FFTW_FORWARD, FFTW_ESTIMATE);
  }
  return it->second;
}

void run(StateVector& v, bool forward_dir) {
  const std::int64_t n = v.dim();
  if (n == 0) throw DomainError("fourier: empty vector");
  std::lock_guard<std::mutex> lock(fft_mutex);
  SizedPlan& p = plans_for(n);
  std::memcpy(p.buf, v.data().data(), sizeof(fftw_complex) * static_cast<std::size_t>(n));
  fftw_execute(forward_dir ? p.fwd : p.inv);
  std::memcpy(v.data().data(), p.buf, sizeof(fftw_complex) * static_cast<std::size_t>(n));
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  for (auto& c : v.data()) c *= scale;
}

}  // namespace

void forward(StateVector& v) { run(v, true); }
void inverse(StateVector& v) { run(v, false); }

StateVector direct_forward(const StateVector& v) {
  const std::int64_t n = v.dim();
  StateVector out(n);
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  for (std::int64_t m = 0; m < n; ++m) {
    Complex s = 0;
    for (std::int64_t j = 0; j < n; ++j) {
      const double ang = 2.0 * M_PI * static_cast<double>((m * j) % n) / static_cast<double>(n);
      s += v[j] * Complex(std::cos(ang), std::sin(ang));
    }
    out[m] = s * scale;
  }
  return out;
}

StateVector direct_inverse(const StateVector& v) {
  const std::int64_t n = v.dim();
  StateVector out(n);
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  for (std::int64_t m = 0; m < n; ++m) {
    Complex s = 0;
    for (std::int64_t j = 0; j < n; ++j) {
      const double ang = -2.0 * M_PI * static_cast<double>((m * j) % n) / static_cast<double>(n);
      s += v[j] * Complex(std::cos(ang), std::sin(ang));
    }
    out[m] = s * scale;
  }
  return out;
}

}  // namespace pathlat::fourier
