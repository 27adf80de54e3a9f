#ifndef PATHLAT_FOURIER_HPP
#define PATHLAT_FOURIER_HPP

#include <vector>

#include "pathlat/hilbert.hpp"

namespace pathlat {

/// Unitary DFT, fixed convention: forward entries N^{-1/2} e^{+2 pi i mn/N}.
/// Backed by FFTW (deterministic ESTIMATE plans, cached per size); the
/// quadratic-cost direct evaluation is kept as an independent oracle and as
/// the fallback documented for arbitrary N.
namespace fourier {

void forward(StateVector& v);
void inverse(StateVector& v);

StateVector direct_forward(const StateVector& v);
StateVector direct_inverse(const StateVector& v);

}  // namespace fourier

}  // namespace pathlat

#endif
