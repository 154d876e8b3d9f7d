#pragma once

#include "wormk/types.hpp"

namespace wormk::weights {

/// Fiber-volume weight on the upper half-plane, v = Im(coordinate) > 0:
///   alpha_j(v)  = (2 pi / (j+1)) sinh[(j+1) arccos(e^{-v})]   (j != -1)
///   alpha_-1(v) = 2 pi arccos(e^{-v})
/// Depends on v only; 0 < alpha_j(v) < alpha_sup(j).
double alpha(int j, double v);

/// Supremum of alpha_j over v > 0.
double alpha_sup(int j);

/// Weight before the exponential renormalization:
///   omega_j(u+iv) = e^{(j+1)u} alpha_j(v),  omega_-1 = alpha_-1.
double omega(int j, Complex w1);

}  // namespace wormk::weights
