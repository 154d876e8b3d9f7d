#pragma once

#include "wormk/quadrature.hpp"
#include "wormk/types.hpp"

namespace wormk::specfun {

/// log Gamma(z) for Re z > 0 (Lanczos, g = 7, 9 coefficients).
/// The imaginary part is continuous along rays from the positive real axis
/// (analytic continuation of the real log Gamma, not the principal branch
/// of log of Gamma).
Complex log_gamma(Complex z);

/// Spectral symbol of the weight alpha_j: the Laplace-transform value
/// alpha_hat_j(-2 i xi), evaluated and stored in log space.
struct SpectralSymbol {
    int j;
    double eta;        // (j+1)/2
    double xi;
    double log_value;  // log alpha_hat_j(-2 i xi)

    double value() const { return std::exp(log_value); }
    /// beta_eta(xi) = 1 / (2 pi alpha_hat_j(-2 i xi)), the Fourier multiplier.
    double log_beta() const;
};

/// log of alpha_hat_j(-2 i xi) via the Gamma closed form
///   alpha_hat = pi^2 Gamma(2 xi) 2^{-2 xi} / |Gamma(xi + 1 + i eta)|^2 .
/// Stays finite for xi in (0, 1e4] and |j| <= 200. Symmetric under
/// j <-> -2-j bit-for-bit (eta enters through |eta| only).
SpectralSymbol alpha_hat(int j, double xi);

/// Same quantity through the finite integral
///   (pi/xi) * int_0^{pi/2} cos(s)^{2 xi} cosh((j+1) s) ds
/// by adaptive quadrature; the independent cross-check for alpha_hat.
double alpha_hat_oracle(int j, double xi, double tol);

}  // namespace wormk::specfun
