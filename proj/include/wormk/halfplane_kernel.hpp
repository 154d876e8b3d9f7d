#pragma once

#include "wormk/types.hpp"

namespace wormk::hpk {

enum class Representation { Integral, Fourier, Asymptotic };

struct KernelResult {
    Complex value{0.0, 0.0};
    double err_est = 0.0;
    Representation representation = Representation::Integral;
    int nodes = 0;  // quadrature nodes used
    int order = 0;  // expansion order (asymptotic only)
};

/// Strip half-width controlling the decay rate of K_j in the index:
///   b_lambda = max{ arccos(e^{-Re lambda / 2}), min{|Im lambda|/2, pi/2} }.
double b_lambda(const Separation& lam);

/// phi_lambda(s) = (1/2pi^3) sech^2(s) [ (2 log cosh s + lambda)^{-2}
///                                      + 4 (2 log cosh s + lambda)^{-3} ].
/// The complex-argument overload is the holomorphic extension used on
/// shifted contours; |Im s| must stay inside the analyticity strip.
Complex phi_lambda(const Separation& lam, double s);
Complex phi_lambda(const Separation& lam, Complex s);

/// Smallest Re(lambda) the damped Fourier-Laplace representation accepts.
inline constexpr double kIntegralMinRe = 1e-3;

/// K_j(z,w) = (1/2pi) int_0^inf e^{i(z-conj w) xi} / alpha_hat_j(-2 i xi) dxi,
/// evaluated in log space. Requires Re(lambda) >= kIntegralMinRe.
KernelResult kernel_j_integral(int j, Complex z, Complex w, double tol);
KernelResult kernel_j_integral(int j, const Separation& lam, double tol);

/// K_j(z,w) as the Fourier transform of phi_lambda at j+1. Valid on the
/// closed half-plane off the boundary diagonal; for |j+1| >= 4 the contour
/// is shifted into the analyticity strip so exponentially small values are
/// computed without cancellation.
KernelResult kernel_j_fourier(int j, Complex z, Complex w, double tol);
KernelResult kernel_j_fourier(int j, const Separation& lam, double tol);

/// Fourier value in mantissa/log-scale form: K_j = mantissa * e^{log_scale}.
/// Series consumers combine log_scale with the geometric-factor exponents
/// before exponentiating, so terms with |j+1| in the hundreds neither
/// overflow nor underflow.
struct ScaledKernel {
    Complex mantissa{0.0, 0.0};
    double log_scale = 0.0;
    double err_mantissa = 0.0;
    int nodes = 0;
};
ScaledKernel kernel_j_fourier_scaled(int j, const Separation& lam, double tol);

/// Coefficients of the large-separation expansion
///   K_j = sum_{n>=2} psi_n(j+1) / (z - conj w)^n.
/// psi_2 by closed form, higher n by quadrature of I_m; memoized per (n, xi).
Complex psi_n(int n, double xi);

/// Partial sum sum_{n=2}^{N-1} psi_n(j+1)/(z-conj w)^n with the dropped-term
/// error estimate |psi_N(j+1)| kappa / |z-conj w|^N. Never auto-selected.
KernelResult kernel_j_asymptotic(int j, Complex z, Complex w, int N);

/// Representation dispatch: integral for Re lambda >= 0.2, Fourier otherwise.
KernelResult kernel_j(int j, Complex z, Complex w, double tol);
KernelResult kernel_j(int j, const Separation& lam, double tol);

/// Normalized kernel f_j(lambda) = -lambda^2 K_j  (K_j = f_j/(z-conj w)^2).
Complex f_j(int j, const Separation& lam, double tol);

}  // namespace wormk::hpk
