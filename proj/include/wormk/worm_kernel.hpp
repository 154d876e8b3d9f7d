#pragma once

#include "wormk/types.hpp"
#include "wormk/worm_geometry.hpp"

namespace wormk::wk {

struct SeriesDiagnostics {
    int j_min = 0;
    int j_max = 0;
    double tail_bound = 0.0;
    int terms = 0;
    double ratio_ceiling = 0.0;  // theoretical monitor e^{-b_lambda + |log|zeta||}
};

struct SeriesResult {
    Complex value{0.0, 0.0};
    double err_est = 0.0;
    SeriesDiagnostics diag;
};

/// Bergman kernel of the unwound domain as the index series
///   K_U(z,w) = (z2 conj(w2))^{-1} sum_j K_j(z1,w1) zeta^{j+1},
///   zeta = e^{-(z1+conj w1)/2} z2 conj(w2).
/// Symmetric window grown until the geometric tail bound (empirical
/// last-terms ratio per direction) is below tol*|value|; term cap 400.
/// min_half_window forces at least that many index pairs (truncation-
/// stability probes double the automatically chosen window with it).
SeriesResult kernel_unwound(const geom::UPoint& z, const geom::UPoint& w, double tol,
                            int min_half_window = 0);

/// Bergman kernel of the worm via its own series
///   K_W(z,w) = (z1 conj(w1) z2 conj(w2))^{-1}
///              sum_j K_j(ell(z), ell(w)) (E_{i/2}(z) z2 conj(E_{i/2}(w) w2))^{j+1}.
SeriesResult kernel_worm(const geom::WormPoint& z, const geom::WormPoint& w, double tol,
                         int min_half_window = 0);

/// Boundary profile g on the annulus e^{-pi/2} < |zeta| < e^{pi/2}:
///   g(zeta) = (1/pi^3) sum_k (k pi/2)/sinh(k pi/2) zeta^k  (k = 0 term: 1).
Complex g_boundary_series(Complex zeta, double tol);
/// Same function through the partial-fraction split
///   g = (1/pi^3) [1 + pi S(zeta) + pi S(1/zeta)],
///   S(x) = sum_{m>=0} q_m x/(1 - q_m x)^2,  q_m = e^{-(m+1/2) pi};
/// authoritative near the annulus boundary.
Complex g_boundary_split(Complex zeta);
/// Dispatch: split near the annulus boundary, series inside.
Complex g_boundary(Complex zeta, double tol);

/// G(z,w) = z2 conj(w2) (z1 - conj w1)^2 K_U(z,w).
Complex normalized_kernel_unwound(const geom::UPoint& z, const geom::UPoint& w, double tol);
/// H(z,w) = z1 conj(w1) z2 conj(w2) (ell(z) - conj(ell(w)))^2 K_W(z,w).
Complex normalized_kernel_worm(const geom::WormPoint& z, const geom::WormPoint& w, double tol);

}  // namespace wormk::wk
