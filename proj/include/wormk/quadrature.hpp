#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "wormk/types.hpp"

namespace wormk::quad {

using Integrand = std::function<Complex(double)>;

struct QuadratureResult {
    Complex value{0.0, 0.0};
    double err_est = 0.0;  // a-posteriori bound from the embedded-rule differences
    int nodes_used = 0;
};

struct Options {
    double rel_tol = 1e-10;
    double abs_tol = 1e-15;     // absolute floor, avoids chasing noise near zero
    int max_evals = 500000;     // node budget
    bool throw_on_budget = true;
};

/// Adaptive Gauss-Kronrod (G7,K15) with bisection on finite [a,b].
/// Panels are subdivided worst-error-first; the final reduction sums panels
/// in left-endpoint order so results are deterministic.
QuadratureResult integrate_adaptive(const Integrand& f, double a, double b, Options opts = {});

/// Same engine, seeded with the panels between consecutive breakpoints.
/// Use when the integrand has known sharp features the first panel's nodes
/// could straddle.
QuadratureResult integrate_adaptive(const Integrand& f, const std::vector<double>& breakpoints,
                                    Options opts = {});

enum class HalflineMap {
    DoubleExponential,  // xi = exp((pi/2) sinh t)
    Rational            // xi = t/(1-t)
};

/// Integral over (0, +inf) of an eventually exponentially decaying integrand.
/// The mapped integrand is clipped where its magnitude has fallen 40 nats
/// below the detected peak; failure to decay raises ConvergenceError.
QuadratureResult integrate_halfline(const Integrand& f, Options opts = {},
                                    HalflineMap map = HalflineMap::DoubleExponential);

/// Planar region described by a bounding box plus an indicator; row_interval,
/// when set, gives the exact x-slice at height y (tensor mode uses it to avoid
/// integrating across indicator jumps).
struct PlanarRegion {
    double xmin, xmax, ymin, ymax;
    std::function<bool(double, double)> contains;
    std::function<bool(double, double&, double&)> row_interval;  // optional
};

enum class Mode2D { Tensor, MonteCarlo };

struct Options2D {
    double rel_tol = 1e-7;
    double abs_tol = 1e-14;
    long budget = 40000000;     // total integrand evaluations
    std::uint64_t seed = 12345; // monte-carlo only
};

QuadratureResult integrate_2d(const std::function<Complex(double, double)>& f,
                              const PlanarRegion& region, Mode2D mode, Options2D opts = {});

}  // namespace wormk::quad
