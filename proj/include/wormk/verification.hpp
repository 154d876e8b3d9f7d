#pragma once

#include <vector>

#include "wormk/types.hpp"
#include "wormk/worm_geometry.hpp"

namespace wormk::verify {

/// Rational sample f(zeta) = (zeta + i a)^{-b}, a > 0, b >= 2 integer;
/// lies in every weighted space A^2(U, alpha_j) since the weights are bounded.
struct RationalSample {
    double a = 1.0;
    int b = 2;
    Complex operator()(Complex zeta) const;
};

/// Relative defect of the reproducing identity f(w) = <f, K_j(., w)>_{alpha_j},
/// the pairing evaluated by truncated-box 2D quadrature with the given
/// evaluation budget.
double reproducing_error(int j, const RationalSample& f, Complex w, long budget);

enum class NormClass { Finite, Divergent, Inconclusive };

struct NormResult {
    NormClass cls = NormClass::Inconclusive;
    double value = 0.0;              // last partial (the norm when Finite)
    double err = 0.0;                // |last - previous| when Finite
    std::vector<double> partials;    // one entry per cutoff rung
};

/// Squared-norm classifier for the sample family F_{eta,c,j,m} through the
/// reduced triple integral; nested cutoffs in the unbounded directions form
/// the ladder. mu may be infinity.
NormResult sample_norm(Complex eta, double c, int j, double m, double mu, double tol);

enum class Probe { Lp, L2, Sobolev };

struct ProbeOptions {
    double mu = 1.5707963267948966;  // worm truncation entering c2 = (pi + 2 mu)^2
    double eps = 0.5;                // outer radius of the probe integral
    double t = 0.0;                  // angular parameter of the Sobolev variant
};

/// Partial values int_delta^eps of the boundary-singularity integrand for
/// each delta in the (decreasing) ladder. Lp needs p > 2; L2 runs the same
/// integral at p = 2 as a convergent control; Sobolev needs s in (0, 1/2).
std::vector<std::pair<double, double>> divergence_probe(Probe kind, double exponent,
                                                        const geom::WormPoint& w,
                                                        const std::vector<double>& delta_ladder,
                                                        ProbeOptions opts = {});

struct DecayFit {
    double rate_pos = 0.0;  // least-squares slope of log|K_j| vs |j+1|, j+1 > 0
    double rate_neg = 0.0;  // same for j+1 < 0
    int points_pos = 0;
    int points_neg = 0;
    double b = 0.0;         // b_lambda of the pair
};

/// Fits the exponential decay rate of log|K_j| over |j+1| in [j_max/2, j_max];
/// stops a direction early if |K_j| falls under 1e-280.
DecayFit decay_estimate(Complex z1, Complex w1, int j_max);

}  // namespace wormk::verify
