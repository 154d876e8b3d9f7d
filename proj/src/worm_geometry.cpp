#include "wormk/worm_geometry.hpp"

#include <cmath>
#include <numbers>

namespace wormk::geom {

namespace {

double log_mod_sq(Complex z2) { return 2.0 * std::log(std::abs(z2)); }

double acos_clamped(double t) {
    if (t > 1.0) t = 1.0;
    if (t < -1.0) t = -1.0;
    return std::acos(t);
}

// angular difference folded into (-pi, pi]
double angle_diff(double a, double b) {
    double d = std::remainder(a - b, 2.0 * std::numbers::pi);
    return d;
}

}  // namespace

bool contains_worm(const WormPoint& p) {
    if (p.z2 == Complex(0.0, 0.0)) return false;
    const double phase = log_mod_sq(p.z2);
    return std::abs(p.z1 - std::exp(Complex(0.0, phase))) < 1.0;
}

bool contains_worm_mu(const WormPoint& p, double mu) {
    if (!(mu > 0.0)) throw DomainError("contains_worm_mu: mu must be positive");
    if (p.z2 == Complex(0.0, 0.0)) return false;
    return contains_worm(p) && std::fabs(log_mod_sq(p.z2)) < mu;
}

bool contains_unwound(const UPoint& p) {
    if (p.w2 == Complex(0.0, 0.0)) return false;
    const double v = p.w1.imag();
    if (!(v > 0.0)) return false;
    return std::fabs(p.w1.real() - log_mod_sq(p.w2)) < acos_clamped(std::exp(-v));
}

Frame frame(const WormPoint& z) {
    if (z.z2 == Complex(0.0, 0.0)) throw DomainError("frame: z2 must be nonzero");
    const double phase = log_mod_sq(z.z2);
    const Complex rotated = z.z1 * std::exp(Complex(0.0, -phase));
    if (rotated.real() <= 0.0 && std::fabs(rotated.imag()) == 0.0)
        throw DomainError("frame: principal-log argument on the branch cut");
    Frame f;
    f.L = std::log(rotated) + Complex(0.0, phase);
    f.ell = Complex(0.0, -1.0) * (f.L - std::numbers::ln2);
    return f;
}

UPoint map_phi(const WormPoint& z) {
    if (!contains_worm(z)) throw DomainError("map_phi: point not in the worm domain");
    const Frame f = frame(z);
    return UPoint{f.ell, z.z2};
}

WormPoint map_phi_inv(const UPoint& w) {
    if (!contains_unwound(w)) throw DomainError("map_phi_inv: point not in the unwound domain");
    return WormPoint{2.0 * std::exp(Complex(0.0, 1.0) * w.w1), w.w2};
}

bool in_singular_set_u(const UPoint& z, const UPoint& w, double tol) {
    if (!(tol >= 0.0)) throw DomainError("in_singular_set_u: tol must be >= 0");
    const double vz = z.w1.imag(), vw = w.w1.imag();
    if (std::fabs(vz - vw) > tol) return false;
    const double v = 0.5 * (vz + vw);
    if (v < -tol) return false;
    const double a = acos_clamped(std::exp(-std::max(v, 0.0)));
    const double dz = z.w1.real() - log_mod_sq(z.w2);
    const double dw = w.w1.real() - log_mod_sq(w.w2);
    const bool plus = std::fabs(dz - a) <= tol && std::fabs(dw - a) <= tol;
    const bool minus = std::fabs(dz + a) <= tol && std::fabs(dw + a) <= tol;
    if (!plus && !minus) return false;
    return std::fabs(log_mod_sq(z.w2) - log_mod_sq(w.w2)) <= 2.0 * a + tol;
}

bool in_singular_set_w(const WormPoint& z, const WormPoint& w, double tol) {
    if (!(tol >= 0.0)) throw DomainError("in_singular_set_w: tol must be >= 0");
    // (i) first coordinate vanishing, (ii) second coordinate vanishing
    if (std::abs(z.z1) <= tol || std::abs(w.z1) <= tol) return true;
    if (std::abs(z.z2) <= tol || std::abs(w.z2) <= tol) return true;

    // (iii) common circle |z1| = |w1| = r, matched arc side, overlapping fibers
    const double r = std::abs(z.z1);
    if (std::fabs(std::abs(w.z1) - r) > tol) return false;
    if (r > 2.0 + tol) return false;
    const double a = acos_clamped(std::min(r, 2.0) / 2.0);
    const double tz = angle_diff(std::arg(z.z1), log_mod_sq(z.z2));
    const double tw = angle_diff(std::arg(w.z1), log_mod_sq(w.z2));
    const bool plus = std::fabs(tz - a) <= tol && std::fabs(tw - a) <= tol;
    const bool minus = std::fabs(tz + a) <= tol && std::fabs(tw + a) <= tol;
    if (!plus && !minus) return false;
    return std::fabs(log_mod_sq(z.z2) - log_mod_sq(w.z2)) <= 2.0 * a + tol;
}

}  // namespace wormk::geom
