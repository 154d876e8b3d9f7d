#include "wormk/weights.hpp"

#include <cmath>
#include <numbers>

namespace wormk::weights {

namespace {

// arccos(e^{-v}) with the argument clamped into [-1, 1]; e^{-v} can exceed 1
// by rounding for v near 0.
double acos_exp_neg(double v) {
    double t = std::exp(-v);
    if (t > 1.0) {
        if (t > 1.0 + 1e-12) throw DomainError("weights: arccos argument out of range");
        t = 1.0;
    }
    return std::acos(t);
}

}  // namespace

double alpha(int j, double v) {
    if (!(v > 0.0)) throw DomainError("alpha: requires v > 0");
    const double a = acos_exp_neg(v);
    if (j == -1) return 2.0 * std::numbers::pi * a;
    const double k = static_cast<double>(j) + 1.0;
    return 2.0 * std::numbers::pi / k * std::sinh(k * a);
}

double alpha_sup(int j) {
    if (j == -1) return std::numbers::pi * std::numbers::pi;
    const double k = static_cast<double>(j) + 1.0;
    return 2.0 * std::numbers::pi / k * std::sinh(k * std::numbers::pi / 2.0);
}

double omega(int j, Complex w1) {
    if (!(w1.imag() > 0.0)) throw DomainError("omega: requires Im w1 > 0");
    const double base = alpha(j, w1.imag());
    if (j == -1) return base;
    return std::exp((static_cast<double>(j) + 1.0) * w1.real()) * base;
}

}  // namespace wormk::weights
