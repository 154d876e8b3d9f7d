#pragma once

#include "wormk/types.hpp"

namespace wormk::geom {

/// Point of (a neighborhood of) the worm domain
///   W = { |z1 - e^{i log|z2|^2}| < 1, z2 != 0 }.
struct WormPoint {
    Complex z1, z2;
};

/// Point of the unwound model
///   U = { (w1, w2) : Im w1 > 0, |Re w1 - log|w2|^2| < arccos(e^{-Im w1}), w2 != 0 }.
struct UPoint {
    Complex w1, w2;
};

bool contains_worm(const WormPoint& p);
/// Sharp truncation: worm membership plus |log|z2|^2| < mu.
bool contains_worm_mu(const WormPoint& p, double mu);
bool contains_unwound(const UPoint& p);

/// Holomorphic frame at a worm point: L, the unwound coordinate
/// ell = -i(L - log 2), and the fractional powers E_eta = e^{eta L}.
struct Frame {
    Complex L;
    Complex ell;
    Complex E(Complex eta) const { return std::exp(eta * L); }
};

/// L(z) = log(z1 e^{-i log|z2|^2}) + i log|z2|^2 (principal branch).
/// Throws if the principal-log argument falls on the cut.
Frame frame(const WormPoint& z);

/// Biholomorphism Phi(z) = (-i(L(z) - log 2), z2) from W onto U.
UPoint map_phi(const WormPoint& z);
/// Phi^{-1}(w1, w2) = (2 e^{i w1}, w2).
WormPoint map_phi_inv(const UPoint& w);

/// Singular boundary set of the unwound kernel: both first coordinates on
/// the same horizontal line, both on the same-side fiber arc, fibers
/// overlapping. Tolerance applies to each defining (in)equality.
bool in_singular_set_u(const UPoint& z, const UPoint& w, double tol);

/// Worm-side counterpart: z1 = 0 or w1 = 0, z2 = 0 or w2 = 0, or the
/// common-circle case with matched arc side and overlapping fibers.
bool in_singular_set_w(const WormPoint& z, const WormPoint& w, double tol);

}  // namespace wormk::geom
