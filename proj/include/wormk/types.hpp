#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace wormk {

using Complex = std::complex<double>;

/// Thrown when an argument lies outside an operation's mathematical domain.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Thrown when an iterative scheme exhausts its budget. Carries the partial
/// value accumulated so far together with the last error estimate.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, Complex partial, double err_est)
        : std::runtime_error(what), partial(partial), err_est(err_est) {}
    Complex partial;
    double err_est;
};

inline bool is_interior_halfplane(Complex z) { return z.imag() > 0.0; }

/// Separation variable lambda = -i(z - conj(w)) for a pair of closed
/// upper half-plane points. Re(lambda) = Im z + Im w >= 0; the constructor
/// rejects pairs too close to the boundary diagonal (|lambda| < kMinModulus),
/// where the kernels genuinely blow up.
class Separation {
public:
    static constexpr double kMinModulus = 1e-6;

    Separation(Complex z, Complex w) : Separation(Complex(0, -1) * (z - std::conj(w))) {}

    explicit Separation(Complex lam) : lambda_(lam) {
        if (!(std::abs(lam) >= kMinModulus))
            throw DomainError("Separation: |lambda| below minimum " + std::to_string(kMinModulus));
        if (lam.real() < -1e-12)
            throw DomainError("Separation: Re(lambda) must be >= 0 (points not in closed half-plane)");
        if (lambda_.real() < 0.0) lambda_ = Complex(0.0, lambda_.imag());
    }

    Complex value() const { return lambda_; }
    double re() const { return lambda_.real(); }
    double im() const { return lambda_.imag(); }
    double modulus() const { return std::abs(lambda_); }
    /// True iff both underlying points are interior (lambda in open right half-plane).
    bool interior() const { return lambda_.real() > 0.0; }

private:
    Complex lambda_;
};

}  // namespace wormk
