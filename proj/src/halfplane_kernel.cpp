#include "wormk/halfplane_kernel.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

#include "wormk/quadrature.hpp"
#include "wormk/specfun.hpp"

namespace wormk::hpk {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPiCubed = 2.0 * kPi * kPi * kPi;

// log cosh, stable for large |Re s|.
Complex log_cosh(Complex s) {
    if (s.real() < 0.0) s = -s;
    if (s.real() > 20.0) return s - std::numbers::ln2 + std::exp(-2.0 * s);
    return std::log(std::cosh(s));
}

double log_cosh(double s) {
    s = std::fabs(s);
    if (s > 20.0) return s - std::numbers::ln2 + std::exp(-2.0 * s);
    return std::log(std::cosh(s));
}

Complex sech2(Complex s) {
    const Complex c = std::cosh(s);
    return 1.0 / (c * c);
}

Complex bracket(Complex denom) {
    const Complex inv = 1.0 / denom;
    const Complex inv2 = inv * inv;
    return inv2 + 4.0 * inv2 * inv;
}

Complex lambda_of(Complex z, Complex w) { return Complex(0, -1) * (z - std::conj(w)); }

// Contour shift depth for the Fourier representation; stays strictly inside
// the analyticity strip and below the sech^2 poles at pi/2.
double shift_depth(const Separation& lam) {
    const double b = b_lambda(lam);
    return std::min(0.9 * b, kPi / 2.0 - 0.02);
}

// Lower bound for |2 log cosh(s - i b) + lambda| along the shifted contour.
double denom_floor(const Separation& lam, double b) {
    const double cb = std::cos(b);
    const double m_re = lam.re() + std::log(cb * cb);
    const double m_im = std::fabs(lam.im()) - 2.0 * b;
    return std::max(m_re, m_im);
}

}  // namespace

double b_lambda(const Separation& lam) {
    double t = std::exp(-0.5 * lam.re());
    t = std::min(t, 1.0);
    const double a = std::acos(t);
    return std::max(a, std::min(0.5 * std::fabs(lam.im()), kPi / 2.0));
}

Complex phi_lambda(const Separation& lam, double s) {
    return phi_lambda(lam, Complex(s, 0.0));
}

Complex phi_lambda(const Separation& lam, Complex s) {
    const Complex denom = 2.0 * log_cosh(s) + lam.value();
    if (std::abs(denom) == 0.0)
        throw DomainError("phi_lambda: pole 2 log cosh s + lambda = 0");
    return sech2(s) * bracket(denom) / kTwoPiCubed;
}

KernelResult kernel_j_integral(int j, Complex z, Complex w, double tol) {
    return kernel_j_integral(j, Separation(z, w), tol);
}

KernelResult kernel_j_integral(int j, const Separation& lam, double tol) {
    if (!(tol > 0)) throw DomainError("kernel_j_integral: tol must be positive");
    if (lam.re() < kIntegralMinRe)
        throw DomainError("kernel_j_integral: Re lambda below the representation floor; use kernel_j_fourier");
    const Complex l = lam.value();
    auto f = [j, l](double xi) -> Complex {
        const auto sym = specfun::alpha_hat(j, xi);
        return std::exp(-l * xi - sym.log_value);
    };
    quad::Options opts;
    opts.rel_tol = 0.3 * tol;
    opts.abs_tol = 1e-300;
    const auto r = quad::integrate_halfline(f, opts);
    return {r.value / (2.0 * kPi), r.err_est / (2.0 * kPi), Representation::Integral, r.nodes_used, 0};
}

KernelResult kernel_j_fourier(int j, Complex z, Complex w, double tol) {
    return kernel_j_fourier(j, Separation(z, w), tol);
}

ScaledKernel kernel_j_fourier_scaled(int j, const Separation& lam, double tol) {
    if (!(tol > 0)) throw DomainError("kernel_j_fourier: tol must be positive");
    const double xi = std::fabs(static_cast<double>(j) + 1.0);  // phi even => K_j = K_{-2-j} exactly

    double b = 0.0;
    if (xi >= 4.0) {
        b = shift_depth(lam);
        if (b < 0.01) b = 0.0;
    }
    const double dmin = denom_floor(lam, b);
    if (!(dmin > 0.0))
        throw DomainError("kernel_j_fourier: contour too close to a pole of phi_lambda");

    // truncation where sech^2 * bracket bound falls below tol * 1e-2
    const double bound = 1.0 / (dmin * dmin) + 4.0 / (dmin * dmin * dmin);
    double S = 0.5 * std::log(std::max(1.0, 4.0 * bound / (tol * 1e-2)));
    S = std::clamp(S, 12.0, 80.0);

    const Complex sh(0.0, -b);  // evaluated at s + sh; xi >= 0 so decay side is Im s < 0
    auto f = [&lam, xi, sh](double s) -> Complex {
        return std::exp(Complex(0.0, -xi * s)) * phi_lambda(lam, Complex(s, 0.0) + sh);
    };

    // breakpoints resolve the central feature of width ~sqrt(|lambda|)
    std::vector<double> pts;
    const double wdt = std::min(1.0, 50.0 * std::sqrt(lam.modulus()));
    for (double p : {-S, -1.0, -wdt, 0.0, wdt, 1.0, S}) pts.push_back(p);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end(),
                          [](double a, double c) { return !(a < c); }),
              pts.end());

    quad::Options opts;
    opts.rel_tol = 0.3 * tol;
    opts.abs_tol = 1e-300;
    const auto r = quad::integrate_adaptive(f, pts, opts);
    return {r.value, -b * xi, r.err_est, r.nodes_used};
}

KernelResult kernel_j_fourier(int j, const Separation& lam, double tol) {
    const auto s = kernel_j_fourier_scaled(j, lam, tol);
    const double damp = std::exp(s.log_scale);  // contour-shift prefactor e^{-b|j+1|}
    return {s.mantissa * damp, s.err_mantissa * damp, Representation::Fourier, s.nodes, 0};
}

namespace {

// I_m(xi) = int_R e^{-i xi s} (2 log cosh s)^m sech^2 s ds, real and even in xi.
double I_m(int m, double xi) {
    xi = std::fabs(xi);
    if (m == 0) {
        // residue closed form: I_0 = 2 (xi pi/2)/sinh(xi pi/2)
        const double x = 0.5 * kPi * xi;
        if (std::fabs(x) < 1e-4) return 2.0 * (1.0 - x * x / 6.0 + 7.0 * x * x * x * x / 360.0);
        return 2.0 * x / std::sinh(x);
    }
    auto f = [m, xi](double s) -> Complex {
        const double lc = 2.0 * log_cosh(s);
        const double c = std::cosh(s);
        return {std::cos(xi * s) * std::pow(lc, m) / (c * c), 0.0};
    };
    quad::Options opts;
    opts.rel_tol = 1e-13;
    opts.abs_tol = 1e-18;
    const auto r = quad::integrate_adaptive(f, {0.0, 1.0, 5.0, 20.0, 60.0}, opts);
    return 2.0 * r.value.real();
}

Complex i_pow(int n) {  // (-i)^n
    switch (((n % 4) + 4) % 4) {
        case 0: return {1.0, 0.0};
        case 1: return {0.0, -1.0};
        case 2: return {-1.0, 0.0};
        default: return {0.0, 1.0};
    }
}

std::map<std::pair<int, double>, Complex> psi_cache;
std::mutex psi_mutex;

}  // namespace

Complex psi_n(int n, double xi) {
    if (n < 2) throw DomainError("psi_n: requires n >= 2");
    if (n == 2) {
        const double x = 0.5 * kPi * std::fabs(xi);
        double v;
        if (x < 1e-4)
            v = 1.0 - x * x / 6.0 + 7.0 * x * x * x * x / 360.0;
        else
            v = x / std::sinh(x);
        return {-v / (kPi * kPi * kPi), 0.0};
    }

    const std::pair<int, double> key{n, std::fabs(xi)};
    {
        std::lock_guard<std::mutex> lock(psi_mutex);
        auto it = psi_cache.find(key);
        if (it != psi_cache.end()) return it->second;
    }
    const double im2 = I_m(n - 2, xi);
    const double im3 = (n == 3) ? I_m(0, xi) : I_m(n - 3, xi);
    const Complex val = i_pow(n) * (static_cast<double>(n - 1) / kTwoPiCubed)
                        * (im2 - 2.0 * (n - 2) * im3);
    {
        std::lock_guard<std::mutex> lock(psi_mutex);
        psi_cache.emplace(key, val);
    }
    return val;
}

KernelResult kernel_j_asymptotic(int j, Complex z, Complex w, int N) {
    if (N < 3 || N > 8) throw DomainError("kernel_j_asymptotic: N must be in [3, 8]");
    const Complex d = z - std::conj(w);
    const double xi = static_cast<double>(j) + 1.0;
    Complex sum{0.0, 0.0};
    Complex dpow = d * d;
    for (int n = 2; n <= N - 1; ++n) {
        sum += psi_n(n, xi) / dpow;
        dpow *= d;
    }
    constexpr double kSafety = 2.0;
    const double err = std::abs(psi_n(N, xi)) * kSafety / std::pow(std::abs(d), N);
    return {sum, err, Representation::Asymptotic, 0, N};
}

KernelResult kernel_j(int j, Complex z, Complex w, double tol) {
    return kernel_j(j, Separation(z, w), tol);
}

KernelResult kernel_j(int j, const Separation& lam, double tol) {
    if (lam.re() >= 0.2) return kernel_j_integral(j, lam, tol);
    return kernel_j_fourier(j, lam, tol);
}

Complex f_j(int j, const Separation& lam, double tol) {
    const auto k = kernel_j(j, lam, tol);
    const Complex l = lam.value();
    return -l * l * k.value;
}

}  // namespace wormk::hpk
