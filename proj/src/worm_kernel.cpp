#include "wormk/worm_kernel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "wormk/halfplane_kernel.hpp"

namespace wormk::wk {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kTermCap = 400;

// One series term K_{k-1}(lambda) * zeta^k assembled in log space:
// exponents of the kernel scale and the geometric factor combine before
// exponentiation.
struct TermEval {
    Complex value;
    double err;
};

TermEval series_term(int k, const Separation& lam, Complex log_zeta, double tol) {
    const auto sk = hpk::kernel_j_fourier_scaled(k - 1, lam, tol);
    const Complex expo = static_cast<double>(k) * log_zeta + sk.log_scale;
    const Complex factor = std::exp(expo);
    return {sk.mantissa * factor, sk.err_mantissa * std::abs(factor)};
}

SeriesResult sum_series(const Separation& lam, Complex log_zeta, Complex prefactor, double tol,
                        int min_half_window) {
    const double b = hpk::b_lambda(lam);
    const double ratio_ceiling = std::exp(-b + std::fabs(log_zeta.real()));

    // term tolerance: the quadrature error of each K_j must sit below the
    // requested series tolerance
    const double term_tol = std::max(1e-12, 0.03 * tol);

    std::vector<double> mag_pos, mag_neg;  // |t_k| for k > 0 / k < 0
    Complex sum{0.0, 0.0};
    double quad_err = 0.0;
    int terms = 0;
    int kmax_used = 0, kmin_used = 0;

    auto add = [&](int k) {
        const TermEval t = series_term(k, lam, log_zeta, term_tol);
        sum += t.value;
        quad_err += t.err;
        ++terms;
        if (k > 0) { mag_pos.push_back(std::abs(t.value)); kmax_used = k; }
        else if (k < 0) { mag_neg.push_back(std::abs(t.value)); kmin_used = k; }
    };

    add(0);
    // direction-wise geometric tail estimate from the last three ratios
    auto tail_of = [](const std::vector<double>& mags) -> double {
        const std::size_t n = mags.size();
        if (n < 4) return std::numeric_limits<double>::infinity();
        const double last = mags[n - 1];
        if (last == 0.0) return 0.0;
        double rho = 0.0;
        for (std::size_t i = n - 3; i < n; ++i) {
            if (mags[i - 1] == 0.0) return 0.0;
            rho = std::max(rho, mags[i] / mags[i - 1]);
        }
        if (!(rho < 0.999)) return std::numeric_limits<double>::infinity();
        return last * rho / (1.0 - rho);
    };

    double tail = std::numeric_limits<double>::infinity();
    for (int k = 1;; ++k) {
        add(k);
        add(-k);
        if (terms >= kTermCap)
            throw ConvergenceError(
                "kernel series: term cap reached before certified truncation (pair near singular set)",
                sum * prefactor, std::abs(prefactor) * (tail_of(mag_pos) + tail_of(mag_neg)));
        if (k < std::max(8, min_half_window)) continue;
        const double tp = tail_of(mag_pos);
        const double tn = tail_of(mag_neg);
        tail = tp + tn;
        if (std::isfinite(tail) && tail < tol * std::abs(sum)) break;
    }

    SeriesResult r;
    r.value = sum * prefactor;
    r.err_est = std::abs(prefactor) * (tail + quad_err);
    r.diag.j_min = kmin_used - 1;
    r.diag.j_max = kmax_used - 1;
    r.diag.tail_bound = std::abs(prefactor) * tail;
    r.diag.terms = terms;
    r.diag.ratio_ceiling = ratio_ceiling;
    return r;
}

}  // namespace

SeriesResult kernel_unwound(const geom::UPoint& z, const geom::UPoint& w, double tol,
                            int min_half_window) {
    if (!(tol > 0)) throw DomainError("kernel_unwound: tol must be positive");
    if (!geom::contains_unwound(z) || !geom::contains_unwound(w))
        throw DomainError("kernel_unwound: points must be interior to the unwound domain");

    const Separation lam(z.w1, w.w1);
    const Complex zw2 = z.w2 * std::conj(w.w2);
    // zeta = e^{-(z1 + conj w1)/2} z2 conj(w2), kept in log-polar form
    const Complex log_zeta = -0.5 * (z.w1 + std::conj(w.w1)) + std::log(zw2);
    return sum_series(lam, log_zeta, 1.0 / zw2, tol, min_half_window);
}

SeriesResult kernel_worm(const geom::WormPoint& z, const geom::WormPoint& w, double tol,
                         int min_half_window) {
    if (!(tol > 0)) throw DomainError("kernel_worm: tol must be positive");
    if (!geom::contains_worm(z) || !geom::contains_worm(w))
        throw DomainError("kernel_worm: points must be interior to the worm domain");

    const geom::Frame fz = geom::frame(z);
    const geom::Frame fw = geom::frame(w);
    const Separation lam(fz.ell, fw.ell);
    // zeta = E_{i/2}(z) z2 conj(E_{i/2}(w) w2); log E_{i/2} = i L / 2
    const Complex log_zeta = Complex(0.0, 0.5) * fz.L + std::conj(Complex(0.0, 0.5) * fw.L)
                             + std::log(z.z2 * std::conj(w.z2));
    const Complex prefactor = 1.0 / (z.z1 * std::conj(w.z1) * z.z2 * std::conj(w.z2));
    return sum_series(lam, log_zeta, prefactor, tol, min_half_window);
}

Complex g_boundary_series(Complex zeta, double tol) {
    if (!(tol > 0)) throw DomainError("g_boundary: tol must be positive");
    const double r = std::abs(zeta);
    const double rmax = std::max(r, 1.0 / r);
    const double margin = std::exp(-kPi / 2.0) * rmax;
    if (!(margin < 0.995))
        throw DomainError("g_boundary_series: zeta too close to the annulus boundary");

    Complex sum{1.0, 0.0};  // k = 0 term
    Complex zp{1.0, 0.0}, zm{1.0, 0.0};
    double tail = 0.0;
    for (int k = 1; k < 2000; ++k) {
        zp *= zeta;
        zm /= zeta;
        const double c = (k * kPi / 2.0) / std::sinh(k * kPi / 2.0);
        const Complex term = c * (zp + zm);
        sum += term;
        if (k >= 4) {
            // coefficient ratio bound: c_{k+1}/c_k <= ((k+1)/k) e^{-pi/2}/(1 - e^{-k pi})
            const double rho = (static_cast<double>(k + 1) / k) * margin / (1.0 - std::exp(-k * kPi));
            if (rho < 1.0) {
                tail = std::abs(term) * rho / (1.0 - rho);
                if (tail < tol * std::abs(sum)) break;
            }
        }
    }
    return sum / (kPi * kPi * kPi);
}

Complex g_boundary_split(Complex zeta) {
    const double r = std::abs(zeta);
    if (!(r > std::exp(-kPi / 2.0)) || !(r < std::exp(kPi / 2.0)))
        throw DomainError("g_boundary_split: zeta outside the open annulus");
    auto S = [](Complex x) -> Complex {
        Complex total{0.0, 0.0};
        for (int m = 0; m < 40; ++m) {
            const double q = std::exp(-(m + 0.5) * kPi);
            const Complex d = 1.0 - q * x;
            if (std::abs(d) < 1e-12)
                throw DomainError("g_boundary_split: zeta at a pole of the singular part");
            const Complex term = q * x / (d * d);
            total += term;
            if (std::abs(term) < 1e-18 * (1.0 + std::abs(total))) break;
        }
        return total;
    };
    return (1.0 + kPi * S(zeta) + kPi * S(1.0 / zeta)) / (kPi * kPi * kPi);
}

Complex g_boundary(Complex zeta, double tol) {
    const double r = std::abs(zeta);
    const double margin = std::exp(-kPi / 2.0) * std::max(r, 1.0 / r);
    if (margin > 0.7) return g_boundary_split(zeta);
    return g_boundary_series(zeta, tol);
}

Complex normalized_kernel_unwound(const geom::UPoint& z, const geom::UPoint& w, double tol) {
    const auto k = kernel_unwound(z, w, tol);
    const Complex d = z.w1 - std::conj(w.w1);
    return z.w2 * std::conj(w.w2) * d * d * k.value;
}

Complex normalized_kernel_worm(const geom::WormPoint& z, const geom::WormPoint& w, double tol) {
    const auto k = kernel_worm(z, w, tol);
    const Complex d = geom::frame(z).ell - std::conj(geom::frame(w).ell);
    return z.z1 * std::conj(w.z1) * z.z2 * std::conj(w.z2) * d * d * k.value;
}

}  // namespace wormk::wk
