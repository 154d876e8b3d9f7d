#include "wormk/verification.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "wormk/halfplane_kernel.hpp"
#include "wormk/quadrature.hpp"
#include "wormk/weights.hpp"

namespace wormk::verify {

namespace {
constexpr double kPi = std::numbers::pi;
}

Complex RationalSample::operator()(Complex zeta) const {
    return std::pow(zeta + Complex(0.0, a), -b);
}

double reproducing_error(int j, const RationalSample& f, Complex w, long budget) {
    if (!(w.imag() > 0.0)) throw DomainError("reproducing_error: w must be interior");
    if (!(f.a > 0.0) || f.b < 2) throw DomainError("reproducing_error: invalid rational sample");

    const Complex fw = f(w);
    if (std::abs(fw) == 0.0) return 0.0;

    // Truncation box: integrand decays like |zeta|^{-b-2}; radius set so the
    // crude tail bound alpha_sup * pi * R^{-b} / b sits beneath the target.
    const double R = std::max(24.0, 6.0 * (std::abs(w) + f.a + 1.0));

    const double ktol = 3e-7;
    auto integrand = [&](double x, double y) -> Complex {
        const Complex zeta(x, y);
        const auto K = hpk::kernel_j(j, zeta, w, ktol);
        return f(zeta) * std::conj(K.value) * weights::alpha(j, y);
    };

    quad::PlanarRegion region;
    region.xmin = -R;
    region.xmax = R;
    region.ymin = 1e-12;
    region.ymax = R;
    region.contains = nullptr;
    region.row_interval = nullptr;

    quad::Options2D opts;
    opts.rel_tol = 2e-5;
    opts.abs_tol = 1e-12;
    opts.budget = budget;

    const auto r = quad::integrate_2d(integrand, region, quad::Mode2D::Tensor, opts);
    return std::abs(r.value - fw) / std::abs(fw);
}

namespace {

// geometric breakpoints from -S up to sigma for integrands varying on log scale
std::vector<double> log_breakpoints(double S, double sigma) {
    std::vector<double> pts{sigma};
    double p = std::max(1.0, std::fabs(sigma) + 1.0);
    while (p < S) {
        pts.push_back(-p);
        p *= 3.1622776601683795;  // half-decade steps
    }
    pts.push_back(-S);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

double norm_partial(double a, double b, double c, int j, double m, double mu, double S,
                    double tol) {
    quad::Options inner;
    inner.rel_tol = tol;
    inner.abs_tol = 1e-14;
    inner.max_evals = 200000;
    inner.throw_on_budget = false;

    const bool mu_finite = std::isfinite(mu);
    const double T = S;  // joint cutoff for the t-direction when mu = inf

    auto s_integral = [&](double t, double sigma) -> double {
        if (sigma <= -S) return 0.0;
        auto fs = [&](double s) -> Complex {
            const double d = (s - c) * (s - c) + t * t;
            return {std::exp(2.0 * (a + 1.0) * s) * std::pow(d, -m), 0.0};
        };
        const auto r = quad::integrate_adaptive(fs, log_breakpoints(S, sigma), inner);
        return r.value.real();
    };

    auto t_integral = [&](double theta, double sigma) -> double {
        auto ft = [&](double t) -> Complex {
            return {std::exp(t * (j + 1.0 - 2.0 * b)) * s_integral(t, sigma), 0.0};
        };
        double lo = mu_finite ? theta - mu : -T;
        double hi = mu_finite ? theta + mu : T;
        std::vector<double> pts{lo};
        if (lo < 0.0 && hi > 0.0) pts.push_back(0.0);
        if (!mu_finite) {
            // log-spaced panels for the algebraic |t|^{-2m} falloff
            for (double p = 10.0; p < T; p *= 10.0) {
                pts.push_back(-p);
                pts.push_back(p);
            }
        }
        pts.push_back(hi);
        std::sort(pts.begin(), pts.end());
        pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
        const auto r = quad::integrate_adaptive(ft, pts, inner);
        return r.value.real();
    };

    auto f_theta = [&](double theta) -> Complex {
        const double sigma = std::log(2.0 * std::cos(theta));
        return {std::exp(-theta * (j + 1.0)) * t_integral(theta, sigma), 0.0};
    };
    const auto r = quad::integrate_adaptive(f_theta, 0.0, kPi / 2.0 - 1e-10, inner);
    return kPi * r.value.real();
}

}  // namespace

NormResult sample_norm(Complex eta, double c, int j, double m, double mu, double tol) {
    if (!(c > std::numbers::ln2)) throw DomainError("sample_norm: requires c > log 2");
    if (!(mu > 0.0)) throw DomainError("sample_norm: requires mu > 0");
    if (!(tol > 0.0)) throw DomainError("sample_norm: tol must be positive");

    const double a = eta.real();
    const double b = eta.imag();

    NormResult out;
    double prev = 0.0;
    bool monotone = true;
    // nested cutoffs: s >= -S (and |t| <= S when mu = inf)
    for (double S = 10.0; S <= 1.1e12; S *= 100.0) {
        double p;
        try {
            p = norm_partial(a, b, c, j, m, mu, S, tol);
        } catch (const ConvergenceError&) {
            out.cls = NormClass::Divergent;  // overflow in a rung is growth evidence
            return out;
        }
        if (!std::isfinite(p)) {
            out.cls = NormClass::Divergent;
            return out;
        }
        if (!out.partials.empty() && p < prev * (1.0 - 1e-6)) monotone = false;
        out.partials.push_back(p);
        if (out.partials.size() >= 2) {
            const double ratio = prev != 0.0 ? p / prev : std::numeric_limits<double>::infinity();
            const double first = out.partials.front();
            if (monotone && first > 0.0 && p / first > 10.0 && ratio > 1.2) {
                out.cls = NormClass::Divergent;
                out.value = p;
                return out;
            }
            if (ratio - 1.0 < 1e-3 && ratio >= 1.0 - 1e-6) {
                out.cls = NormClass::Finite;
                out.value = p;
                out.err = std::fabs(p - prev);
                return out;
            }
        }
        prev = p;
    }
    out.cls = NormClass::Inconclusive;
    out.value = prev;
    return out;
}

std::vector<std::pair<double, double>> divergence_probe(Probe kind, double exponent,
                                                        const geom::WormPoint& w,
                                                        const std::vector<double>& delta_ladder,
                                                        ProbeOptions opts) {
    const double aw1 = std::abs(w.z1);
    if (!(aw1 > 0.0) || !(aw1 < 2.0))
        throw DomainError("divergence_probe: need 0 < |w1| < 2");
    double p = 2.0, s = 0.0;
    switch (kind) {
        case Probe::Lp:
            p = exponent;
            if (!(p > 2.0)) throw DomainError("divergence_probe: Lp needs p > 2");
            break;
        case Probe::L2:
            p = 2.0;
            break;
        case Probe::Sobolev:
            s = exponent;
            if (!(s > 0.0) || !(s < 0.5)) throw DomainError("divergence_probe: Sobolev needs s in (0, 1/2)");
            break;
    }

    const double c1 = std::log(aw1 / 2.0);
    const double c2 = (kPi + 2.0 * opts.mu) * (kPi + 2.0 * opts.mu);
    const double cost = 2.0 * std::cos(opts.t);

    auto integrand = [&](double r) -> Complex {
        const double lg = std::log(r / 2.0) + c1;
        const double base = lg * lg + c2;
        double v;
        if (kind == Probe::Sobolev)
            v = 1.0 / (std::pow(std::fabs(r - cost), s) * std::pow(r, 1.0 + s) * base * base);
        else
            v = 1.0 / (std::pow(r, p - 1.0) * std::pow(base, p));
        return {v, 0.0};
    };

    quad::Options qopts;
    qopts.rel_tol = 1e-9;
    qopts.abs_tol = 1e-14;

    std::vector<std::pair<double, double>> out;
    for (double delta : delta_ladder) {
        if (!(delta > 0.0) || !(delta < opts.eps))
            throw DomainError("divergence_probe: ladder entries must lie in (0, eps)");
        std::vector<double> pts{delta};
        for (double q = delta * 10.0; q < opts.eps; q *= 10.0) pts.push_back(q);
        pts.push_back(opts.eps);
        const auto r = quad::integrate_adaptive(integrand, pts, qopts);
        out.emplace_back(delta, r.value.real());
    }
    return out;
}

DecayFit decay_estimate(Complex z1, Complex w1, int j_max) {
    if (j_max < 8) throw DomainError("decay_estimate: j_max too small");
    const Separation lam(z1, w1);
    if (!lam.interior()) throw DomainError("decay_estimate: pair must be interior");

    DecayFit fit;
    fit.b = hpk::b_lambda(lam);

    auto run = [&](int sign) -> std::pair<double, int> {
        std::vector<double> xs, ys;
        for (int k = j_max / 2; k <= j_max; ++k) {
            const int jj = sign > 0 ? k - 1 : -k - 1;  // j+1 = +k or -k
            const auto K = hpk::kernel_j_fourier(jj, lam, 1e-10);
            const double mag = std::abs(K.value);
            if (!(mag > 1e-280)) break;  // underflow guard
            xs.push_back(k);
            ys.push_back(std::log(mag));
        }
        if (xs.size() < 3) return {0.0, static_cast<int>(xs.size())};
        // least squares slope
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        const double n = static_cast<double>(xs.size());
        for (std::size_t i = 0; i < xs.size(); ++i) {
            sx += xs[i];
            sy += ys[i];
            sxx += xs[i] * xs[i];
            sxy += xs[i] * ys[i];
        }
        return {(n * sxy - sx * sy) / (n * sxx - sx * sx), static_cast<int>(xs.size())};
    };

    auto [rp, np] = run(+1);
    auto [rn, nn] = run(-1);
    fit.rate_pos = rp;
    fit.rate_neg = rn;
    fit.points_pos = np;
    fit.points_neg = nn;
    return fit;
}

}  // namespace wormk::verify
