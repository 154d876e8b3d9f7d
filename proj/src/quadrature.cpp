#include "wormk/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <random>
#include <vector>

namespace wormk::quad {

namespace {

// Gauss-Kronrod 7-15 pair on [-1,1] (QUADPACK dqk15 constants).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Panel {
    double a, b;
    Complex value;
    double err;
};

// One GK15 evaluation; err is the |K15-G7| difference with QUADPACK's
// conservative rescaling.
Panel gk15(const Integrand& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);

    const Complex fc = f(c);
    Complex kronrod = fc * kWgk[7];
    Complex gauss = fc * kWg[3];
    double resabs = std::abs(fc) * kWgk[7];

    for (int i = 0; i < 7; ++i) {
        const double dx = h * kXgk[i];
        const Complex f1 = f(c - dx);
        const Complex f2 = f(c + dx);
        kronrod += (f1 + f2) * kWgk[i];
        resabs += (std::abs(f1) + std::abs(f2)) * kWgk[i];
        if (i % 2 == 1) gauss += (f1 + f2) * kWg[i / 2];
    }

    kronrod *= h;
    gauss *= h;
    resabs *= std::abs(h);

    double err = std::abs(kronrod - gauss);
    if (resabs > 0.0 && err > 0.0) {
        const double scaled = std::min(1.0, std::pow(200.0 * err / resabs, 1.5));
        err = std::min(err, resabs * scaled);
    }
    return Panel{a, b, kronrod, err};
}

struct PanelOrder {
    bool operator()(const Panel& p, const Panel& q) const {
        if (p.err != q.err) return p.err < q.err;  // largest error first
        return p.a > q.a;                          // deterministic tie-break
    }
};

QuadratureResult adaptive_core(const Integrand& f, const std::vector<double>& breakpoints,
                               const Options& opts) {
    std::priority_queue<Panel, std::vector<Panel>, PanelOrder> heap;
    Complex sum{0, 0};
    double errsum = 0.0;
    int evals = 0;
    for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
        Panel p = gk15(f, breakpoints[i], breakpoints[i + 1]);
        evals += 15;
        sum += p.value;
        errsum += p.err;
        heap.push(p);
    }

    std::vector<Panel> done;
    while (true) {
        const double target =
            std::max(opts.abs_tol, opts.rel_tol * std::abs(sum));
        if (errsum <= target) break;
        if (evals + 30 > opts.max_evals) {
            // budget exhausted
            std::vector<Panel> rest;
            while (!heap.empty()) { rest.push_back(heap.top()); heap.pop(); }
            rest.insert(rest.end(), done.begin(), done.end());
            std::sort(rest.begin(), rest.end(), [](const Panel& p, const Panel& q) { return p.a < q.a; });
            Complex v{0, 0};
            double e = 0;
            for (const auto& p : rest) { v += p.value; e += p.err; }
            if (opts.throw_on_budget)
                throw ConvergenceError("integrate_adaptive: node budget exhausted", v, e);
            return {v, e, evals};
        }
        Panel worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b) {
            // panel at machine resolution; freeze it
            done.push_back(worst);
            if (heap.empty()) break;
            continue;
        }
        Panel left = gk15(f, worst.a, mid);
        Panel right = gk15(f, mid, worst.b);
        evals += 30;
        sum += left.value + right.value - worst.value;
        errsum += left.err + right.err - worst.err;
        heap.push(left);
        heap.push(right);
    }

    std::vector<Panel> panels(done);
    while (!heap.empty()) { panels.push_back(heap.top()); heap.pop(); }
    std::sort(panels.begin(), panels.end(), [](const Panel& p, const Panel& q) { return p.a < q.a; });
    Complex v{0, 0};
    double e = 0;
    for (const auto& p : panels) { v += p.value; e += p.err; }
    return {v, e, evals};
}

}  // namespace

QuadratureResult integrate_adaptive(const Integrand& f, double a, double b, Options opts) {
    if (!(a < b)) throw DomainError("integrate_adaptive: requires a < b");
    if (!(opts.rel_tol > 0)) throw DomainError("integrate_adaptive: tol must be positive");
    return adaptive_core(f, {a, b}, opts);
}

QuadratureResult integrate_adaptive(const Integrand& f, const std::vector<double>& breakpoints,
                                    Options opts) {
    if (breakpoints.size() < 2) throw DomainError("integrate_adaptive: need at least two breakpoints");
    for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i)
        if (!(breakpoints[i] < breakpoints[i + 1]))
            throw DomainError("integrate_adaptive: breakpoints must be strictly increasing");
    if (!(opts.rel_tol > 0)) throw DomainError("integrate_adaptive: tol must be positive");
    return adaptive_core(f, breakpoints, opts);
}

QuadratureResult integrate_halfline(const Integrand& f, Options opts, HalflineMap map) {
    // Mapped integrand g(t) = f(xi(t)) * xi'(t) on a finite window found by
    // scanning for the peak and the points where |g| has dropped 40 nats.
    std::function<double(double)> xi_of, dxi_of;
    double tmin, tmax;
    if (map == HalflineMap::DoubleExponential) {
        xi_of = [](double t) { return std::exp(1.5707963267948966 * std::sinh(t)); };
        dxi_of = [xi_of](double t) { return 1.5707963267948966 * std::cosh(t) * xi_of(t); };
        tmin = -4.6;  // xi ~ 2e-34
        tmax = 4.6;   // xi ~ 5e33
    } else {
        xi_of = [](double t) { return t / (1.0 - t); };
        dxi_of = [](double t) { const double u = 1.0 - t; return 1.0 / (u * u); };
        tmin = 1e-14;
        tmax = 1.0 - 1e-14;
    }

    auto g = [&](double t) -> Complex {
        const double xi = xi_of(t);
        if (!(xi > 0.0) || !std::isfinite(xi)) return {0.0, 0.0};
        const Complex fv = f(xi);
        if (!std::isfinite(fv.real()) || !std::isfinite(fv.imag())) return {0.0, 0.0};
        return fv * dxi_of(t);
    };

    // coarse scan
    const int kScan = 160;
    double peak = 0.0;
    double tpeak = 0.5 * (tmin + tmax);
    std::vector<double> ts(kScan + 1), mags(kScan + 1);
    for (int i = 0; i <= kScan; ++i) {
        const double t = tmin + (tmax - tmin) * i / kScan;
        ts[i] = t;
        mags[i] = std::abs(g(t));
        if (mags[i] > peak) { peak = mags[i]; tpeak = t; }
    }
    if (peak == 0.0)
        return {{0.0, 0.0}, 0.0, kScan + 1};

    const double floor_mag = peak * 4.248354255291589e-18;  // e^{-40}
    double lo = tmin, hi = tmax;
    bool decayed_hi = false, decayed_lo = false;
    for (int i = 0; i <= kScan; ++i) {
        if (ts[i] >= tpeak) break;
        if (mags[i] <= floor_mag) { lo = ts[i]; decayed_lo = true; }
    }
    for (int i = kScan; i >= 0; --i) {
        if (ts[i] <= tpeak) break;
        if (mags[i] <= floor_mag) { hi = ts[i]; decayed_hi = true; }
    }
    if (map == HalflineMap::DoubleExponential) {
        // the DE weight itself guarantees double-exponential falloff toward
        // xi -> 0; treat the left end as decayed unless the scan says otherwise
        decayed_lo = decayed_lo || mags.front() <= floor_mag;
        decayed_hi = decayed_hi || mags.back() <= floor_mag;
    } else {
        decayed_lo = true;  // xi -> 0 end of the rational map is t -> 0, weight -> 1
        decayed_hi = decayed_hi || mags.back() <= floor_mag;
    }
    if (!decayed_hi)
        throw ConvergenceError(
            "integrate_halfline: integrand has not decayed below tol*peak by the mapped endpoint",
            {0.0, 0.0}, peak);
    (void)decayed_lo;

    QuadratureResult r = integrate_adaptive(g, lo, hi, opts);
    r.nodes_used += kScan + 1;
    return r;
}

QuadratureResult integrate_2d(const std::function<Complex(double, double)>& f,
                              const PlanarRegion& region, Mode2D mode, Options2D opts) {
    if (!(region.xmin < region.xmax) || !(region.ymin < region.ymax))
        throw DomainError("integrate_2d: degenerate bounding box");

    if (mode == Mode2D::MonteCarlo) {
        std::mt19937_64 rng(opts.seed);
        std::uniform_real_distribution<double> ux(region.xmin, region.xmax);
        std::uniform_real_distribution<double> uy(region.ymin, region.ymax);
        const long n = std::max<long>(opts.budget, 100);
        Complex sum{0, 0};
        double sumsq = 0.0;
        for (long i = 0; i < n; ++i) {
            const double x = ux(rng);
            const double y = uy(rng);
            Complex v{0, 0};
            if (!region.contains || region.contains(x, y)) v = f(x, y);
            sum += v;
            sumsq += std::norm(v);
        }
        const double area = (region.xmax - region.xmin) * (region.ymax - region.ymin);
        const Complex mean = sum / static_cast<double>(n);
        const double var = std::max(0.0, sumsq / n - std::norm(mean));
        return {mean * area, area * std::sqrt(var / n), static_cast<int>(std::min<long>(n, INT32_MAX))};
    }

    // tensor mode: adaptive in y of adaptive row integrals
    long used = 0;
    Options inner;
    inner.rel_tol = opts.rel_tol;
    inner.abs_tol = opts.abs_tol;
    inner.max_evals = static_cast<int>(std::min<long>(opts.budget, INT32_MAX));
    inner.throw_on_budget = false;

    double inner_err = 0.0;
    auto row = [&](double y) -> Complex {
        double xlo = region.xmin, xhi = region.xmax;
        if (region.row_interval) {
            if (!region.row_interval(y, xlo, xhi) || !(xlo < xhi)) return {0.0, 0.0};
        }
        auto fx = [&](double x) -> Complex {
            if (!region.row_interval && region.contains && !region.contains(x, y)) return {0.0, 0.0};
            return f(x, y);
        };
        QuadratureResult r = integrate_adaptive(fx, xlo, xhi, inner);
        used += r.nodes_used;
        inner_err = std::max(inner_err, r.err_est);
        if (used > opts.budget)
            throw ConvergenceError("integrate_2d: evaluation budget exhausted", r.value, r.err_est);
        return r.value;
    };

    Options outer = inner;
    QuadratureResult r = integrate_adaptive(row, region.ymin, region.ymax, outer);
    r.nodes_used = static_cast<int>(std::min<long>(used, INT32_MAX));
    r.err_est += inner_err * (region.ymax - region.ymin);
    return r;
}

}  // namespace wormk::quad
