#pragma once
// Adaptive quadrature on finite and semi-infinite intervals plus a bracketed
// Brent root finder. Each panel is evaluated with an embedded 7/15-point
// Gauss-Legendre pair; the panel error is their difference. Panels are split
// worst-first and summed in a fixed order, so results are bit-stable.

#include <array>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace gravtime::quad {

struct IntegralResult {
    double value = 0.0;
    double est_error = 0.0;
    long evaluations = 0;
};

struct QuadratureError : std::runtime_error {
    IntegralResult partial;
    QuadratureError(const std::string& msg, IntegralResult p)
        : std::runtime_error(msg), partial(p) {}
};

namespace detail {

// Gauss-Legendre nodes/weights on [-1, 1], Newton iteration on P_n.
template <int N>
struct GaussRule {
    std::array<double, N> x{}, w{};

    static const GaussRule& get() {
        static const GaussRule rule = make();
        return rule;
    }

  private:
    static GaussRule make() {
        GaussRule r;
        const long double pi = 3.14159265358979323846264338327950288L;
        for (int i = 0; i < (N + 1) / 2; ++i) {
            long double x = cosl(pi * (i + 0.75L) / (N + 0.5L));
            long double dp = 0.0L;
            for (int it = 0; it < 100; ++it) {
                long double p0 = 1.0L, p1 = x;
                for (int k = 2; k <= N; ++k) {
                    long double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                dp = N * (x * p1 - p0) / (x * x - 1.0L);
                long double dx = p1 / dp;
                x -= dx;
                if (fabsl(dx) < 1e-19L) break;
            }
            long double weight = 2.0L / ((1.0L - x * x) * dp * dp);
            r.x[i] = static_cast<double>(-x);
            r.w[i] = static_cast<double>(weight);
            r.x[N - 1 - i] = static_cast<double>(x);
            r.w[N - 1 - i] = static_cast<double>(weight);
        }
        return r;
    }
};

struct Panel {
    double a, b;
    double value;  // 15-point estimate
    double err;    // |15-point - 7-point|
};

template <class F>
Panel eval_panel(F& f, double a, double b) {
    const auto& g7 = GaussRule<7>::get();
    const auto& g15 = GaussRule<15>::get();
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    long double s7 = 0.0L, s15 = 0.0L;
    for (int i = 0; i < 7; ++i) s7 += g7.w[i] * f(mid + half * g7.x[i]);
    for (int i = 0; i < 15; ++i) s15 += g15.w[i] * f(mid + half * g15.x[i]);
    Panel p;
    p.a = a;
    p.b = b;
    p.value = static_cast<double>(s15 * half);
    p.err = static_cast<double>(fabsl((s15 - s7) * half));
    return p;
}

}  // namespace detail

// |value - true| <= rel_tol * |true| for integrands smooth on [a, b];
// throws QuadratureError with the partial result if the panel budget is
// exhausted before the error estimate drops below tolerance.
template <class F>
IntegralResult integrate(F&& f, double a, double b, double rel_tol = 1e-10) {
    if (!(rel_tol >= 1e-13)) throw std::invalid_argument("rel_tol must be >= 1e-13");
    if (a == b) return {0.0, 0.0, 0};
    if (a > b) {
        IntegralResult r = integrate(f, b, a, rel_tol);
        r.value = -r.value;
        return r;
    }

    constexpr std::size_t max_panels = 20000;
    std::vector<detail::Panel> panels;
    panels.reserve(256);
    panels.push_back(detail::eval_panel(f, a, b));
    long evals = 22;

    auto totals = [&panels] {
        long double v = 0.0L, e = 0.0L, scale = 0.0L;
        for (const auto& p : panels) {
            v += p.value;
            e += p.err;
            scale += std::fabs(p.value);
        }
        return std::array<double, 3>{static_cast<double>(v), static_cast<double>(e),
                                     static_cast<double>(scale)};
    };

    while (true) {
        auto [value, err, scale] = totals();
        const double goal =
            std::max(rel_tol * std::fabs(value), 16.0 * 2.2204460492503131e-16 * scale);
        if (err <= goal) return {value, err, evals};
        if (panels.size() >= max_panels)
            throw QuadratureError("quadrature did not converge", {value, err, evals});

        std::size_t worst = 0;
        for (std::size_t i = 1; i < panels.size(); ++i)
            if (panels[i].err > panels[worst].err) worst = i;
        const double pa = panels[worst].a, pb = panels[worst].b;
        const double mid = 0.5 * (pa + pb);
        if (!(mid > pa && mid < pb))
            throw QuadratureError("panel width at rounding limit", {value, err, evals});
        panels[worst] = detail::eval_panel(f, pa, mid);
        panels.push_back(detail::eval_panel(f, mid, pb));
        evals += 44;
    }
}

// Integral over [a, inf) of an integrand eventually bounded by
// C exp(-2 (z - a) / decay_scale). The truncation point is pushed out until
// the tail bound |f| * decay_scale / 2 falls below rel_tol * |partial|;
// failure of the probes to decay raises QuadratureError.
template <class F>
IntegralResult integrate_semi_infinite(F&& f, double a, double decay_scale,
                                       double rel_tol = 1e-10) {
    if (!(decay_scale > 0.0)) throw std::invalid_argument("decay_scale must be positive");

    auto probe = [&](double x) {
        return std::max({std::fabs(f(x - 0.31 * decay_scale)),
                         std::fabs(f(x - 0.11 * decay_scale)), std::fabs(f(x))});
    };

    double x_hi = a + 8.0 * decay_scale;
    IntegralResult acc = integrate(f, a, x_hi, rel_tol);
    double prev = probe(x_hi);
    acc.evaluations += 3;
    int violations = 0;

    while (true) {
        const double tail_bound = prev * decay_scale / 2.0;
        if (tail_bound <= rel_tol * std::max(std::fabs(acc.value), 1e-300)) break;
        if (x_hi - a > 600.0 * decay_scale)
            throw QuadratureError("semi-infinite tail converges too slowly", acc);

        const double x_next = x_hi + 4.0 * decay_scale;
        IntegralResult seg = integrate(f, x_hi, x_next, rel_tol);
        acc.value += seg.value;
        acc.est_error += seg.est_error;
        acc.evaluations += seg.evaluations + 3;

        const double cur = probe(x_next);
        if (cur >= prev) {
            if (++violations >= 2)
                throw QuadratureError("integrand does not decay on the tail", acc);
        } else {
            violations = 0;
        }
        prev = cur;
        x_hi = x_next;
    }
    acc.est_error += prev * decay_scale / 2.0;
    return acc;
}

// Brent's method on a sign-changing bracket; returns the abscissa once the
// bracket width shrinks below tol. Deterministic for fixed inputs.
template <class F>
double find_root(F&& f, double lo, double hi, double tol = 1e-13) {
    if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");
    double a = lo, b = hi;
    double fa = f(a), fb = f(b);
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if (!(fa * fb < 0.0)) throw std::invalid_argument("find_root: no sign change in bracket");

    double c = a, fc = fa;
    double d = b - a, e = d;
    for (int iter = 0; iter < 200; ++iter) {
        if (std::fabs(fc) < std::fabs(fb)) {
            a = b;
            b = c;
            c = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }
        const double tol1 = 2.0 * 2.2204460492503131e-16 * std::fabs(b) + 0.5 * tol;
        const double xm = 0.5 * (c - b);
        if (std::fabs(xm) <= tol1 || fb == 0.0) return b;

        if (std::fabs(e) >= tol1 && std::fabs(fa) > std::fabs(fb)) {
            double p, q, r;
            const double s = fb / fa;
            if (a == c) {
                p = 2.0 * xm * s;
                q = 1.0 - s;
            } else {
                q = fa / fc;
                r = fb / fc;
                p = s * (2.0 * xm * q * (q - r) - (b - a) * (r - 1.0));
                q = (q - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if (p > 0.0) q = -q;
            p = std::fabs(p);
            if (2.0 * p < std::min(3.0 * xm * q - std::fabs(tol1 * q), std::fabs(e * q))) {
                e = d;
                d = p / q;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }
        a = b;
        fa = fb;
        b += (std::fabs(d) > tol1) ? d : (xm > 0.0 ? tol1 : -tol1);
        fb = f(b);
        if ((fb > 0.0) == (fc > 0.0)) {
            c = a;
            fc = fa;
            d = b - a;
            e = d;
        }
    }
    return b;
}

}  // namespace gravtime::quad
