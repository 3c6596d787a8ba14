#pragma once
// Mono-energetic stationary-state scattering off V(z) = m g z: piecewise
// Bessel wavefunctions, the incident/reflected and penetrating/withdrawing
// undercurrent split, closed-form and quadrature rise/penetrate/withdraw/fall
// times, the dwell time, and the short/high-flight limits.
//
// In the forbidden region the real part of every combination is evaluated
// through K_{1/3}, never as I_{-1/3} - I_{1/3}, which loses all digits once
// zeta is a few units.

#include <cmath>
#include <complex>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gravtime/model.hpp"
#include "gravtime/quadrature.hpp"
#include "gravtime/specfun.hpp"

namespace gravtime::stationary {

struct WaveValue {
    std::complex<double> psi;      // 1/sqrt(m)
    std::complex<double> dpsi_dz;  // 1/(m sqrt(m))
};

struct CurrentSet {
    double j_i, j_r, j_p, j_w;  // 1/s
};

struct TimeBreakdown {
    double rise = 0.0, penetrate = 0.0, withdraw = 0.0, fall = 0.0;
    double total = 0.0;
    double cst = 0.0;
    std::optional<double> ratio;  // total/cst, absent for zero flight
};

enum class Method { closed, quadrature };

namespace detail {

// zeta^{1/3} J_{+-1/3}, zeta^{2/3} J_{+-2/3} and the I/K analogues; the
// negative orders have finite zeta -> 0 limits which are supplied explicitly.
inline const double lim_m13 = std::cbrt(2.0) / specfun::gamma_two_thirds;
inline const double lim_m23 = std::cbrt(4.0) / specfun::gamma_one_third;

inline double jp13(double zt) { return zt == 0.0 ? 0.0 : std::cbrt(zt) * specfun::bessel_j_third(+1, zt); }
inline double jm13(double zt) { return zt == 0.0 ? lim_m13 : std::cbrt(zt) * specfun::bessel_j_third(-1, zt); }
inline double jp23(double zt) { return zt == 0.0 ? 0.0 : std::cbrt(zt * zt) * specfun::bessel_j_two_thirds(+1, zt); }
inline double jm23(double zt) { return zt == 0.0 ? lim_m23 : std::cbrt(zt * zt) * specfun::bessel_j_two_thirds(-1, zt); }

inline double ip13(double zt) { return zt == 0.0 ? 0.0 : std::cbrt(zt) * specfun::bessel_i_third(+1, zt); }
inline double im13(double zt) { return zt == 0.0 ? lim_m13 : std::cbrt(zt) * specfun::bessel_i_third(-1, zt); }
inline double ip23(double zt) { return zt == 0.0 ? 0.0 : std::cbrt(zt * zt) * specfun::bessel_i_two_thirds(+1, zt); }
inline double im23(double zt) { return zt == 0.0 ? lim_m23 : std::cbrt(zt * zt) * specfun::bessel_i_two_thirds(-1, zt); }

// zeta^{1/3} (I_{-1/3} - I_{1/3}) = (sqrt(3)/pi) zeta^{1/3} K_{1/3}(zeta)
inline double kdiff13(double zt) {
    if (zt == 0.0) return lim_m13;
    return std::sqrt(3.0) / specfun::pi * std::cbrt(zt) * specfun::bessel_k_third(zt);
}

// zeta^{2/3} (I_{2/3} - I_{-2/3}) = -(sqrt(3)/pi) zeta^{2/3} K_{2/3}(zeta)
inline double kdiff23(double zt) {
    if (zt == 0.0) return -lim_m23;
    return -std::sqrt(3.0) / specfun::pi * std::cbrt(zt * zt) * specfun::bessel_k_two_thirds(zt);
}

inline const std::complex<double> phase_mi3 = std::polar(1.0, -specfun::pi / 3.0);  // e^{-i pi/3}
inline const std::complex<double> phase_pi3 = std::polar(1.0, +specfun::pi / 3.0);  // e^{+i pi/3}

// d/dz of a*zeta^{1/3}J_{1/3} + b*zeta^{1/3}J_{-1/3} in the allowed region
// is -(3/2)^{1/3}/L_q * (a*jm23 - b*jp23); finite at the turning point.
inline std::complex<double> allowed_deriv(std::complex<double> a, std::complex<double> b,
                                          double zt, double L_q) {
    return -std::cbrt(1.5) / L_q * (a * jm23(zt) - b * jp23(zt));
}

}  // namespace detail

// Closed-form undercurrent magnitude (hbar / (pi m L_q)) (3/2)^{4/3} |N|^2.
inline double undercurrent_magnitude(const Scenario& sc, double norm = 1.0) {
    const double L_q = scales(sc).L_q;
    return sc.hbar / (specfun::pi * sc.particle.mass_kg * L_q) * std::pow(1.5, 4.0 / 3.0) *
           norm * norm;
}

inline CurrentSet undercurrents(const Scenario& sc, double norm = 1.0) {
    const double j = undercurrent_magnitude(sc, norm);
    return {j, -j, j, -j};
}

// Probability current (hbar/m) Im(psi* dpsi/dz) of a wave value.
inline double current(const WaveValue& wv, double mass, double hbar) {
    return hbar / mass * std::imag(std::conj(wv.psi) * wv.dpsi_dz);
}

// psi_a = N zeta^{1/3} (J_{1/3} + J_{-1/3}), purely real; z <= z_cap.
inline WaveValue psi_allowed(double z, const Scenario& sc, double norm = 1.0) {
    if (!(z <= sc.z_cap)) throw std::invalid_argument("psi_allowed: z must be <= z_cap");
    const double zt = zeta(z, sc);
    const double L_q = scales(sc).L_q;
    WaveValue wv;
    wv.psi = norm * (detail::jp13(zt) + detail::jm13(zt));
    wv.dpsi_dz = norm * detail::allowed_deriv(1.0, 1.0, zt, L_q);
    return wv;
}

// psi_f = N zeta^{1/3} (I_{-1/3} - I_{1/3}), purely real, evanescent; z >= z_cap.
inline WaveValue psi_forbidden(double z, const Scenario& sc, double norm = 1.0) {
    if (!(z >= sc.z_cap)) throw std::invalid_argument("psi_forbidden: z must be >= z_cap");
    const double zt = zeta(z, sc);
    const double L_q = scales(sc).L_q;
    WaveValue wv;
    wv.psi = norm * detail::kdiff13(zt);
    wv.dpsi_dz = norm * std::cbrt(1.5) / L_q * detail::kdiff23(zt);
    return wv;
}

// psi_a = psi_i + psi_r with psi_i = N zeta^{1/3} (e^{-i pi/3} J_{1/3} +
// e^{+i pi/3} J_{-1/3}) carrying +j_i and psi_r its reflection carrying -j_i.
inline std::pair<WaveValue, WaveValue> split_allowed(double z, const Scenario& sc,
                                                     double norm = 1.0) {
    if (!(z <= sc.z_cap)) throw std::invalid_argument("split_allowed: z must be <= z_cap");
    const double zt = zeta(z, sc);
    const double L_q = scales(sc).L_q;
    const double p13 = detail::jp13(zt), m13 = detail::jm13(zt);

    WaveValue inc, refl;
    inc.psi = norm * (detail::phase_mi3 * p13 + detail::phase_pi3 * m13);
    inc.dpsi_dz = norm * detail::allowed_deriv(detail::phase_mi3, detail::phase_pi3, zt, L_q);
    const std::complex<double> ar = 1.0 - detail::phase_mi3;
    const std::complex<double> br = 1.0 - detail::phase_pi3;
    refl.psi = norm * (ar * p13 + br * m13);
    refl.dpsi_dz = norm * detail::allowed_deriv(ar, br, zt, L_q);
    return {inc, refl};
}

// psi_f = psi_p + psi_w; psi_p = N i zeta^{1/3} (e^{i pi/6} I_{1/3} +
// e^{-i pi/6} I_{-1/3}) carries +j_p, psi_w the remainder carries -j_p.
// Both share the real part psi_f / 2 (K-stable) and opposite imaginary parts
// proportional to the I sum.
inline std::pair<WaveValue, WaveValue> split_forbidden(double z, const Scenario& sc,
                                                       double norm = 1.0) {
    if (!(z >= sc.z_cap)) throw std::invalid_argument("split_forbidden: z must be >= z_cap");
    const double zt = zeta(z, sc);
    const double L_q = scales(sc).L_q;
    const double half_f = 0.5 * detail::kdiff13(zt);
    const double half_f_d = std::cbrt(1.5) / L_q * 0.5 * detail::kdiff23(zt);
    const double sum_im = (std::sqrt(3.0) / 2.0) * (detail::ip13(zt) + detail::im13(zt));
    const double sum_im_d =
        std::cbrt(1.5) / L_q * (std::sqrt(3.0) / 2.0) * (detail::im23(zt) + detail::ip23(zt));

    WaveValue pen, wd;
    pen.psi = norm * std::complex<double>(half_f, sum_im);
    pen.dpsi_dz = norm * std::complex<double>(half_f_d, sum_im_d);
    wd.psi = norm * std::complex<double>(half_f, -sum_im);
    wd.dpsi_dz = norm * std::complex<double>(half_f_d, -sum_im_d);
    return {pen, wd};
}

namespace detail {

inline double rise_closed(const Scenario& sc) {
    const double beta = dimensionless(sc).beta_q;
    const double tq = scales(sc).T_q;
    double ai, aip;
    specfun::airy_ai_pair(-beta, ai, aip);
    const double denom = std::pow(std::cbrt(3.0) * specfun::gamma_one_third, 2.0);
    return 2.0 * specfun::pi * tq * (beta * ai * ai + aip * aip) -
           2.0 * specfun::pi * tq / denom;
}

inline double penetrate_closed(const Scenario& sc) {
    const double tq = scales(sc).T_q;
    const double denom = std::pow(std::cbrt(3.0) * specfun::gamma_one_third, 2.0);
    return 2.0 * specfun::pi * tq / denom;
}

inline double rise_quadrature(const Scenario& sc, double rel_tol, double norm) {
    const double j_i = undercurrent_magnitude(sc, norm);
    auto f = [&](double z) {
        const auto wv = psi_allowed(z, sc, norm);
        return std::norm(wv.psi) / (2.0 * j_i);
    };
    return quad::integrate(f, sc.z_i, sc.z_cap, rel_tol).value;
}

inline double fall_quadrature(const Scenario& sc, double rel_tol, double norm) {
    const double j_r = -undercurrent_magnitude(sc, norm);
    auto f = [&](double z) {
        const auto wv = psi_allowed(z, sc, norm);
        return std::norm(wv.psi) / (2.0 * j_r);
    };
    return quad::integrate(f, sc.z_cap, sc.z_i, rel_tol).value;
}

inline double penetrate_quadrature(const Scenario& sc, double rel_tol, double norm) {
    const double j_p = undercurrent_magnitude(sc, norm);
    const double L_q = scales(sc).L_q;
    auto f = [&](double z) {
        const auto wv = psi_forbidden(z, sc, norm);
        return std::norm(wv.psi) / (2.0 * j_p);
    };
    return quad::integrate_semi_infinite(f, sc.z_cap, L_q, rel_tol).value;
}

inline double withdraw_quadrature(const Scenario& sc, double rel_tol, double norm) {
    const double j_w = -undercurrent_magnitude(sc, norm);
    const double L_q = scales(sc).L_q;
    auto f = [&](double z) {
        const auto wv = psi_forbidden(z, sc, norm);
        return std::norm(wv.psi) / (2.0 * j_w);
    };
    return -quad::integrate_semi_infinite(f, sc.z_cap, L_q, rel_tol).value;
}

}  // namespace detail

inline double rise_time(const Scenario& sc, Method method = Method::closed,
                        double rel_tol = 1e-10, double norm = 1.0) {
    return method == Method::closed ? detail::rise_closed(sc)
                                    : detail::rise_quadrature(sc, rel_tol, norm);
}

inline double fall_time(const Scenario& sc, Method method = Method::closed,
                        double rel_tol = 1e-10, double norm = 1.0) {
    return method == Method::closed ? detail::rise_closed(sc)
                                    : detail::fall_quadrature(sc, rel_tol, norm);
}

inline double penetrate_time(const Scenario& sc, Method method = Method::closed,
                             double rel_tol = 1e-10, double norm = 1.0) {
    return method == Method::closed ? detail::penetrate_closed(sc)
                                    : detail::penetrate_quadrature(sc, rel_tol, norm);
}

inline double withdraw_time(const Scenario& sc, Method method = Method::closed,
                            double rel_tol = 1e-10, double norm = 1.0) {
    return method == Method::closed ? detail::penetrate_closed(sc)
                                    : detail::withdraw_quadrature(sc, rel_tol, norm);
}

// Dwell time (1/j_i) Int_{z_cap}^inf |psi_f|^2 dz; equals penetrate + withdraw.
inline double dwell_time(const Scenario& sc, double rel_tol = 1e-10, double norm = 1.0) {
    const double j_i = undercurrent_magnitude(sc, norm);
    const double L_q = scales(sc).L_q;
    auto f = [&](double z) { return std::norm(psi_forbidden(z, sc, norm).psi); };
    return quad::integrate_semi_infinite(f, sc.z_cap, L_q, rel_tol).value / j_i;
}

// QST/CST as a function of beta_q alone:
// pi sqrt(b) Ai(-b)^2 + (pi/sqrt(b)) Ai'(-b)^2.
inline double qst_over_cst(double beta_q) {
    if (!(beta_q > 0.0)) throw std::invalid_argument("qst_over_cst: beta_q must be > 0");
    double ai, aip;
    specfun::airy_ai_pair(-beta_q, ai, aip);
    const double rb = std::sqrt(beta_q);
    return specfun::pi * rb * ai * ai + specfun::pi / rb * aip * aip;
}

inline TimeBreakdown qst_total(const Scenario& sc) {
    TimeBreakdown tb;
    tb.rise = detail::rise_closed(sc);
    tb.fall = tb.rise;
    tb.penetrate = detail::penetrate_closed(sc);
    tb.withdraw = tb.penetrate;
    tb.total = tb.rise + tb.penetrate + tb.withdraw + tb.fall;
    tb.cst = cst(sc);
    if (tb.cst > 0.0) tb.ratio = tb.total / tb.cst;
    return tb;
}

// Collision time at zero flight, 4 pi T_q / (3^{1/3} Gamma(1/3))^2.
inline double zero_flight_time(const Particle& p, double g,
                               double hbar = PhysicalConstants{}.hbar) {
    const double tq = scales(p, g, hbar).T_q;
    const double denom = std::pow(std::cbrt(3.0) * specfun::gamma_one_third, 2.0);
    return 4.0 * specfun::pi * tq / denom;
}

// High-flight asymptote of QST/CST, 1 - cos(alpha_q) / (3 alpha_q).
inline double high_flight_ratio(double alpha_q) {
    if (!(alpha_q > 0.0)) throw std::invalid_argument("high_flight_ratio: alpha_q must be > 0");
    return 1.0 - std::cos(alpha_q) / (3.0 * alpha_q);
}

// Height above which the asymptote's own error stays below `fraction` of the
// deviation it predicts: the residual envelope is fitted as C/alpha^2 on a
// scan, and the returned height is L_q beta* with alpha* = 3 C / fraction.
inline double high_flight_validity(const Particle& p, double g,
                                   double hbar = PhysicalConstants{}.hbar,
                                   double fraction = 0.01) {
    if (!(fraction > 0.0)) throw std::invalid_argument("fraction must be positive");
    double c2 = 0.0;
    for (int i = 0; i <= 400; ++i) {
        const double alpha = 20.0 * std::pow(100.0, i / 400.0);  // [20, 2000]
        const double beta = std::pow(0.75 * alpha, 2.0 / 3.0);
        const double resid = std::fabs(qst_over_cst(beta) - high_flight_ratio(alpha));
        c2 = std::max(c2, resid * alpha * alpha);
    }
    const double alpha_star = 3.0 * c2 / fraction;
    const double beta_star = std::pow(0.75 * alpha_star, 2.0 / 3.0);
    return scales(p, g, hbar).L_q * beta_star;
}

// ---- figure sweeps ----

struct SweepRow {
    double beta_q;        // reference-mass beta
    double cst_over_tq;   // 4 sqrt(beta), scaled with the reference T_q
    std::vector<double> y;  // one column per mass variant
};

struct SweepTable {
    int figure = 0;                 // 2: qst/T_q vs cst/T_q; 3: qst/cst vs cst/T_q
    std::vector<double> variants;   // mass multipliers
    std::vector<SweepRow> rows;
};

// Mass variants enter through T_q(kappa m) = kappa^{-1/3} T_q(m); the x axis
// is always scaled with the reference-mass T_q.
inline SweepTable figure_sweep(int figure, double beta_min, double beta_max, int points,
                               std::vector<double> variants = {1.0, 10.0, 0.1}) {
    if (figure != 2 && figure != 3) throw std::invalid_argument("figure must be 2 or 3");
    if (points < 2) throw std::invalid_argument("points must be >= 2");
    if (!(beta_min > 0.0 && beta_max > beta_min))
        throw std::invalid_argument("need 0 < beta_min < beta_max");
    if (variants.empty()) throw std::invalid_argument("need at least one mass variant");

    SweepTable t;
    t.figure = figure;
    t.variants = variants;

    auto eval_row = [&](double beta) {
        SweepRow row;
        row.beta_q = beta;
        row.cst_over_tq = 4.0 * std::sqrt(beta);
        for (double kappa : variants) {
            const double bk = beta * std::pow(kappa, 2.0 / 3.0);
            if (figure == 2) {
                double ai, aip;
                specfun::airy_ai_pair(-bk, ai, aip);
                row.y.push_back(4.0 * specfun::pi / std::cbrt(kappa) *
                                (bk * ai * ai + aip * aip));
            } else {
                row.y.push_back(qst_over_cst(bk));
            }
        }
        return row;
    };

    if (figure == 2) t.rows.push_back(eval_row(0.0));  // zero-flight intercepts
    const double lr = std::log(beta_max / beta_min);
    for (int i = 0; i < points; ++i) {
        const double beta = beta_min * std::exp(lr * i / (points - 1));
        t.rows.push_back(eval_row(beta));
    }
    return t;
}

}  // namespace gravtime::stationary
