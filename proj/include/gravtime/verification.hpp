#pragma once
// Cross-module consistency checks behind the `verify` command: Wronskian and
// connection identities, branch-switchover continuity, closed-form vs
// quadrature times, the dwell identity, undercurrent structure, wavepacket
// continuity, and scale/exponent sanity. Every check is deterministic.

#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "gravtime/model.hpp"
#include "gravtime/quadrature.hpp"
#include "gravtime/specfun.hpp"
#include "gravtime/stationary.hpp"
#include "gravtime/wavepacket.hpp"

namespace gravtime::verification {

struct CheckResult {
    std::string name;
    double measured = 0.0;  // worst observed error
    double allowed = 0.0;
    bool pass = false;
};

struct Options {
    double quad_rel_tol = 1e-10;  // tolerance handed to the quadrature routes
};

namespace detail {

inline double rel(double a, double b) {
    const double scale = std::max(std::fabs(a), std::fabs(b));
    return scale == 0.0 ? 0.0 : std::fabs(a - b) / scale;
}

inline CheckResult make(const std::string& name, double measured, double allowed) {
    return {name, measured, allowed, measured <= allowed};
}

inline Scenario scenario_for_beta(double beta, double mass = 1.674e-27) {
    const Particle p("test", mass);
    const double L_q = scales(p, 9.80665).L_q;
    return Scenario(p, 9.80665, 0.0, beta * L_q);
}

inline CheckResult gamma_reflection() {
    const double lhs = specfun::gamma_one_third * specfun::gamma_two_thirds;
    const double rhs = 2.0 * specfun::pi / std::sqrt(3.0);
    return make("specfun.gamma_reflection", rel(lhs, rhs), 1e-14);
}

inline CheckResult airy_at_zero() {
    double e = rel(specfun::airy_ai(0.0), 0.35502805388781723926);
    e = std::max(e, rel(specfun::airy_ai_prime(0.0), -0.25881940379280679840));
    return make("specfun.airy_at_zero", e, 1e-12);
}

inline CheckResult wronskian_j() {
    double worst = 0.0;
    for (int i = 0; i <= 120; ++i) {
        const double x = 1e-3 * std::pow(1e6, i / 120.0);  // [1e-3, 1e3]
        const double lhs = specfun::bessel_j_third(+1, x) * specfun::bessel_j_third_deriv(-1, x) -
                           specfun::bessel_j_third_deriv(+1, x) * specfun::bessel_j_third(-1, x);
        const double rhs = -2.0 * std::sin(specfun::pi / 3.0) / (specfun::pi * x);
        worst = std::max(worst, rel(lhs, rhs));
    }
    return make("specfun.wronskian_j", worst, 1e-9);
}

// The I-pair Wronskian is cancellation-limited beyond x ~ 5, so the pair form
// is checked there and the equivalent mixed form I K' - I' K = -1/x (stable
// at any argument when evaluated scaled) covers the full grid.
inline CheckResult wronskian_i() {
    double worst = 0.0;
    for (int i = 0; i <= 40; ++i) {
        const double x = 1e-3 * std::pow(5e3, i / 40.0);  // [1e-3, 5]
        const double lhs = specfun::bessel_i_third(+1, x) * specfun::bessel_i_third_deriv(-1, x) -
                           specfun::bessel_i_third_deriv(+1, x) * specfun::bessel_i_third(-1, x);
        const double rhs = -2.0 * std::sin(specfun::pi / 3.0) / (specfun::pi * x);
        worst = std::max(worst, rel(lhs, rhs));
    }
    for (int i = 0; i <= 120; ++i) {
        const double x = 1e-3 * std::pow(1e6, i / 120.0);  // [1e-3, 1e3]
        const double is = specfun::bessel_i_third(+1, x, true);
        const double isd = specfun::bessel_i_third_deriv(+1, x, true);
        const double ks = specfun::bessel_k_third(x, true);
        const double ksd = -specfun::bessel_k_two_thirds(x, true) - ks / (3.0 * x);
        const double lhs = is * ksd - isd * ks;  // e^{-x}I * e^{x}K' - ...
        worst = std::max(worst, rel(lhs, -1.0 / x));
    }
    return make("specfun.wronskian_i", worst, 1e-9);
}

inline CheckResult airy_bessel_connection() {
    double worst = 0.0;
    for (int i = 0; i <= 100; ++i) {
        const double u = 1e-3 * std::pow(3e4, i / 100.0);  // [1e-3, 30]
        const double zt = (2.0 / 3.0) * u * std::sqrt(u);
        // allowed side, against the oscillation envelope
        const double lhs_a = std::sqrt(u) / 3.0 *
                             (specfun::bessel_j_third(+1, zt) + specfun::bessel_j_third(-1, zt));
        const double env = 1.0 / (specfun::sqrt_pi * std::pow(u, 0.25));
        worst = std::max(worst, std::fabs(lhs_a - specfun::airy_ai(-u)) / env);
        // forbidden side through K (stable at any u)
        const double lhs_f = std::sqrt(u / 3.0) / specfun::pi * specfun::bessel_k_third(zt);
        worst = std::max(worst, rel(lhs_f, specfun::airy_ai(u)));
        // forbidden side from the I difference where double precision allows
        if (u <= 4.0) {
            const double lhs_i =
                std::sqrt(u) / 3.0 *
                (specfun::bessel_i_third(-1, zt) - specfun::bessel_i_third(+1, zt));
            worst = std::max(worst, rel(lhs_i, specfun::airy_ai(u)));
        }
    }
    return make("specfun.airy_bessel_connection", worst, 1e-9);
}

inline CheckResult switchover_continuity() {
    double worst = 0.0;
    for (double x = -8.6; x <= -7.4; x += 0.04) {  // series vs negative asymptotic
        double as, asp, aa, aap;
        specfun::detail::airy_series(x, as, asp);
        specfun::detail::airy_negative_asymptotic(x, aa, aap);
        worst = std::max({worst, rel(as, aa), rel(asp, aap)});
    }
    for (double x = 2.1; x <= 3.0; x += 0.03) {  // series vs K route
        double as, asp, ak, akp;
        specfun::detail::airy_series(x, as, asp);
        specfun::detail::airy_positive_bessel_k(x, ak, akp);
        worst = std::max({worst, rel(as, ak), rel(asp, akp)});
    }
    for (double x = 11.0; x <= 14.0; x += 0.1) {  // Bessel series vs asymptotics
        for (double nu : {1.0 / 3.0, -1.0 / 3.0, 2.0 / 3.0, -2.0 / 3.0}) {
            const double js = static_cast<double>(specfun::detail::cyl_series(nu, x, -1));
            const double ja = specfun::detail::bessel_j_asymptotic(nu, x);
            worst = std::max(worst, std::fabs(js - ja) / std::sqrt(2.0 / (specfun::pi * x)));
            const double is =
                static_cast<double>(specfun::detail::cyl_series(nu, x, +1) * std::exp(-x));
            const double ia = specfun::detail::bessel_i_asymptotic_scaled(nu, x);
            worst = std::max(worst, rel(is, ia));
        }
    }
    return make("specfun.switchover_continuity", worst, 1e-9);
}

inline CheckResult quadrature_analytic(const Options& opt) {
    double worst = 0.0;
    worst = std::max(worst, rel(quad::integrate([](double x) { return x * x; }, 0.0, 1.0,
                                                opt.quad_rel_tol)
                                    .value,
                                1.0 / 3.0));
    worst = std::max(worst, rel(quad::integrate([](double x) { return std::sin(x); }, 0.0,
                                                specfun::pi, opt.quad_rel_tol)
                                    .value,
                                2.0));
    worst = std::max(
        worst, rel(quad::integrate_semi_infinite([](double x) { return std::exp(-x); }, 0.0,
                                                 2.0, opt.quad_rel_tol)
                       .value,
                   1.0));
    worst = std::max(
        worst, rel(quad::integrate_semi_infinite([](double x) { return x * std::exp(-2.0 * x); },
                                                 0.0, 2.0, opt.quad_rel_tol)
                       .value,
                   0.25));
    return make("quadrature.analytic", worst, 10.0 * opt.quad_rel_tol);
}

inline CheckResult closed_vs_quadrature(const Options& opt) {
    using namespace stationary;
    double worst = 0.0;
    for (double beta : {1e-4, 1e-2, 1.0, 10.0, 100.0}) {
        const Scenario sc = scenario_for_beta(beta);
        worst = std::max(worst, rel(rise_time(sc, Method::closed),
                                    rise_time(sc, Method::quadrature, opt.quad_rel_tol)));
        worst = std::max(worst, rel(fall_time(sc, Method::closed),
                                    fall_time(sc, Method::quadrature, opt.quad_rel_tol)));
        worst = std::max(worst, rel(penetrate_time(sc, Method::closed),
                                    penetrate_time(sc, Method::quadrature, opt.quad_rel_tol)));
        worst = std::max(worst, rel(withdraw_time(sc, Method::closed),
                                    withdraw_time(sc, Method::quadrature, opt.quad_rel_tol)));
    }
    return make("stationary.closed_vs_quadrature", worst, 1e-8);
}

inline CheckResult dwell_identity(const Options& opt) {
    using namespace stationary;
    double worst = 0.0;
    for (double mass : {9.109e-31, 1.674e-27, 2.2069469e-25}) {
        const Scenario sc = scenario_for_beta(1.0, mass);
        const double dwell = dwell_time(sc, opt.quad_rel_tol);
        const double sum = penetrate_time(sc, Method::closed) + withdraw_time(sc, Method::closed);
        worst = std::max(worst, rel(dwell, sum));
    }
    return make("stationary.dwell_identity", worst, 1e-8);
}

inline CheckResult undercurrents_structure() {
    using namespace stationary;
    const Scenario sc = scenario_for_beta(4.0);
    const double L_q = scales(sc).L_q;
    const double j = undercurrent_magnitude(sc);
    const double m = sc.particle.mass_kg, hb = sc.hbar;
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
        const double z = sc.z_i + (sc.z_cap + 10.0 * L_q - sc.z_i) * i / 49.0;
        if (z <= sc.z_cap) {
            const auto [inc, refl] = split_allowed(z, sc);
            worst = std::max(worst, rel(current(inc, m, hb), j));
            worst = std::max(worst, rel(current(refl, m, hb), -j));
        }
        if (z >= sc.z_cap) {
            const auto [pen, wd] = split_forbidden(z, sc);
            worst = std::max(worst, rel(current(pen, m, hb), j));
            worst = std::max(worst, rel(current(wd, m, hb), -j));
        }
    }
    return make("stationary.undercurrents", worst, 1e-9);
}

// The recombined splits must carry zero net current and a vanishing
// imaginary part relative to the wavefunction magnitude.
inline CheckResult total_current_vanishes() {
    using namespace stationary;
    const Scenario sc = scenario_for_beta(4.0);
    const double L_q = scales(sc).L_q;
    const double j = undercurrent_magnitude(sc);
    const double m = sc.particle.mass_kg, hb = sc.hbar;
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
        const double z = sc.z_i + (sc.z_cap + 10.0 * L_q - sc.z_i) * i / 49.0;
        WaveValue sum;
        if (z <= sc.z_cap) {
            const auto [inc, refl] = split_allowed(z, sc);
            sum = {inc.psi + refl.psi, inc.dpsi_dz + refl.dpsi_dz};
        } else {
            const auto [pen, wd] = split_forbidden(z, sc);
            sum = {pen.psi + wd.psi, pen.dpsi_dz + wd.dpsi_dz};
        }
        worst = std::max(worst, std::fabs(current(sum, m, hb)) / j);
        worst = std::max(worst, std::fabs(sum.psi.imag()) / std::abs(sum.psi));
    }
    return make("stationary.total_current_vanishes", worst, 1e-12);
}

inline CheckResult normalization_independence(const Options& opt) {
    using namespace stationary;
    const Scenario sc = scenario_for_beta(1.0);
    double worst = 0.0;
    worst = std::max(worst, rel(rise_time(sc, Method::quadrature, opt.quad_rel_tol, 7.0),
                                rise_time(sc, Method::quadrature, opt.quad_rel_tol, 1.0)));
    worst = std::max(worst, rel(dwell_time(sc, opt.quad_rel_tol, 7.0),
                                dwell_time(sc, opt.quad_rel_tol, 1.0)));
    return make("stationary.normalization_independence", worst, 1e-12);
}

inline CheckResult zero_flight_limit() {
    using namespace stationary;
    const Scenario sc = scenario_for_beta(1e-10);
    const double total = qst_total(sc).total;
    const double zf = zero_flight_time(sc.particle, sc.g, sc.hbar);
    return make("stationary.zero_flight_limit", rel(total, zf), 1e-6);
}

inline CheckResult high_flight_envelope() {
    using namespace stationary;
    // |Eq.(42) - asymptote| * alpha must not grow with alpha
    double bin_max[6] = {0, 0, 0, 0, 0, 0};
    for (int i = 0; i < 2000; ++i) {
        const double alpha = 20.0 + 180.0 * i / 1999.0;
        const double beta = std::pow(0.75 * alpha, 2.0 / 3.0);
        const double diff = std::fabs(qst_over_cst(beta) - high_flight_ratio(alpha));
        bin_max[std::min(5, static_cast<int>((alpha - 20.0) / 30.0))] =
            std::max(bin_max[std::min(5, static_cast<int>((alpha - 20.0) / 30.0))], diff * alpha);
    }
    double worst = bin_max[0];  // must be the global max and small
    bool decreasing = true;
    for (int b = 1; b < 6; ++b) {
        decreasing = decreasing && bin_max[b] <= bin_max[b - 1];
        worst = std::max(worst, bin_max[b]);
    }
    CheckResult r = make("stationary.high_flight_envelope", worst, 0.05);
    r.pass = r.pass && decreasing;
    return r;
}

inline CheckResult wavepacket_classical_limit() {
    const wavepacket::Params p(1.674e-27, 9.80665, 1e-6, 0.0, 0.05, 0.0);
    const double ret = wavepacket::return_time_numeric(p);
    return make("wavepacket.classical_limit", rel(ret, p.cst()), 1e-12);
}

inline CheckResult wavepacket_flow_ratio() {
    const wavepacket::Params p(1.674e-27, 9.80665, 1e-5, 0.0, 0.05);
    const double t0 = p.cst();
    double worst = 0.0;
    for (double tf : {0.1, 0.35, 0.6, 0.95}) {
        const double t = tf * t0;
        const double zc = wavepacket::classical_trajectory(t, p);
        const double s = wavepacket::packet_width(t, p);
        for (double k : {-1.5, -0.3, 0.4, 1.2}) {
            const double z = zc + k * s;
            const double h = 1e-7 * s;
            const auto pp = wavepacket::psi(t, z + h, p);
            const auto pm = wavepacket::psi(t, z - h, p);
            const auto pc = wavepacket::psi(t, z, p);
            const std::complex<double> dpsi = (pp - pm) / (2.0 * h);
            const double J = p.hbar / p.mass * std::imag(std::conj(pc) * dpsi);
            const double R = std::norm(pc);
            worst = std::max(worst, rel(J / R, wavepacket::flow_ratio(t, z, p)));
        }
    }
    return make("wavepacket.flow_ratio_consistency", worst, 1e-9);
}

inline CheckResult wavepacket_continuity() {
    const wavepacket::Params p(1.674e-27, 9.80665, 1e-5, 0.0, 0.05);
    const double t0 = p.cst();
    double worst = 0.0;
    for (double tf : {0.2, 0.5, 0.8}) {
        const double t = tf * t0;
        const double zc = wavepacket::classical_trajectory(t, p);
        const double s = wavepacket::packet_width(t, p);
        for (double k : {-1.0, 0.25, 1.0}) {
            const double z = zc + k * s;
            const double dt = 1e-5 * t, dz = 1e-5 * s;
            const double resid = wavepacket::continuity_residual(t, z, p, dt, dz);
            const double dR_dt = (wavepacket::flow_point(t + dt, z, p).density -
                                  wavepacket::flow_point(t - dt, z, p).density) /
                                 (2.0 * dt);
            const double dJ_dz = (wavepacket::flow_point(t, z + dz, p).current -
                                  wavepacket::flow_point(t, z - dz, p).current) /
                                 (2.0 * dz);
            const double scale = std::max(std::fabs(dR_dt), std::fabs(dJ_dz));
            worst = std::max(worst, std::fabs(resid) / scale);
        }
    }
    return make("wavepacket.continuity_residual", worst, 1e-6);
}

inline CheckResult scale_exponents() {
    const double g = 9.80665;
    const Particle p1("m", 1.674e-27), p8("8m", 8 * 1.674e-27), p27("27m", 27 * 1.674e-27);
    const auto s1 = scales(p1, g), s8 = scales(p8, g), s27 = scales(p27, g);
    double worst = 0.0;
    worst = std::max(worst, rel(s8.L_q / s1.L_q, 0.25));        // L_q ~ m^{-2/3}
    worst = std::max(worst, rel(s27.L_q / s1.L_q, 1.0 / 9.0));
    worst = std::max(worst, rel(s8.T_q / s1.T_q, 0.5));         // T_q ~ m^{-1/3}
    worst = std::max(worst, rel(s27.T_q / s1.T_q, 1.0 / 3.0));
    const double hbar = PhysicalConstants{}.hbar;
    worst = std::max(worst, rel(std::pow(s1.T_q, 3) * 4.0 * p1.mass_kg * g * g, hbar));
    // cst is particle independent
    const Scenario a(p1, g, 0.0, 1.0), b(p27, g, 0.0, 1.0);
    worst = std::max(worst, rel(cst(a), cst(b)));
    return make("core.scale_exponents", worst, 1e-12);
}

}  // namespace detail

inline std::vector<CheckResult> run_all_checks(const Options& opt = {}) {
    std::vector<CheckResult> out;
    out.push_back(detail::gamma_reflection());
    out.push_back(detail::airy_at_zero());
    out.push_back(detail::wronskian_j());
    out.push_back(detail::wronskian_i());
    out.push_back(detail::airy_bessel_connection());
    out.push_back(detail::switchover_continuity());
    out.push_back(detail::quadrature_analytic(opt));
    out.push_back(detail::closed_vs_quadrature(opt));
    out.push_back(detail::dwell_identity(opt));
    out.push_back(detail::undercurrents_structure());
    out.push_back(detail::total_current_vanishes());
    out.push_back(detail::normalization_independence(opt));
    out.push_back(detail::zero_flight_limit());
    out.push_back(detail::high_flight_envelope());
    out.push_back(detail::wavepacket_classical_limit());
    out.push_back(detail::wavepacket_flow_ratio());
    out.push_back(detail::wavepacket_continuity());
    out.push_back(detail::scale_exponents());
    return out;
}

}  // namespace gravtime::verification
