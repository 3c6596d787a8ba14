#pragma once
// Gaussian wavepacket tossed upward in V(z) = m g z: wavefunction, probability
// density and current, the Bohmian trajectory z_c(t) + d sqrt(1 + (hbar t /
// m d^2)^2), the numeric return time, and the first-order Bohmian and
// Copenhagen scattering times.

#include <cmath>
#include <complex>
#include <stdexcept>

#include "gravtime/model.hpp"
#include "gravtime/quadrature.hpp"

namespace gravtime::wavepacket {

struct Params {
    double mass = 0.0;     // kg
    double g = 9.80665;    // m/s^2
    double width_d = 0.0;  // initial packet width, m
    double z_i = 0.0;      // launch height, m
    double v_i = 0.0;      // launch speed, m/s
    double hbar = PhysicalConstants{}.hbar;  // J s; 0 selects the classical limit

    Params(double m, double grav, double d, double zi, double vi,
           double hb = PhysicalConstants{}.hbar)
        : mass(m), g(grav), width_d(d), z_i(zi), v_i(vi), hbar(hb) {
        if (!(mass > 0.0)) throw std::invalid_argument("mass must be positive");
        if (!(g > 0.0)) throw std::invalid_argument("g must be positive");
        if (!(width_d > 0.0)) throw std::invalid_argument("width_d must be positive");
        if (!(v_i > 0.0)) throw std::invalid_argument("v_i must be positive");
        if (!(hbar >= 0.0)) throw std::invalid_argument("hbar must be non-negative");
    }

    double flight_height() const { return v_i * v_i / (2.0 * g); }  // z_cap - z_i
    double cst() const { return 2.0 * v_i / g; }

    // The first-order time formulas assume d << v_i^2 / 2g; this is a
    // validity flag, not an error.
    bool narrow_width() const { return width_d < 0.05 * flight_height(); }
};

struct FlowPoint {
    double t = 0.0;        // s
    double z = 0.0;        // m
    double density = 0.0;  // R, 1/m
    double current = 0.0;  // J, 1/s
};

inline double classical_trajectory(double t, const Params& p) {
    return p.z_i + p.v_i * t - 0.5 * p.g * t * t;
}

// sigma(t) = d sqrt(1 + (hbar t / m d^2)^2), the |D^2|/d packet width.
inline double packet_width(double t, const Params& p) {
    if (p.hbar == 0.0) return p.width_d;
    const double r = p.hbar * t / (p.mass * p.width_d * p.width_d);
    return p.width_d * std::sqrt(1.0 + r * r);
}

// J/R  =  t (z - z_c) / (m^2 d^4 / hbar^2 + t^2)  +  v_i - g t
inline double flow_ratio(double t, double z, const Params& p) {
    double drift = 0.0;
    if (p.hbar > 0.0) {
        const double tau = p.mass * p.width_d * p.width_d / p.hbar;
        drift = t * (z - classical_trajectory(t, p)) / (tau * tau + t * t);
    }
    return drift + p.v_i - p.g * t;
}

inline FlowPoint flow_point(double t, double z, const Params& p) {
    const double zc = classical_trajectory(t, p);
    const double s = packet_width(t, p);
    const double arg = (z - zc) / s;
    FlowPoint fp;
    fp.t = t;
    fp.z = z;
    fp.density = std::exp(-arg * arg) / (std::sqrt(M_PI) * s);
    fp.current = fp.density * flow_ratio(t, z, p);
    return fp;
}

// The wavepacket solution with time-varying width D^2 = d^2 + i hbar t / m.
inline std::complex<double> psi(double t, double z, const Params& p) {
    if (!(p.hbar > 0.0)) throw std::invalid_argument("psi: hbar must be positive");
    using C = std::complex<double>;
    const C i(0.0, 1.0);
    const double m_over_hbar = p.mass / p.hbar;
    const C D2(p.width_d * p.width_d, p.hbar * t / p.mass);
    const double zc = classical_trajectory(t, p);
    const C pref = std::sqrt(p.width_d / (std::sqrt(M_PI) * D2));
    const C phase1 = -(z - zc) * (z - zc) / (2.0 * D2) - i * m_over_hbar * p.z_i * p.v_i;
    const C phase2 = i * m_over_hbar * (z - 0.5 * p.v_i * t) * (p.v_i - p.g * t) -
                     i * m_over_hbar * p.g * p.g * t * t * t;
    return pref * std::exp(phase1 + phase2);
}

inline double bohmian_trajectory(double t, const Params& p) {
    return classical_trajectory(t, p) + packet_width(t, p);
}

// The trajectory starts at z(0) = z_i + d. `start_height` declares return as
// the recrossing of z(0); `platform` as reaching z = z_i.
enum class ReturnEvent { start_height, platform };

inline double return_time_numeric(const Params& p,
                                  ReturnEvent event = ReturnEvent::start_height,
                                  double rel_tol = 1e-13) {
    const double target =
        event == ReturnEvent::start_height ? bohmian_trajectory(0.0, p) : p.z_i;
    auto f = [&](double t) { return bohmian_trajectory(t, p) - target; };
    const double t0 = p.cst();
    const double lo = p.v_i / p.g;  // classical apex; still above the target
    const double hi = 10.0 * t0;
    if (!(f(hi) < 0.0))
        throw std::runtime_error(
            "return_time_numeric: no return by 10 classical periods "
            "(dispersion-dominated escape regime)");
    return quad::find_root(f, lo, hi, rel_tol * t0);
}

// First-order Bohmian QST, (2 v_i/g) (1 + hbar / (m sqrt(2 g d^3))).
inline double qst_bohmian(const Params& p) {
    return p.cst() *
           (1.0 + p.hbar / (p.mass * std::sqrt(2.0 * p.g * std::pow(p.width_d, 3))));
}

// Copenhagen (time-operator) QST, (2 v_i/g) (1 + hbar^2 / (4 m^2 d^2 v_i^2)).
inline double qst_copenhagen(const Params& p) {
    const double q = p.hbar / (2.0 * p.mass * p.width_d * p.v_i);
    return p.cst() * (1.0 + q * q);
}

// dR/dt + dJ/dz by central differences; zero up to discretization error.
inline double continuity_residual(double t, double z, const Params& p, double dt,
                                  double dz) {
    if (!(t > 0.0)) throw std::invalid_argument("continuity_residual: t must be > 0");
    if (!(dt > 0.0 && dt < t) || !(dz > 0.0))
        throw std::invalid_argument("continuity_residual: bad step sizes");
    const double dR_dt =
        (flow_point(t + dt, z, p).density - flow_point(t - dt, z, p).density) / (2.0 * dt);
    const double dJ_dz =
        (flow_point(t, z + dz, p).current - flow_point(t, z - dz, p).current) / (2.0 * dz);
    return dR_dt + dJ_dz;
}

inline double continuity_residual(double t, double z, const Params& p) {
    const double dt = 1e-5 * std::max(t, p.width_d / p.v_i);
    const double dz = 1e-5 * packet_width(t, p);
    return continuity_residual(t, z, p, dt, dz);
}

}  // namespace gravtime::wavepacket
