#pragma once
// Real-argument special functions for the linear-potential wavefunctions:
// Airy Ai and Ai', Bessel J and modified Bessel I of orders +-1/3 (and +-2/3,
// which the derivative recurrences need), the K companions, and Gamma at
// thirds.
//
// Small arguments use power series accumulated in extended precision; large
// arguments use modulus-phase (Hankel) expansions. K is evaluated from its
// exp(-t) integral representation on fixed Gauss panels, which stays free of
// cancellation at any argument; the positive-argument Airy branch and the
// evanescent combination I_{-1/3}-I_{1/3} are routed through K.

#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "gravtime/quadrature.hpp"

namespace gravtime::specfun {

inline constexpr double gamma_one_third = 2.6789385347077476337;    // Gamma(1/3)
inline constexpr double gamma_two_thirds = 1.3541179394264004169;   // Gamma(2/3)
inline constexpr double gamma_four_thirds = gamma_one_third / 3.0;  // Gamma(4/3)
inline constexpr double pi = 3.141592653589793238462643383279502884;
inline constexpr double sqrt_pi = 1.7724538509055160273;

// Gamma(1/6) and Gamma(5/6) via the duplication formula, so everything traces
// back to the two pinned thirds constants.
inline const double gamma_one_sixth =
    sqrt_pi * std::cbrt(4.0) * gamma_one_third / gamma_two_thirds;
inline const double gamma_five_sixths =
    sqrt_pi * std::cbrt(2.0) * gamma_two_thirds / gamma_one_third;

inline const double airy_ai_zero = 1.0 / (std::cbrt(9.0) * gamma_two_thirds);         // Ai(0)
inline const double airy_ai_prime_zero = -1.0 / (std::cbrt(3.0) * gamma_one_third);   // Ai'(0)

// Gamma(thirds/3) for thirds in {1, 2, 4}; anything else is out of scope.
inline double gamma_thirds(int thirds) {
    switch (thirds) {
        case 1: return gamma_one_third;
        case 2: return gamma_two_thirds;
        case 4: return gamma_four_thirds;
        default: throw std::invalid_argument("gamma_thirds: argument must be 1, 2 or 4");
    }
}

namespace detail {

inline constexpr long double pi_l = 3.14159265358979323846264338327950288L;

inline long double gamma_one_plus(double nu) {
    // nu in {-2/3, -1/3, 1/3, 2/3}
    if (nu == 1.0 / 3.0) return (long double)gamma_one_third / 3.0L;        // Gamma(4/3)
    if (nu == -1.0 / 3.0) return (long double)gamma_two_thirds;             // Gamma(2/3)
    if (nu == 2.0 / 3.0) return 2.0L * (long double)gamma_two_thirds / 3.0L;  // Gamma(5/3)
    if (nu == -2.0 / 3.0) return (long double)gamma_one_third;              // Gamma(1/3)
    throw std::invalid_argument("unsupported Bessel order");
}

// Ascending series for J_nu (sign = -1) or I_nu (sign = +1), x > 0.
inline long double cyl_series(double nu, double x, int sign) {
    const long double q = 0.5L * (long double)x;
    long double term = expl((long double)nu * logl(q)) / gamma_one_plus(nu);
    long double sum = term;
    const long double x24 = q * q;
    for (int k = 1; k < 400; ++k) {
        term *= sign * x24 / (k * (k + (long double)nu));
        sum += term;
        if (fabsl(term) <= 1e-21L * fabsl(sum)) break;
    }
    return sum;
}

// Hankel auxiliary sums P and Q; a_k = prod_j (4nu^2 - (2j-1)^2) / (k! 8^k).
inline void hankel_pq(double nu, double x, long double& p, long double& q) {
    const long double mu = 4.0L * (long double)nu * nu;
    long double c = 1.0L, prev = 1e30L;
    p = 1.0L;
    q = 0.0L;
    int sp = -1, sq = 1;  // sign cycles: P gets -,+,-..., Q gets +,-,+... on k=2,4,... / 1,3,...
    for (int k = 1; k <= 60; ++k) {
        c *= (mu - (2.0L * k - 1) * (2.0L * k - 1)) / (8.0L * k * (long double)x);
        if (fabsl(c) >= prev) break;  // asymptotic tail started to grow
        prev = fabsl(c);
        if (k % 2 == 1) {
            q += sq * c;
            sq = -sq;
        } else {
            p += sp * c;
            sp = -sp;
        }
        if (prev < 1e-20L) break;
    }
}

inline double bessel_j_asymptotic(double nu, double x) {
    long double p, q;
    hankel_pq(nu, x, p, q);
    const long double omega = (long double)x - ((long double)nu / 2.0L + 0.25L) * pi_l;
    const long double amp = sqrtl(2.0L / (pi_l * (long double)x));
    return static_cast<double>(amp * (p * cosl(omega) - q * sinl(omega)));
}

// exp(-x) I_nu(x) for large x, including the exponentially small reflection
// term -sin(nu pi) exp(-2x) S2 which matters near the switch point.
inline double bessel_i_asymptotic_scaled(double nu, double x) {
    const long double mu = 4.0L * (long double)nu * nu;
    long double c = 1.0L, s1 = 1.0L, s2 = 1.0L, prev = 1e30L;
    int sign = -1;
    for (int k = 1; k <= 60; ++k) {
        c *= (mu - (2.0L * k - 1) * (2.0L * k - 1)) / (8.0L * k * (long double)x);
        if (fabsl(c) >= prev) break;
        prev = fabsl(c);
        s1 += sign * c;
        s2 += c;
        sign = -sign;
        if (prev < 1e-20L) break;
    }
    const long double refl = -sinl((long double)nu * pi_l) * expl(-2.0L * (long double)x) * s2;
    return static_cast<double>((s1 + refl) / sqrtl(2.0L * pi_l * (long double)x));
}

// exp(x) K_nu(x) for x >= 2 from
//   K_nu(x) = sqrt(pi/2x) e^-x / Gamma(nu+1/2) * Int_0^inf e^-s s^{nu-1/2} (1+s/2x)^{nu-1/2} ds
// with s = v^6 so the endpoint power becomes polynomial. Fixed composite
// 15-point Gauss panels; the integrand is smooth and positive.
inline double bessel_k_scaled_integral(double nu, double x) {
    static constexpr std::array<double, 9> edges = {0.0,  0.4,  0.7,  0.95, 1.15,
                                                    1.35, 1.55, 1.72, 1.90};
    const auto& rule = quad::detail::GaussRule<15>::get();
    const double p6 = 6.0 * nu + 2.0;     // v-power: 4 for nu=1/3, 6 for nu=2/3
    const double phalf = nu - 0.5;
    long double sum = 0.0L;
    for (std::size_t e = 0; e + 1 < edges.size(); ++e) {
        const double mid = 0.5 * (edges[e] + edges[e + 1]);
        const double half = 0.5 * (edges[e + 1] - edges[e]);
        for (int i = 0; i < 15; ++i) {
            const double v = mid + half * rule.x[i];
            const double v6 = v * v * v * v * v * v;
            const double g =
                6.0 * std::pow(v, p6) * std::exp(-v6) * std::pow(1.0 + v6 / (2.0 * x), phalf);
            sum += (long double)(rule.w[i] * half * g);
        }
    }
    const double gamma_nu_half = (nu == 1.0 / 3.0) ? gamma_five_sixths : gamma_one_sixth / 6.0;
    return std::sqrt(pi / (2.0 * x)) / gamma_nu_half * static_cast<double>(sum);
}

// K_nu for x < 2 from the I-pair difference; cancellation is < e^{2x} ~ 55.
inline double bessel_k_small(double nu, double x) {
    const long double im = cyl_series(-nu, x, +1);
    const long double ip = cyl_series(nu, x, +1);
    return static_cast<double>(pi_l * (im - ip) / (2.0L * sinl((long double)nu * pi_l)));
}

// ---- Airy branches (exposed for the overlap-window tests) ----

// Maclaurin series; usable on [-8, 2.5] where the cancellation stays within
// what extended-precision accumulation absorbs.
inline void airy_series(double x, double& ai, double& aip) {
    const long double c1 = 1.0L / (powl(3.0L, 2.0L / 3.0L) * (long double)gamma_two_thirds);
    const long double c2 = 1.0L / (powl(3.0L, 1.0L / 3.0L) * (long double)gamma_one_third);
    const long double xl = x;
    const long double x3 = xl * xl * xl;
    long double tf = 1.0L, f = 1.0L, fp = 0.0L;   // f(0)=1, f'(0)=0
    long double tg = xl, g = xl, gp = 1.0L;        // g(0)=0, g'(0)=1
    for (int k = 1; k < 120; ++k) {
        tf *= x3 / ((3.0L * k) * (3.0L * k - 1));
        tg *= x3 / ((3.0L * k + 1) * (3.0L * k));
        f += tf;
        g += tg;
        if (x != 0.0) {
            fp += tf * (3.0L * k) / xl;
            gp += tg * (3.0L * k + 1) / xl;
        }
        if (fabsl(tf) <= 1e-22L * fabsl(f) && fabsl(tg) <= 1e-22L * fabsl(g)) break;
    }
    ai = static_cast<double>(c1 * f - c2 * g);
    aip = static_cast<double>(c1 * fp - c2 * gp);
}

// Modulus-phase expansion for x <= -8 (zeta >= 15, truncation ~ e^{-2 zeta}).
inline void airy_negative_asymptotic(double x, double& ai, double& aip) {
    const long double z = -(long double)x;
    const long double zeta = (2.0L / 3.0L) * z * sqrtl(z);
    long double u = 1.0L, pa = 1.0L, qa = 0.0L, pb = 1.0L, qb = 0.0L;
    long double tu = 1.0L, prev = 1e30L;
    int sp = -1, sq = 1;
    for (int k = 1; k <= 60; ++k) {
        u *= (6.0L * k - 5) * (6.0L * k - 3) * (6.0L * k - 1) / (216.0L * k * (2.0L * k - 1));
        tu = u / powl(zeta, (long double)k);
        if (fabsl(tu) >= prev) break;
        prev = fabsl(tu);
        const long double tv = tu * (6.0L * k + 1) / (1.0L - 6.0L * k);
        if (k % 2 == 1) {
            qa += sq * tu;
            qb += sq * tv;
            sq = -sq;
        } else {
            pa += sp * tu;
            pb += sp * tv;
            sp = -sp;
        }
        if (prev < 1e-20L) break;
    }
    const long double phase = zeta - pi_l / 4.0L;
    const long double c = cosl(phase), s = sinl(phase);
    const long double z14 = powl(z, 0.25L);
    ai = static_cast<double>((c * pa + s * qa) / ((long double)sqrt_pi * z14));
    aip = static_cast<double>(z14 * (s * pb - c * qb) / (long double)sqrt_pi);
}

// Positive branch through K: Ai = sqrt(x/3) K_{1/3}(zeta) / pi,
// Ai' = -x K_{2/3}(zeta) / (sqrt(3) pi).
inline void airy_positive_bessel_k(double x, double& ai, double& aip) {
    const double zeta = (2.0 / 3.0) * x * std::sqrt(x);
    const double k13 = bessel_k_scaled_integral(1.0 / 3.0, zeta);
    const double k23 = bessel_k_scaled_integral(2.0 / 3.0, zeta);
    const double damp = std::exp(-zeta);
    ai = std::sqrt(x / 3.0) * k13 * damp / pi;
    aip = -x * k23 * damp / (std::sqrt(3.0) * pi);
}

}  // namespace detail

// ---- Airy ----

inline void airy_ai_pair(double x, double& ai, double& aip) {
    if (!(std::fabs(x) <= 1e6)) throw std::invalid_argument("airy: |x| must be <= 1e6");
    if (x < -8.0)
        detail::airy_negative_asymptotic(x, ai, aip);
    else if (x <= 2.5)
        detail::airy_series(x, ai, aip);
    else
        detail::airy_positive_bessel_k(x, ai, aip);
}

inline double airy_ai(double x) {
    double ai, aip;
    airy_ai_pair(x, ai, aip);
    return ai;
}

inline double airy_ai_prime(double x) {
    double ai, aip;
    airy_ai_pair(x, ai, aip);
    return aip;
}

// ---- Bessel J of orders +-1/3 and +-2/3 (x >= 0) ----

namespace detail {

inline double bessel_j(double nu, double x) {
    if (x == 0.0) return nu > 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
    if (x < 12.0) return static_cast<double>(cyl_series(nu, x, -1));
    return bessel_j_asymptotic(nu, x);
}

inline double bessel_i_scaled(double nu, double x) {
    if (x == 0.0) return nu > 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
    if (x < 12.0) return static_cast<double>(cyl_series(nu, x, +1) * expl(-(long double)x));
    return bessel_i_asymptotic_scaled(nu, x);
}

inline void check_j_domain(double x) {
    if (!(x >= 0.0)) throw std::invalid_argument("bessel_j: x must be >= 0");
    if (!(x <= 1e8)) throw std::invalid_argument("bessel_j: x must be <= 1e8");
}

inline void check_nonneg(double x, const char* who) {
    if (!(x >= 0.0)) throw std::invalid_argument(std::string(who) + ": x must be >= 0");
}

}  // namespace detail

inline double bessel_j_third(int sign, double x) {
    detail::check_j_domain(x);
    return detail::bessel_j(sign > 0 ? 1.0 / 3.0 : -1.0 / 3.0, x);
}

inline double bessel_j_two_thirds(int sign, double x) {
    detail::check_j_domain(x);
    return detail::bessel_j(sign > 0 ? 2.0 / 3.0 : -2.0 / 3.0, x);
}

// dJ_{+-1/3}/dx from the order recurrences; x > 0.
inline double bessel_j_third_deriv(int sign, double x) {
    detail::check_j_domain(x);
    if (x == 0.0) throw std::invalid_argument("bessel_j_third_deriv: x must be > 0");
    if (sign > 0)  // J'_{1/3} = J_{-2/3} - (1/3x) J_{1/3}
        return bessel_j_two_thirds(-1, x) - bessel_j_third(+1, x) / (3.0 * x);
    // J'_{-1/3} = -J_{2/3} - (1/3x) J_{-1/3}
    return -bessel_j_two_thirds(+1, x) - bessel_j_third(-1, x) / (3.0 * x);
}

// ---- modified Bessel I (x >= 0), optionally exp(-x)-scaled ----

inline double bessel_i_third(int sign, double x, bool scaled = false) {
    detail::check_nonneg(x, "bessel_i_third");
    const double s = detail::bessel_i_scaled(sign > 0 ? 1.0 / 3.0 : -1.0 / 3.0, x);
    return scaled ? s : s * std::exp(x);
}

inline double bessel_i_two_thirds(int sign, double x, bool scaled = false) {
    detail::check_nonneg(x, "bessel_i_two_thirds");
    const double s = detail::bessel_i_scaled(sign > 0 ? 2.0 / 3.0 : -2.0 / 3.0, x);
    return scaled ? s : s * std::exp(x);
}

// dI_{+-1/3}/dx; x > 0.
inline double bessel_i_third_deriv(int sign, double x, bool scaled = false) {
    detail::check_nonneg(x, "bessel_i_third_deriv");
    if (x == 0.0) throw std::invalid_argument("bessel_i_third_deriv: x must be > 0");
    double v;
    if (sign > 0)  // I'_{1/3} = I_{-2/3} - (1/3x) I_{1/3}
        v = bessel_i_two_thirds(-1, x, true) - bessel_i_third(+1, x, true) / (3.0 * x);
    else  // I'_{-1/3} = I_{2/3} - (1/3x) I_{-1/3}
        v = bessel_i_two_thirds(+1, x, true) - bessel_i_third(-1, x, true) / (3.0 * x);
    return scaled ? v : v * std::exp(x);
}

// ---- K companions (x >= 0), optionally exp(x)-scaled ----

inline double bessel_k_third(double x, bool scaled = false) {
    detail::check_nonneg(x, "bessel_k_third");
    if (x == 0.0) return std::numeric_limits<double>::infinity();
    if (x < 2.0) {
        const double v = detail::bessel_k_small(1.0 / 3.0, x);
        return scaled ? v * std::exp(x) : v;
    }
    const double s = detail::bessel_k_scaled_integral(1.0 / 3.0, x);
    return scaled ? s : s * std::exp(-x);
}

inline double bessel_k_two_thirds(double x, bool scaled = false) {
    detail::check_nonneg(x, "bessel_k_two_thirds");
    if (x == 0.0) return std::numeric_limits<double>::infinity();
    if (x < 2.0) {
        const double v = detail::bessel_k_small(2.0 / 3.0, x);
        return scaled ? v * std::exp(x) : v;
    }
    const double s = detail::bessel_k_scaled_integral(2.0 / 3.0, x);
    return scaled ? s : s * std::exp(-x);
}

}  // namespace gravtime::specfun
