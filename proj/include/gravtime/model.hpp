#pragma once
// Physical constants, particle catalog, launch scenarios, and the
// characteristic length/time scales of quantum motion under uniform gravity.

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gravtime {

struct PhysicalConstants {
    double hbar = 1.054571817e-34;  // J s (CODATA)
    double g = 9.80665;             // m/s^2, standard gravity

    void validate() const {
        if (!(hbar > 0.0)) throw std::invalid_argument("hbar must be positive");
        if (!(g > 0.0)) throw std::invalid_argument("g must be positive");
    }
};

struct Particle {
    std::string name;
    double mass_kg = 0.0;
    std::string mass_text;  // decimal string exactly as listed in the catalog

    Particle() = default;
    Particle(std::string n, double m) : name(std::move(n)), mass_kg(m) {
        if (!(mass_kg > 0.0)) throw std::invalid_argument("particle mass must be positive");
    }
    Particle(std::string n, std::string text) : name(std::move(n)), mass_text(std::move(text)) {
        const char* first = mass_text.data();
        const char* last = first + mass_text.size();
        auto [ptr, ec] = std::from_chars(first, last, mass_kg);
        if (ec != std::errc{} || ptr != last || !(mass_kg > 0.0))
            throw std::invalid_argument("bad particle mass: " + mass_text);
    }
};

// Catalog file format: one `name mass_kg` pair per line, '#' starts a comment.
// Mass strings are kept verbatim so reports can echo them unreformatted.
class ParticleCatalog {
  public:
    static ParticleCatalog builtin() {
        ParticleCatalog c;
        c.add(Particle("electron", std::string("9.109e-31")));
        c.add(Particle("neutron", std::string("1.674e-27")));
        return c;
    }

    static ParticleCatalog load(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw std::runtime_error("cannot open particle catalog: " + path);
        ParticleCatalog c;
        std::string line;
        while (std::getline(in, line)) {
            if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
            std::istringstream ls(line);
            std::string name, mass;
            if (!(ls >> name)) continue;
            if (!(ls >> mass)) throw std::runtime_error("catalog line missing mass: " + line);
            c.add(Particle(name, mass));
        }
        return c;
    }

    void add(Particle p) {
        for (auto& q : particles_)
            if (q.name == p.name) { q = std::move(p); return; }
        particles_.push_back(std::move(p));
    }

    const Particle& find(const std::string& name) const {
        for (const auto& p : particles_)
            if (p.name == name) return p;
        throw std::invalid_argument("unknown particle: " + name);
    }

    bool contains(const std::string& name) const {
        for (const auto& p : particles_)
            if (p.name == name) return true;
        return false;
    }

    const std::vector<Particle>& all() const { return particles_; }

  private:
    std::vector<Particle> particles_;
};

// A launch configuration. Canonical on (z_i, z_cap); the initial speed and
// the total energy are derived, never stored.
struct Scenario {
    Particle particle;
    double g = 9.80665;   // m/s^2
    double z_i = 0.0;     // launch height, m
    double z_cap = 0.0;   // turning height, m
    double hbar = PhysicalConstants{}.hbar;

    Scenario(Particle p, double grav, double zi, double zcap,
             double hb = PhysicalConstants{}.hbar)
        : particle(std::move(p)), g(grav), z_i(zi), z_cap(zcap), hbar(hb) {
        if (!(particle.mass_kg > 0.0)) throw std::invalid_argument("particle mass must be positive");
        if (!(g > 0.0)) throw std::invalid_argument("g must be positive");
        if (!(z_cap >= z_i)) throw std::invalid_argument("z_cap must not lie below z_i");
        if (!(hbar > 0.0)) throw std::invalid_argument("hbar must be positive");
    }

    static Scenario from_initial_speed(Particle p, double grav, double zi, double vi,
                                       double hb = PhysicalConstants{}.hbar) {
        if (!(vi >= 0.0)) throw std::invalid_argument("initial speed must be non-negative");
        return Scenario(std::move(p), grav, zi, zi + vi * vi / (2.0 * grav), hb);
    }

    double height() const { return z_cap - z_i; }
    double initial_speed() const { return std::sqrt(2.0 * g * height()); }
    double energy() const { return particle.mass_kg * g * z_cap; }  // E = m g z_cap
};

struct CharacteristicScales {
    double L_q = 0.0;  // (hbar^2 / 2 m^2 g)^{1/3}, m
    double T_q = 0.0;  // (hbar / 4 m g^2)^{1/3}, s
};

inline CharacteristicScales scales(const Particle& p, double g,
                                   double hbar = PhysicalConstants{}.hbar) {
    if (!(p.mass_kg > 0.0)) throw std::invalid_argument("particle mass must be positive");
    if (!(g > 0.0)) throw std::invalid_argument("g must be positive");
    if (!(hbar > 0.0)) throw std::invalid_argument("hbar must be positive");
    const double m = p.mass_kg;
    CharacteristicScales s;
    s.L_q = std::cbrt(hbar * hbar / (2.0 * m * m * g));
    s.T_q = std::cbrt(hbar / (4.0 * m * g * g));
    return s;
}

inline CharacteristicScales scales(const Scenario& sc) {
    return scales(sc.particle, sc.g, sc.hbar);
}

// Classical scattering time, mass independent: 2 sqrt(2 (z_cap - z_i) / g).
inline double cst(const Scenario& sc) {
    return 2.0 * std::sqrt(2.0 * sc.height() / sc.g);
}

struct DimensionlessParams {
    double beta_q = 0.0;   // (cst / 4 T_q)^2, equals (z_cap - z_i)/L_q
    double alpha_q = 0.0;  // (4/3) beta_q^{3/2}
};

inline DimensionlessParams dimensionless(const Scenario& sc) {
    const double tq = scales(sc).T_q;
    const double r = cst(sc) / (4.0 * tq);
    DimensionlessParams d;
    d.beta_q = r * r;
    d.alpha_q = (4.0 / 3.0) * d.beta_q * std::sqrt(d.beta_q);
    return d;
}

// zeta(z) = (2/3) (|z - z_cap| / L_q)^{3/2}
inline double zeta(double z, const Scenario& sc) {
    const double s = std::fabs(z - sc.z_cap) / scales(sc).L_q;
    return (2.0 / 3.0) * s * std::sqrt(s);
}

}  // namespace gravtime
