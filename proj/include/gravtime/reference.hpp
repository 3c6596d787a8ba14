#pragma once
// Published reference values the table and validity reports compare against.
// The strings are echoed verbatim; the doubles are their parsed values.

namespace gravtime::reference {

struct TableRow {
    const char* particle;
    const char* mass_text;       // kg
    const char* tq_text;         // s
    const char* collision_text;  // zero-flight collision time, s
    double tq;
    double collision;
};

inline constexpr TableRow quoted_scales[] = {
    {"electron", "9.109e-31", "1.496e-8", "1.259e-8", 1.496e-8, 1.259e-8},
    {"neutron", "1.674e-27", "1.221e-9", "1.028e-9", 1.221e-9, 1.028e-9},
};

// Quoted heights above which the high-flight asymptote is stated to hold.
inline constexpr double validity_height_electron_m = 0.274e-15;
inline constexpr double validity_height_neutron_m = 0.183e-15;

}  // namespace gravtime::reference
