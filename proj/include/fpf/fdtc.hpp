#pragma once

#include "fpf/matrix.hpp"
#include "fpf/trackmap.hpp"

#include <string>
#include <vector>

namespace fpf {

struct Fdtc {
    Rational value{0};
    std::string str() const;  // "p/q", integers without denominator
    bool operator==(const Fdtc&) const = default;
};

Fdtc make_fdtc(long num, long den = 1);

// Rotation m/k of a permutation of k cyclically ordered points (perm[i] = image of i).
// Throws std::invalid_argument unless perm is a cyclic rotation.
Rational rotation_fraction(const std::vector<int>& perm);

// Fractional part of c(h) read off from how the map permutes the peripheral cusps.
Rational boundary_rotation(const TrackMap& m);

// c(D^n h^k) = n + k c(h)
Fdtc fdtc_compose(const Fdtc& base, long boundary_twists, long power);

// c(beta) = 2 c(h): braid level -> surface level, and back.
Fdtc cover_relation(const Fdtc& c_braid);
Fdtc braid_level(const Fdtc& c_surface);

constexpr long kDefaultFdtcBound = 2;

struct LspaceAdmissibility {
    bool within_bound;  // |c| < bound
    bool nonzero;       // c != 0
    bool admissible() const { return within_bound && nonzero; }
};
LspaceAdmissibility lspace_admissible(const Fdtc& c_braid, long bound = kDefaultFdtcBound);

// Base coefficients of the carried families.  Pseudo-Anosovs on the Camel track have a
// single peripheral cusp, so c(beta_i) has no fractional part; the integer part is taken
// to be 0 and all twisting goes through fdtc_compose.  The beta_n family's 1/2 is input.
inline Fdtc beta_i_base() { return Fdtc{}; }
inline Fdtc beta_n_base() { return make_fdtc(1, 2); }

}  // namespace fpf
