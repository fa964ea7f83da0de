#ifndef GASKET_MEASURES_HPP
#define GASKET_MEASURES_HPP

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gasket/bigint.hpp"
#include "gasket/dynamics.hpp"
#include "gasket/zero_cloud.hpp"

namespace gasket {

enum class MeasureKind { tau, mu, zeta };

std::string to_string(MeasureKind k);

struct MeasureConfig {
    // Levels up to this depth get their atom locations materialized from the
    // backward orbit; deeper levels keep exact weight/count bookkeeping only
    // (2^depth atoms per level make geometry storage pointless beyond this).
    unsigned point_depth = 12;
    // Hard cap on requested level / truncation depth.
    unsigned max_depth = 64;
    BranchConfig branch;
};

// One backward-orbit level of an atomic measure: `count` atoms of equal
// weight sharing (map, seed, quartic, depth) provenance. The atoms of a
// group are pairwise distinct and disjoint from every other group's, so
// total-variation arithmetic only needs the per-group bookkeeping.
struct MeasureLevel {
    InverseMap map = InverseMap::f_map;
    SeedTag seed = SeedTag::minus_one;
    bool quartic_pullback = false;
    unsigned depth = 0;
    BigInt atom_count;
    Rational atom_weight;
    // Materialized only for depth <= MeasureConfig::point_depth.
    std::vector<ZeroPoint> atoms;
};

// Finite signed atomic measure with explicit bookkeeping atoms at the origin
// and at infinity. Exact rational weights throughout.
struct AtomicMeasure {
    std::string label;
    Rational weight_origin;
    Rational weight_infinity;
    std::vector<MeasureLevel> levels;

    // Total weight of the finite-plane atoms (origin included).
    Rational finite_plane_mass() const;
    // Finite-plane mass plus the atom at infinity.
    Rational signed_total_mass() const;
};

// Level-n normalized root measures of the three polynomial families:
//   tau:  g-orbits of -2 (depths < n) and -1 (depth n), minus delta(inf);
//   mu:   f-orbits of -1 (depths < n) and -3 (depth n), minus delta(inf);
//   zeta: quartic pullback of mu scaled by 1/4,
//         with -(1/4) delta(0) - (3/4) delta(inf).
AtomicMeasure build_measure(MeasureKind kind, unsigned n, const MeasureConfig& cfg = {});

// Truncation of the limiting measure: the first J backward-orbit levels of
// the infinite series (no terminal seed level).
AtomicMeasure build_limit_truncation(MeasureKind kind, unsigned truncation_J,
                                     const MeasureConfig& cfg = {});

// Exact total-variation distance. Atoms are identified by provenance
// (map, seed, quartic, depth, branch word), never by floating comparison;
// matched groups must agree in atom count.
Rational tv_distance(const AtomicMeasure& a, const AtomicMeasure& b);

}  // namespace gasket

#endif
