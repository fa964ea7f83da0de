#ifndef GASKET_ZERO_CLOUD_HPP
#define GASKET_ZERO_CLOUD_HPP

#include <complex>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "gasket/bigint.hpp"
#include "gasket/dynamics.hpp"

namespace gasket {

enum class ZeroSource { T_family, M_family, Z_family };
enum class SeedTag { minus_one, minus_two, minus_three };

std::string to_string(ZeroSource s);
std::string to_string(SeedTag s);

struct ZeroPoint {
    std::complex<double> value;
    std::int64_t multiplicity = 1;
    unsigned depth = 0;
    SeedTag seed = SeedTag::minus_one;
    std::uint64_t path = 0;
    // 0..3 for points obtained as fourth roots (Z family), 0 otherwise.
    std::uint8_t quartic_branch = 0;
};

// All zeros of one member of a polynomial family, counted with multiplicity
// and tagged with backward-orbit provenance.
struct ZeroCloud {
    ZeroSource source = ZeroSource::T_family;
    unsigned level = 0;
    std::vector<ZeroPoint> points;

    BigInt total_multiplicity() const;
};

// T_n zeros: g-orbit of -1 at depth n (simple) plus g-orbits of -2 at depths
// j < n with multiplicity 3^(n-j-1). Total multiplicity 3^n.
ZeroCloud zeros_of_T(unsigned n, const BranchConfig& cfg = {});

// M_n zeros: f-orbits of -1 at depths j < n with multiplicity 3^(n-j-1) plus
// the f-orbit of -3 at depth n (simple). Total multiplicity 3^n.
ZeroCloud zeros_of_M(unsigned n, const BranchConfig& cfg = {});

// Numerator zeros of Z_n: the four fourth roots of every M_n zero. Total
// multiplicity 4*3^n.
ZeroCloud zeros_of_Z(unsigned n, const BranchConfig& cfg = {});

// Pointwise image of a T cloud under phi^{-1}(z) = (z+4)/z; matches the M
// cloud of the same level up to numerical error (conjugacy cross-check).
ZeroCloud map_T_cloud_to_M(const ZeroCloud& t_cloud);

// Minimum distance from the cloud to the closed ray [0, inf):
// |Im p| when Re p >= 0, |p| otherwise. Cloud must be nonempty.
double distance_to_ray(const ZeroCloud& cloud);

// (min over points of Re, max over points of |Im|).
std::pair<double, double> strip_bounds(const ZeroCloud& cloud);

// Minimum distance between distinct-provenance points of the cloud.
double min_pairwise_distance(const ZeroCloud& cloud);

// Greedy provenance-aware pairing: greatest distance between matched points
// of two clouds that should agree as multisets (per depth and seed class).
// Throws numeric_error if the clouds do not have matching shape.
double max_pairing_distance(const ZeroCloud& a, const ZeroCloud& b);

}  // namespace gasket

#endif
