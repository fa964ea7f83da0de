#include "gasket/zero_cloud.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>

#include "gasket/errors.hpp"

namespace gasket {

std::string to_string(ZeroSource s) {
    switch (s) {
        case ZeroSource::T_family: return "T";
        case ZeroSource::M_family: return "M";
        case ZeroSource::Z_family: return "Z";
    }
    return "?";
}

std::string to_string(SeedTag s) {
    switch (s) {
        case SeedTag::minus_one: return "-1";
        case SeedTag::minus_two: return "-2";
        case SeedTag::minus_three: return "-3";
    }
    return "?";
}

BigInt ZeroCloud::total_multiplicity() const {
    BigInt total = 0;
    for (const auto& p : points) total += p.multiplicity;
    return total;
}

namespace {

std::int64_t pow3_i64(unsigned n) {
    std::int64_t p = 1;
    for (unsigned i = 0; i < n; ++i) p *= 3;
    return p;
}

void append_orbit_levels(ZeroCloud& cloud, const std::complex<double>& seed,
                         SeedTag tag, InverseMap map, unsigned from_depth,
                         unsigned to_depth, auto mult_of_depth, const BranchConfig& cfg) {
    const auto levels = backward_orbit(seed, to_depth, map, cfg);
    for (unsigned j = from_depth; j <= to_depth; ++j) {
        const std::int64_t mult = mult_of_depth(j);
        if (mult == 0) continue;
        for (const auto& node : levels[j]) {
            cloud.points.push_back(ZeroPoint{node.value, mult, j, tag, node.path, 0});
        }
    }
}

}  // namespace

ZeroCloud zeros_of_T(unsigned n, const BranchConfig& cfg) {
    ZeroCloud cloud;
    cloud.source = ZeroSource::T_family;
    cloud.level = n;
    if (n > 0) {
        append_orbit_levels(
            cloud, {-2.0, 0.0}, SeedTag::minus_two, InverseMap::g_map, 0, n - 1,
            [n](unsigned j) { return pow3_i64(n - j - 1); }, cfg);
    }
    append_orbit_levels(
        cloud, {-1.0, 0.0}, SeedTag::minus_one, InverseMap::g_map, n, n,
        [](unsigned) { return std::int64_t{1}; }, cfg);
    return cloud;
}

ZeroCloud zeros_of_M(unsigned n, const BranchConfig& cfg) {
    ZeroCloud cloud;
    cloud.source = ZeroSource::M_family;
    cloud.level = n;
    if (n > 0) {
        append_orbit_levels(
            cloud, {-1.0, 0.0}, SeedTag::minus_one, InverseMap::f_map, 0, n - 1,
            [n](unsigned j) { return pow3_i64(n - j - 1); }, cfg);
    }
    append_orbit_levels(
        cloud, {-3.0, 0.0}, SeedTag::minus_three, InverseMap::f_map, n, n,
        [](unsigned) { return std::int64_t{1}; }, cfg);
    return cloud;
}

ZeroCloud zeros_of_Z(unsigned n, const BranchConfig& cfg) {
    const ZeroCloud m = zeros_of_M(n, cfg);
    ZeroCloud cloud;
    cloud.source = ZeroSource::Z_family;
    cloud.level = n;
    cloud.points.reserve(m.points.size() * 4);
    for (const auto& p : m.points) {
        const auto roots = quartic_roots(p.value);
        for (std::uint8_t k = 0; k < 4; ++k) {
            ZeroPoint q = p;
            q.value = roots[k];
            q.quartic_branch = k;
            cloud.points.push_back(q);
        }
    }
    return cloud;
}

ZeroCloud map_T_cloud_to_M(const ZeroCloud& t_cloud) {
    ZeroCloud out;
    out.source = ZeroSource::M_family;
    out.level = t_cloud.level;
    out.points = t_cloud.points;
    for (auto& p : out.points) {
        p.value = apply_phi_inv(p.value);
        // phi(-1) = -2 and phi(-3) = -1: relabel seeds into the M family.
        p.seed = p.seed == SeedTag::minus_two ? SeedTag::minus_one : SeedTag::minus_three;
    }
    return out;
}

double distance_to_ray(const ZeroCloud& cloud) {
    if (cloud.points.empty()) throw std::invalid_argument("distance_to_ray: empty cloud");
    double best = std::numeric_limits<double>::infinity();
    for (const auto& p : cloud.points) {
        const double d =
            p.value.real() >= 0.0 ? std::abs(p.value.imag()) : std::abs(p.value);
        best = std::min(best, d);
    }
    return best;
}

std::pair<double, double> strip_bounds(const ZeroCloud& cloud) {
    if (cloud.points.empty()) throw std::invalid_argument("strip_bounds: empty cloud");
    double min_re = std::numeric_limits<double>::infinity();
    double max_abs_im = 0.0;
    for (const auto& p : cloud.points) {
        min_re = std::min(min_re, p.value.real());
        max_abs_im = std::max(max_abs_im, std::abs(p.value.imag()));
    }
    return {min_re, max_abs_im};
}

double min_pairwise_distance(const ZeroCloud& cloud) {
    double best = std::numeric_limits<double>::infinity();
    const auto& pts = cloud.points;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            best = std::min(best, std::abs(pts[i].value - pts[j].value));
        }
    }
    return best;
}

double max_pairing_distance(const ZeroCloud& a, const ZeroCloud& b) {
    using Key = std::pair<int, unsigned>;  // (seed class, depth)
    std::map<Key, std::vector<std::complex<double>>> ga, gb;
    for (const auto& p : a.points) ga[{static_cast<int>(p.seed), p.depth}].push_back(p.value);
    for (const auto& p : b.points) gb[{static_cast<int>(p.seed), p.depth}].push_back(p.value);
    if (ga.size() != gb.size())
        throw numeric_error("max_pairing_distance: group structure differs");
    double worst = 0.0;
    for (auto& [key, va] : ga) {
        auto it = gb.find(key);
        if (it == gb.end() || it->second.size() != va.size())
            throw numeric_error("max_pairing_distance: group mismatch at depth " +
                                std::to_string(key.second));
        std::vector<std::complex<double>>& vb = it->second;
        std::vector<bool> used(vb.size(), false);
        for (const auto& pa : va) {
            double best = std::numeric_limits<double>::infinity();
            std::size_t best_j = 0;
            for (std::size_t j = 0; j < vb.size(); ++j) {
                if (used[j]) continue;
                const double d = std::abs(pa - vb[j]);
                if (d < best) {
                    best = d;
                    best_j = j;
                }
            }
            used[best_j] = true;
            worst = std::max(worst, best);
        }
    }
    return worst;
}

}  // namespace gasket
