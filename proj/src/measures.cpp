#include "gasket/measures.hpp"

#include <map>
#include <tuple>

#include "gasket/errors.hpp"

namespace gasket {

std::string to_string(MeasureKind k) {
    switch (k) {
        case MeasureKind::tau: return "tau";
        case MeasureKind::mu: return "mu";
        case MeasureKind::zeta: return "zeta";
    }
    return "?";
}

namespace {

std::complex<double> seed_value(SeedTag tag) {
    switch (tag) {
        case SeedTag::minus_one: return {-1.0, 0.0};
        case SeedTag::minus_two: return {-2.0, 0.0};
        case SeedTag::minus_three: return {-3.0, 0.0};
    }
    return {};
}

MeasureLevel make_level(InverseMap map, SeedTag seed, bool quartic, unsigned depth,
                        Rational weight, const MeasureConfig& cfg) {
    MeasureLevel lvl;
    lvl.map = map;
    lvl.seed = seed;
    lvl.quartic_pullback = quartic;
    lvl.depth = depth;
    lvl.atom_count = (quartic ? BigInt(4) : BigInt(1)) * pow2(depth);
    lvl.atom_weight = std::move(weight);
    if (depth <= cfg.point_depth) {
        BranchConfig branch = cfg.branch;
        branch.backward_depth_guard =
            std::max(branch.backward_depth_guard, cfg.point_depth);
        const auto orbit = backward_orbit(seed_value(seed), depth, map, branch);
        for (const auto& node : orbit[depth]) {
            if (quartic) {
                const auto roots = quartic_roots(node.value);
                for (std::uint8_t k = 0; k < 4; ++k) {
                    lvl.atoms.push_back(
                        ZeroPoint{roots[k], 1, depth, seed, node.path, k});
                }
            } else {
                lvl.atoms.push_back(ZeroPoint{node.value, 1, depth, seed, node.path, 0});
            }
        }
    }
    return lvl;
}

Rational inv_pow3(unsigned long e, long num = 1) {
    Rational r(BigInt(num), pow3(e));
    r.canonicalize();
    return r;
}

void check_depth(unsigned d, const MeasureConfig& cfg, const char* who) {
    if (d > cfg.max_depth)
        throw guard_error(std::string(who) + ": depth " + std::to_string(d) +
                          " exceeds guard " + std::to_string(cfg.max_depth));
}

}  // namespace

Rational AtomicMeasure::finite_plane_mass() const {
    Rational total = weight_origin;
    for (const auto& lvl : levels) total += Rational(lvl.atom_count) * lvl.atom_weight;
    total.canonicalize();
    return total;
}

Rational AtomicMeasure::signed_total_mass() const {
    Rational total = finite_plane_mass() + weight_infinity;
    total.canonicalize();
    return total;
}

AtomicMeasure build_measure(MeasureKind kind, unsigned n, const MeasureConfig& cfg) {
    check_depth(n, cfg, "build_measure");
    AtomicMeasure m;
    m.label = to_string(kind) + "_" + std::to_string(n);
    switch (kind) {
        case MeasureKind::tau:
            m.weight_infinity = -1;
            for (unsigned j = 0; j < n; ++j) {
                m.levels.push_back(make_level(InverseMap::g_map, SeedTag::minus_two,
                                              false, j, inv_pow3(j + 1), cfg));
            }
            m.levels.push_back(make_level(InverseMap::g_map, SeedTag::minus_one, false,
                                          n, inv_pow3(n), cfg));
            break;
        case MeasureKind::mu:
            m.weight_infinity = -1;
            for (unsigned j = 0; j < n; ++j) {
                m.levels.push_back(make_level(InverseMap::f_map, SeedTag::minus_one,
                                              false, j, inv_pow3(j + 1), cfg));
            }
            m.levels.push_back(make_level(InverseMap::f_map, SeedTag::minus_three,
                                          false, n, inv_pow3(n), cfg));
            break;
        case MeasureKind::zeta:
            m.weight_origin = make_rational(-1, 4);
            m.weight_infinity = make_rational(-3, 4);
            for (unsigned j = 0; j < n; ++j) {
                m.levels.push_back(make_level(InverseMap::f_map, SeedTag::minus_one,
                                              true, j, inv_pow3(j + 1) / 4, cfg));
            }
            m.levels.push_back(make_level(InverseMap::f_map, SeedTag::minus_three, true,
                                          n, inv_pow3(n) / 4, cfg));
            break;
    }
    return m;
}

AtomicMeasure build_limit_truncation(MeasureKind kind, unsigned truncation_J,
                                     const MeasureConfig& cfg) {
    check_depth(truncation_J, cfg, "build_limit_truncation");
    AtomicMeasure m;
    m.label = to_string(kind) + "_inf_J" + std::to_string(truncation_J);
    switch (kind) {
        case MeasureKind::tau:
            m.weight_infinity = -1;
            for (unsigned j = 0; j < truncation_J; ++j) {
                m.levels.push_back(make_level(InverseMap::g_map, SeedTag::minus_two,
                                              false, j, inv_pow3(j + 1), cfg));
            }
            break;
        case MeasureKind::mu:
            m.weight_infinity = -1;
            for (unsigned j = 0; j < truncation_J; ++j) {
                m.levels.push_back(make_level(InverseMap::f_map, SeedTag::minus_one,
                                              false, j, inv_pow3(j + 1), cfg));
            }
            break;
        case MeasureKind::zeta:
            m.weight_origin = make_rational(-1, 4);
            m.weight_infinity = make_rational(-3, 4);
            for (unsigned j = 0; j < truncation_J; ++j) {
                m.levels.push_back(make_level(InverseMap::f_map, SeedTag::minus_one,
                                              true, j, inv_pow3(j + 1) / 4, cfg));
            }
            break;
    }
    return m;
}

Rational tv_distance(const AtomicMeasure& a, const AtomicMeasure& b) {
    Rational total = abs(a.weight_origin - b.weight_origin) +
                     abs(a.weight_infinity - b.weight_infinity);
    using Key = std::tuple<int, int, bool, unsigned>;
    std::map<Key, const MeasureLevel*> in_a;
    for (const auto& lvl : a.levels) {
        in_a[{static_cast<int>(lvl.map), static_cast<int>(lvl.seed),
              lvl.quartic_pullback, lvl.depth}] = &lvl;
    }
    for (const auto& lvl : b.levels) {
        const Key key{static_cast<int>(lvl.map), static_cast<int>(lvl.seed),
                      lvl.quartic_pullback, lvl.depth};
        auto it = in_a.find(key);
        if (it == in_a.end()) {
            total += Rational(lvl.atom_count) * abs(lvl.atom_weight);
        } else {
            if (it->second->atom_count != lvl.atom_count)
                throw numeric_error("tv_distance: matched groups with unequal counts");
            total += Rational(lvl.atom_count) * abs(it->second->atom_weight - lvl.atom_weight);
            in_a.erase(it);
        }
    }
    for (const auto& [key, lvl] : in_a) {
        total += Rational(lvl->atom_count) * abs(lvl->atom_weight);
    }
    total.canonicalize();
    return total;
}

}  // namespace gasket
