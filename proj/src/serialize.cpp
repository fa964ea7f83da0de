#include "gasket/serialize.hpp"

#include <cstdio>

namespace gasket {

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {
Json coeff_array(std::span<const BigInt> coeffs) {
    Json arr = Json::array();
    for (const BigInt& c : coeffs) arr.push_back(to_decimal(c));
    return arr;
}
}  // namespace

Json poly_to_json(const IntPolynomial& p) {
    return Json{{"min_power", 0}, {"coeffs", coeff_array(p.coeffs())}};
}

Json poly_to_json(const LaurentPolynomial& p) {
    return Json{{"min_power", p.min_power()}, {"coeffs", coeff_array(p.body().coeffs())}};
}

IntPolynomial int_poly_from_json(const Json& j) {
    const long min_power = j.at("min_power").get<long>();
    if (min_power != 0)
        throw std::invalid_argument("int_poly_from_json: nonzero min_power");
    std::vector<BigInt> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(parse_decimal(c.get<std::string>()));
    return IntPolynomial(std::move(coeffs));
}

LaurentPolynomial laurent_from_json(const Json& j) {
    std::vector<BigInt> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(parse_decimal(c.get<std::string>()));
    return LaurentPolynomial(IntPolynomial(std::move(coeffs)), j.at("min_power").get<long>());
}

Json graph_to_json(const GasketGraph& g) {
    Json edges = Json::array();
    for (const auto& [a, b] : g.edges) edges.push_back(Json::array({a, b}));
    return Json{{"level", g.level},
                {"vertices", g.vertex_count},
                {"edges", std::move(edges)},
                {"corners", Json::array({g.corners[0], g.corners[1], g.corners[2]})}};
}

Json uv_to_json(const UVPair& pair) {
    return Json{{"level", pair.level},
                {"U", poly_to_json(pair.U)},
                {"V", poly_to_json(pair.V)}};
}

Json mn_to_json(const MnRecord& rec) {
    return Json{{"level", rec.level}, {"kind", "M"}, {"poly", poly_to_json(rec.M)}};
}

Json tn_to_json(const TnRecord& rec) {
    Json factors = Json::array();
    for (const auto& [base, mult] : rec.factors) {
        factors.push_back(Json{{"poly", poly_to_json(base)}, {"multiplicity", mult}});
    }
    return Json{{"level", rec.level},
                {"kind", "T"},
                {"poly", poly_to_json(rec.T)},
                {"factors", std::move(factors)}};
}

Json rational_to_json(const Rational& r) {
    return Json{{"num", to_decimal(BigInt(r.get_num()))},
                {"den", to_decimal(BigInt(r.get_den()))}};
}

Json measure_to_json(const AtomicMeasure& m) {
    Json levels = Json::array();
    for (const auto& lvl : m.levels) {
        Json entry{{"map", lvl.map == InverseMap::f_map ? "f" : "g"},
                   {"seed", to_string(lvl.seed)},
                   {"quartic_pullback", lvl.quartic_pullback},
                   {"depth", lvl.depth},
                   {"atom_count", to_decimal(lvl.atom_count)},
                   {"atom_weight", rational_to_json(lvl.atom_weight)}};
        if (!lvl.atoms.empty()) {
            Json atoms = Json::array();
            for (const auto& a : lvl.atoms) {
                atoms.push_back(Json{{"re", format_double(a.value.real())},
                                     {"im", format_double(a.value.imag())},
                                     {"path", a.path},
                                     {"quartic_branch", a.quartic_branch}});
            }
            entry["atoms"] = std::move(atoms);
        }
        levels.push_back(std::move(entry));
    }
    return Json{{"label", m.label},
                {"weight_origin", rational_to_json(m.weight_origin)},
                {"weight_infinity", rational_to_json(m.weight_infinity)},
                {"finite_plane_mass", rational_to_json(m.finite_plane_mass())},
                {"signed_total_mass", rational_to_json(m.signed_total_mass())},
                {"levels", std::move(levels)}};
}

std::string zero_cloud_to_csv(const ZeroCloud& cloud) {
    std::string out = "level,source,depth,multiplicity,re,im\n";
    for (const auto& p : cloud.points) {
        out += std::to_string(cloud.level);
        out += ',';
        out += to_string(cloud.source);
        out += ',';
        out += std::to_string(p.depth);
        out += ',';
        out += std::to_string(p.multiplicity);
        out += ',';
        out += format_double(p.value.real());
        out += ',';
        out += format_double(p.value.imag());
        out += '\n';
    }
    return out;
}

std::string orbit_to_csv(const std::vector<std::pair<std::complex<double>, unsigned>>& pts) {
    std::string out = "depth,re,im\n";
    for (const auto& [v, depth] : pts) {
        out += std::to_string(depth);
        out += ',';
        out += format_double(v.real());
        out += ',';
        out += format_double(v.imag());
        out += '\n';
    }
    return out;
}

std::string pressure_rows_to_csv(const std::vector<PressureRow>& rows) {
    std::string out = "y,level,p,asymptote,difference\n";
    for (const auto& r : rows) {
        out += format_double(r.y);
        out += ',';
        out += std::to_string(r.level);
        out += ',';
        out += format_double(r.p);
        out += ',';
        out += format_double(r.asymptote);
        out += ',';
        out += format_double(r.difference);
        out += '\n';
    }
    return out;
}

}  // namespace gasket
