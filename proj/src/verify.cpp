#include "gasket/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <limits>
#include <ostream>
#include <sstream>

#include "gasket/dynamics.hpp"
#include "gasket/gasket_graph.hpp"
#include "gasket/measures.hpp"
#include "gasket/pressure.hpp"
#include "gasket/recursion.hpp"
#include "gasket/residuals.hpp"
#include "gasket/zero_cloud.hpp"

namespace gasket {

namespace {

using C = std::complex<double>;

// ---------------------------------------------------------------- constants

// Expanded low-to-high coefficient lists of the first three M/T levels and
// the Laurent bodies of the first three partition functions.
const std::vector<std::vector<long>> kFrozenM = {
    {3, 1},
    {13, 15, 3, 1},
    {1099, 3801, 5148, 3700, 1770, 654, 172, 36, 3, 1},
};
const std::vector<std::vector<long>> kFrozenT = {
    {1, 1},
    {2, 3, 3, 1},
    {16, 48, 96, 148, 171, 144, 87, 36, 9, 1},
};
struct FrozenLaurent {
    long min_power;
    std::vector<long> coeffs;
};
const std::vector<FrozenLaurent> kFrozenZ = {
    {-1, {6, 0, 0, 0, 2}},
    {-3, {26, 0, 0, 0, 30, 0, 0, 0, 6, 0, 0, 0, 2}},
    {-9, {2198, 0, 0, 0, 7602, 0, 0, 0, 10296, 0, 0, 0, 7400, 0, 0, 0, 3540,
          0, 0, 0, 1308, 0, 0, 0, 344, 0, 0, 0, 72, 0, 0, 0, 6, 0, 0, 0, 2}},
};

// Regression floor for the distance from the Z-zero cloud to [0, inf):
// the level-by-level oracle run to n = 12 bottoms out at 0.138677 (n = 12),
// and the floor is frozen at 80% of that value.
constexpr double kZGapOracleMinimum = 0.138677;
constexpr double kZGapRegressionFloor = 0.11094;

// Shared evaluation grid in the half plane Re > 10 (boundary-heavy on
// purpose: the estimates are weakest there). 10x10 = 100 points; the
// refinement interleaves midpoints, giving a 19x19 superset.
std::vector<C> h_grid(std::size_t re_steps, std::size_t im_steps) {
    std::vector<C> grid;
    grid.reserve(re_steps * im_steps);
    for (std::size_t i = 0; i < re_steps; ++i) {
        const double re = 10.5 + (200.0 - 10.5) * static_cast<double>(i) /
                                     static_cast<double>(re_steps - 1);
        for (std::size_t j = 0; j < im_steps; ++j) {
            const double im = -45.0 + 90.0 * static_cast<double>(j) /
                                          static_cast<double>(im_steps - 1);
            grid.emplace_back(re, im);
        }
    }
    return grid;
}

// ------------------------------------------------------------ infrastructure

struct Ctx {
    VerifyProfile profile = VerifyProfile::quick;
    Fault fault = Fault::none;
    bool include_fault_injection = true;

    bool full() const { return profile == VerifyProfile::full; }
    bool has(Fault f) const { return fault == f; }
};

struct Check {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            if (!detail.empty()) detail += "; ";
            detail += what;
        }
    }
    void note(const std::string& what) {
        if (!detail.empty()) detail += "; ";
        detail += what;
    }
};

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

IntPolynomial from_longs(const std::vector<long>& coeffs) {
    std::vector<BigInt> c(coeffs.begin(), coeffs.end());
    return IntPolynomial(std::move(c));
}

// ---------------------------------------------------------------- criteria

// M_0..M_2 reproduce their expanded factored forms exactly; the rational
// recursion step is verified at the same levels.
Check criterion_exact_poly(const Ctx& ctx) {
    Check c;
    std::vector<MnRecord> m;
    for (unsigned n = 0; n <= 2; ++n) m.push_back(compute_M(n));
    if (ctx.has(Fault::mn_coefficient)) {
        std::vector<BigInt> bumped(m[1].M.coeffs().begin(), m[1].M.coeffs().end());
        bumped[0] += 1;
        m[1].M = IntPolynomial(std::move(bumped));
    }
    for (unsigned n = 0; n <= 2; ++n) {
        c.require(m[n].M == from_longs(kFrozenM[n]),
                  "M_" + std::to_string(n) + " differs from its frozen expansion");
    }
    // Factored forms multiplied out with exact arithmetic.
    const IntPolynomial m1 = from_longs({13, 2, 1}) * from_longs({1, 1});
    const IntPolynomial m2 = from_longs({157, 72, 26, 0, 1}) * from_longs({7, 0, 1}) *
                             from_longs({1, 1}).pow(3);
    c.require(m[1].M == m1, "M_1 differs from its factored product");
    c.require(m[2].M == m2, "M_2 differs from its factored product");
    for (unsigned n = 1; n <= 2; ++n) {
        c.require(verify_mn_recursion(m[n - 1].M, m[n].M, n),
                  "recursion identity fails at level " + std::to_string(n));
    }
    return c;
}

// Brute-force configuration enumeration agrees with the algebraic recursion.
Check criterion_enumeration(const Ctx& ctx) {
    Check c;
    for (unsigned n = 0; n <= 2; ++n) {
        const GasketGraph g = build_gasket(n);
        const LaurentPolynomial by_enum = enumerate_partition_function(g);
        LaurentPolynomial by_rec = compute_Z(n);
        if (ctx.has(Fault::z_enumeration) && n == 1) {
            by_rec = by_rec + LaurentPolynomial::monomial(1, 1);
        }
        c.require(by_enum == by_rec,
                  "enumeration of level " + std::to_string(n) + " differs from recursion");
        c.require(by_rec == LaurentPolynomial(from_longs(kFrozenZ[n].coeffs),
                                              kFrozenZ[n].min_power),
                  "Z_" + std::to_string(n) + " differs from its frozen expansion");
        const auto [u, v] = enumerate_boundary_sums(g);
        const UVPair uv = compute_UV(n);
        c.require(u == uv.U && v == uv.V,
                  "boundary sums at level " + std::to_string(n) + " differ from recursion");
        c.require(BigInt(2) * u + BigInt(6) * v == by_enum,
                  "Z != 2U + 6V at level " + std::to_string(n));
    }
    return c;
}

// Recursive construction of T_n multiplies back from its factor list.
Check criterion_tn_factorization(const Ctx& ctx) {
    Check c;
    const unsigned top = ctx.full() ? 6 : 3;
    for (unsigned n = 0; n <= top; ++n) {
        TnRecord rec = compute_T(n);  // throws if the internal check fails
        if (ctx.has(Fault::tn_factor) && n == 1) {
            rec.factors[0].first = rec.factors[0].first + IntPolynomial(BigInt(1));
        }
        IntPolynomial product(BigInt(1));
        for (const auto& [base, mult] : rec.factors) product = product * base.pow(mult);
        c.require(product == rec.T,
                  "factored product differs from recursion at level " + std::to_string(n));
        c.require(rec.T.degree() == static_cast<long>(pow3(n).get_ui()) &&
                      rec.T.leading_coeff() == 1,
                  "T_" + std::to_string(n) + " is not monic of degree 3^n");
    }
    for (unsigned n = 0; n <= std::min(top, 2u); ++n) {
        c.require(compute_T(n).T == from_longs(kFrozenT[n]),
                  "T_" + std::to_string(n) + " differs from its frozen expansion");
    }
    return c;
}

Check criterion_conjugacy(const Ctx& ctx) {
    Check c;
    const unsigned top = ctx.full() ? 6 : 3;
    for (unsigned n = 0; n <= top; ++n) {
        MnRecord m = compute_M(n);
        const TnRecord t = compute_T(n);
        if (ctx.has(Fault::conjugacy_scale) && n == 1) {
            m.M = BigInt(2) * m.M;
        }
        const ConjugacyReport rep = verify_conjugacy_identity(m, t);
        c.require(rep.ok, "conjugacy identity fails at level " + std::to_string(n) +
                              (rep.detail.empty() ? "" : " (" + rep.detail + ")"));
    }
    return c;
}

// Monic of degree 3^n, nonzero constant term, 2^(3^n) divides every
// coefficient of M_n(2x+1), and the rational recursion holds level to level.
Check criterion_mn_coefficients(const Ctx& ctx) {
    Check c;
    const unsigned top = ctx.full() ? 6 : 3;
    IntPolynomial prev;
    for (unsigned n = 0; n <= top; ++n) {
        const MnRecord rec = compute_M(n);
        const BigInt deg = pow3(n);
        c.require(rec.M.degree() == static_cast<long>(deg.get_ui()) &&
                      rec.M.leading_coeff() == 1,
                  "M_" + std::to_string(n) + " is not monic of degree 3^n");
        c.require(rec.M.coeff(0) != 0, "M_" + std::to_string(n) + " has zero constant term");
        IntPolynomial shifted = rec.M.compose(IntPolynomial{1, 2});  // M(2x+1)
        if (ctx.has(Fault::mn_shift_divisibility) && n == 1) {
            shifted = shifted + IntPolynomial::monomial(1, 1);
        }
        const BigInt divisor = pow2(deg.get_ui());
        bool divisible = true;
        for (const BigInt& a : shifted.coeffs()) {
            if (!mpz_divisible_p(a.get_mpz_t(), divisor.get_mpz_t())) divisible = false;
        }
        c.require(divisible,
                  "2^(3^n) does not divide M_" + std::to_string(n) + "(2x+1)");
        if (n > 0) {
            c.require(verify_mn_recursion(prev, rec.M, n),
                      "recursion identity fails at level " + std::to_string(n));
        }
        prev = rec.M;
    }
    return c;
}

// tv(zeta_n, truncated zeta_inf at J = n+30) = 2 (2/3)^n - (2/3)^(n+30),
// as exact rationals.
Check criterion_tv_rate(const Ctx& ctx) {
    Check c;
    MeasureConfig cfg;
    cfg.point_depth = 0;  // weight bookkeeping only; geometry is irrelevant here
    const unsigned top = ctx.full() ? 10 : 6;
    for (unsigned n = 0; n <= top; ++n) {
        const unsigned J = n + 30;
        AtomicMeasure zn = build_measure(MeasureKind::zeta, n, cfg);
        const AtomicMeasure zinf = build_limit_truncation(MeasureKind::zeta, J, cfg);
        if (ctx.has(Fault::tv_weight) && n == 2) {
            zn.levels[0].atom_weight += make_rational(1, 1000);
        }
        const Rational got = tv_distance(zn, zinf);
        Rational expected = Rational(2) * Rational(pow2(n), pow3(n)) -
                            Rational(pow2(J), pow3(J));
        expected.canonicalize();
        c.require(got == expected, "tv rate mismatch at n = " + std::to_string(n));
    }
    return c;
}

// Finite-plane mass of mu_n is exactly 1; signed total mass of zeta_n is 0.
Check criterion_mass(const Ctx& ctx) {
    Check c;
    MeasureConfig cfg;
    cfg.point_depth = 0;
    const unsigned top = ctx.full() ? 10 : 6;
    for (unsigned n = 1; n <= top; ++n) {
        AtomicMeasure mu = build_measure(MeasureKind::mu, n, cfg);
        AtomicMeasure zeta = build_measure(MeasureKind::zeta, n, cfg);
        if (ctx.has(Fault::mass_weight) && n == 1) {
            mu.levels[0].atom_weight += make_rational(1, 1000);
            zeta.levels[0].atom_weight += make_rational(1, 1000);
        }
        c.require(mu.finite_plane_mass() == 1,
                  "finite-plane mass of mu_" + std::to_string(n) + " is not 1");
        c.require(zeta.signed_total_mass() == 0,
                  "signed mass of zeta_" + std::to_string(n) + " is not 0");
        c.require(mu.signed_total_mass() == 0,
                  "signed mass of mu_" + std::to_string(n) + " is not 0");
    }
    return c;
}

// Every cloud point is a root of the exact polynomial to relative residual
// 1e-6, and the g-orbit clouds keep pairwise separation above 1e-6.
Check criterion_residuals(const Ctx& ctx) {
    Check c;
    const unsigned top = ctx.full() ? 6 : 4;
    double worst_rel = 0.0;
    double min_sep = std::numeric_limits<double>::infinity();
    for (unsigned n = 0; n <= top; ++n) {
        ZeroCloud tc = zeros_of_T(n);
        ZeroCloud mc = zeros_of_M(n);
        if (ctx.has(Fault::zero_displacement) && n == 2 && tc.points.size() > 3) {
            tc.points.back().value += 1e-3;
        }
        c.require(tc.total_multiplicity() == pow3(n),
                  "T-cloud multiplicity sum wrong at level " + std::to_string(n));
        c.require(mc.total_multiplicity() == pow3(n),
                  "M-cloud multiplicity sum wrong at level " + std::to_string(n));
        const ResidualReport rt = check_residuals(compute_T(n).T, tc);
        const ResidualReport rm = check_residuals(compute_M(n).M, mc);
        worst_rel = std::max({worst_rel, rt.worst_relative, rm.worst_relative});
        c.require(rt.worst_relative < 1e-6,
                  "T-cloud residual " + fmt(rt.worst_relative) + " at level " +
                      std::to_string(n));
        c.require(rm.worst_relative < 1e-6,
                  "M-cloud residual " + fmt(rm.worst_relative) + " at level " +
                      std::to_string(n));
        if (n >= 1) min_sep = std::min(min_sep, min_pairwise_distance(tc));
    }
    c.require(min_sep > 1e-6, "g-orbit cloud separation " + fmt(min_sep) + " below 1e-6");
    c.note("worst residual " + fmt(worst_rel) + ", min separation " + fmt(min_sep));
    return c;
}

// Inverse identity, monotone escape, and the normalized iteration-error
// supremum (the empirical constant of the asymptotic estimate).
Check criterion_inverse_branch(const Ctx& ctx) {
    Check c;
    const unsigned iterations = ctx.full() ? 1000 : 200;
    const auto coarse = ctx.full() ? h_grid(10, 10) : h_grid(5, 5);
    const auto fine = ctx.full() ? h_grid(19, 19) : h_grid(9, 9);

    double worst_inverse = 0.0;
    for (const C& x : coarse) {
        C hx = apply_h(x);
        if (ctx.has(Fault::h_identity)) hx += 1e-6;
        worst_inverse = std::max(worst_inverse,
                                 std::abs(apply_f(hx) - x) / (1.0 + std::abs(x)));
    }
    c.require(worst_inverse < 1e-10,
              "inverse identity error " + fmt(worst_inverse) + " exceeds 1e-10");

    const auto normalized_sup = [&](const std::vector<C>& grid, bool check_escape) {
        double sup = 0.0;
        for (const C& x : grid) {
            C v = x;
            for (unsigned n = 1; n <= iterations; ++n) {
                v = apply_h(v);
                if (check_escape && !(v.real() - x.real() - 3.0 * n > 0.0)) {
                    c.require(false, "escape rate below 3 per step at n = " +
                                         std::to_string(n));
                    check_escape = false;
                }
                const double err = std::abs(
                    v - x - 4.0 * static_cast<double>(n) +
                    4.0 * std::log((x + 4.0 * static_cast<double>(n)) / x));
                sup = std::max(sup, err * x.real() / std::log(x.real()));
            }
        }
        return sup;
    };
    const double c_coarse = normalized_sup(coarse, true);
    const double c_fine = normalized_sup(fine, false);
    c.require(std::isfinite(c_coarse) && std::isfinite(c_fine),
              "normalized iteration error is not finite");
    c.require(c_fine <= 1.5 * c_coarse,
              "normalized error supremum unstable under grid refinement: " +
                  fmt(c_coarse) + " -> " + fmt(c_fine));
    c.note("fitted C = " + fmt(c_fine) + " (coarse grid " + fmt(c_coarse) + ")");
    return c;
}

// Abel equation at the pinned iteration count, and exact realness of the
// Fatou coordinate on the real axis.
Check criterion_fatou(const Ctx& ctx) {
    Check c;
    const unsigned n = ctx.full() ? 1000 : 200;
    const auto grid = ctx.full() ? h_grid(10, 10) : h_grid(5, 5);
    double worst = 0.0;
    for (const C& x : grid) {
        const C defect = fatou_F(apply_h(x), n) - fatou_F(x, n) - 4.0;
        worst = std::max(worst, std::abs(defect));
    }
    c.require(worst < 1e-6, "Abel-equation defect " + fmt(worst) +
                                " exceeds 1e-6 at n = " + std::to_string(n));
    for (double x : {10.5, 11.0, 12.0, 20.0, 50.0, 100.0, 200.0, 1000.0}) {
        const C fx = fatou_F(C(x, 0.0), n);
        c.require(fx.imag() == 0.0,
                  "F_n(" + fmt(x) + ") has nonzero imaginary part");
    }
    return c;
}

// Positive distance from the Z-zero clouds to the positive real axis, with
// the frozen regression floor and level-to-level stability.
Check criterion_gap(const Ctx& ctx) {
    Check c;
    const unsigned top = ctx.full() ? 12 : 9;
    std::vector<double> gaps_z, gaps_m;
    for (unsigned n = 0; n <= top; ++n) {
        double gz = distance_to_ray(zeros_of_Z(n));
        const double gm = distance_to_ray(zeros_of_M(n));
        if (ctx.has(Fault::gap_scale)) gz *= 0.5;
        gaps_z.push_back(gz);
        gaps_m.push_back(gm);
        c.require(gz > 0.0 && gm > 0.0,
                  "zero gap not positive at level " + std::to_string(n));
        c.require(gz >= kZGapRegressionFloor,
                  "Z-cloud gap " + fmt(gz) + " below regression floor " +
                      fmt(kZGapRegressionFloor) + " at level " + std::to_string(n));
    }
    for (unsigned n = 8; n < gaps_z.size() - 1; ++n) {
        const double rz = gaps_z[n + 1] / gaps_z[n];
        const double rm = gaps_m[n + 1] / gaps_m[n];
        c.require(std::abs(rz - 1.0) <= 0.2 && std::abs(rm - 1.0) <= 0.2,
                  "gap sequence unstable between levels " + std::to_string(n) + " and " +
                      std::to_string(n + 1));
    }
    c.note("min Z-gap " + fmt(*std::min_element(gaps_z.begin(), gaps_z.end())) +
           " (oracle minimum " + fmt(kZGapOracleMinimum) + ")");
    return c;
}

// The log-space scheme reproduces exact big-integer evaluation, and the
// large-y pressure hugs (3/4) log y.
Check criterion_pressure(const Ctx& ctx) {
    Check c;
    const unsigned exact_top = ctx.full() ? 4 : 3;
    for (unsigned n = 0; n <= exact_top; ++n) {
        const LaurentPolynomial z = compute_Z(n);
        for (const Rational& y : {Rational(2), Rational(3), make_rational(1, 2)}) {
            const double exact =
                log_abs(z.eval(y)) / (4.0 * std::pow(3.0, static_cast<double>(n)));
            double scheme = pressure_eval(C(y.get_d(), 0.0), n).p_value;
            if (ctx.has(Fault::pressure_bias)) scheme *= 1.0 + 1e-8;
            c.require(std::abs(scheme - exact) <= 1e-10 * std::abs(exact),
                      "scheme/exact mismatch at n = " + std::to_string(n));
        }
    }
    const double e2 = std::abs(pressure_eval({1e2, 0.0}, 50).p_value - 0.75 * std::log(1e2));
    const double e3 = std::abs(pressure_eval({1e3, 0.0}, 50).p_value - 0.75 * std::log(1e3));
    const double e4 = std::abs(pressure_eval({1e4, 0.0}, 50).p_value - 0.75 * std::log(1e4));
    // Tie guard at float resolution: the asymptote error underflows the
    // 53-bit noise floor of log-space evaluation well before y = 1e4.
    const double tie = 1e-13;
    c.require(e2 + tie >= e3 && e3 + tie >= e4,
              "asymptote error not decreasing: " + fmt(e2) + ", " + fmt(e3) + ", " + fmt(e4));
    c.require(e4 < 1e-2, "asymptote error at y = 1e4 is " + fmt(e4));
    c.note("e(1e2) = " + fmt(e2) + ", e(1e4) = " + fmt(e4));
    return c;
}

struct CriterionEntry {
    std::string id;
    std::function<Check(const Ctx&)> run;
};

Check criterion_fault_injection(const Ctx& ctx);

const std::vector<CriterionEntry>& criteria() {
    static const std::vector<CriterionEntry> list = {
        {"exact-polynomial-reproduction", criterion_exact_poly},
        {"enumeration-oracle", criterion_enumeration},
        {"tn-factorization-identity", criterion_tn_factorization},
        {"conjugacy-identity", criterion_conjugacy},
        {"mn-coefficient-arithmetic", criterion_mn_coefficients},
        {"tv-convergence-rate", criterion_tv_rate},
        {"measure-mass-bookkeeping", criterion_mass},
        {"zero-residuals-and-simplicity", criterion_residuals},
        {"inverse-branch-estimates", criterion_inverse_branch},
        {"fatou-coordinate", criterion_fatou},
        {"zero-gap-to-ray", criterion_gap},
        {"pressure-asymptote", criterion_pressure},
        {"fault-injection", criterion_fault_injection},
    };
    return list;
}

const std::vector<std::pair<Fault, std::string>>& fault_table() {
    static const std::vector<std::pair<Fault, std::string>> table = {
        {Fault::mn_coefficient, "exact-polynomial-reproduction"},
        {Fault::z_enumeration, "enumeration-oracle"},
        {Fault::tn_factor, "tn-factorization-identity"},
        {Fault::conjugacy_scale, "conjugacy-identity"},
        {Fault::mn_shift_divisibility, "mn-coefficient-arithmetic"},
        {Fault::tv_weight, "tv-convergence-rate"},
        {Fault::mass_weight, "measure-mass-bookkeeping"},
        {Fault::zero_displacement, "zero-residuals-and-simplicity"},
        {Fault::h_identity, "inverse-branch-estimates"},
        {Fault::gap_scale, "zero-gap-to-ray"},
        {Fault::pressure_bias, "pressure-asymptote"},
    };
    return table;
}

// Every listed fault, injected on a quick run of its criterion, must flip
// that criterion to FAIL.
Check criterion_fault_injection(const Ctx& ctx) {
    Check c;
    if (!ctx.include_fault_injection) {
        c.note("skipped in nested run");
        return c;
    }
    for (const auto& [fault, id] : fault_table()) {
        Ctx sub;
        sub.profile = VerifyProfile::quick;
        sub.fault = fault;
        sub.include_fault_injection = false;
        for (const auto& entry : criteria()) {
            if (entry.id != id) continue;
            const Check sub_check = entry.run(sub);
            c.require(!sub_check.ok,
                      "fault '" + to_string(fault) + "' was not detected by " + id);
        }
    }
    c.note(std::to_string(fault_table().size()) + " faults injected and detected");
    return c;
}

CriterionResult run_one(const CriterionEntry& entry, const Ctx& ctx) {
    const auto start = std::chrono::steady_clock::now();
    CriterionResult result;
    result.id = entry.id;
    try {
        const Check c = entry.run(ctx);
        result.passed = c.ok;
        result.detail = c.detail;
    } catch (const std::exception& e) {
        result.passed = false;
        result.detail = std::string("exception: ") + e.what();
    }
    result.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

}  // namespace

std::optional<Fault> fault_from_name(const std::string& name) {
    if (name == "none") return Fault::none;
    for (const auto& [fault, id] : fault_table()) {
        if (to_string(fault) == name) return fault;
    }
    return std::nullopt;
}

std::string to_string(Fault f) {
    switch (f) {
        case Fault::none: return "none";
        case Fault::mn_coefficient: return "mn-coefficient";
        case Fault::z_enumeration: return "z-enumeration";
        case Fault::tn_factor: return "tn-factor";
        case Fault::conjugacy_scale: return "conjugacy-scale";
        case Fault::mn_shift_divisibility: return "mn-shift-divisibility";
        case Fault::tv_weight: return "tv-weight";
        case Fault::mass_weight: return "mass-weight";
        case Fault::zero_displacement: return "zero-displacement";
        case Fault::h_identity: return "h-identity";
        case Fault::gap_scale: return "gap-scale";
        case Fault::pressure_bias: return "pressure-bias";
    }
    return "?";
}

std::vector<std::pair<Fault, std::string>> detectable_faults() { return fault_table(); }

std::vector<CriterionResult> run_verification(const VerifyOptions& options) {
    Ctx ctx;
    ctx.profile = options.profile;
    ctx.fault = options.fault;
    ctx.include_fault_injection = options.include_fault_injection;
    std::vector<CriterionResult> results;
    for (const auto& entry : criteria()) {
        if (entry.id == "fault-injection" &&
            (!ctx.include_fault_injection || !ctx.full() || ctx.fault != Fault::none)) {
            continue;
        }
        results.push_back(run_one(entry, ctx));
    }
    return results;
}

CriterionResult run_criterion(const std::string& id, const VerifyOptions& options) {
    Ctx ctx;
    ctx.profile = options.profile;
    ctx.fault = options.fault;
    ctx.include_fault_injection = options.include_fault_injection;
    for (const auto& entry : criteria()) {
        if (entry.id == id) return run_one(entry, ctx);
    }
    throw std::invalid_argument("unknown criterion id: " + id);
}

std::vector<std::string> criterion_ids() {
    std::vector<std::string> ids;
    for (const auto& entry : criteria()) ids.push_back(entry.id);
    return ids;
}

int print_report(const std::vector<CriterionResult>& results, std::ostream& os) {
    bool all = true;
    for (const auto& r : results) {
        os << (r.passed ? "[PASS] " : "[FAIL] ") << r.id;
        char buf[32];
        std::snprintf(buf, sizeof(buf), " (%.2fs)", r.seconds);
        os << buf;
        if (!r.detail.empty()) os << ": " << r.detail;
        os << "\n";
        all = all && r.passed;
    }
    os << (all ? "verification: all criteria passed\n"
               : "verification: at least one criterion failed\n");
    return all ? 0 : 1;
}

}  // namespace gasket
