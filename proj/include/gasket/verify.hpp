#ifndef GASKET_VERIFY_HPP
#define GASKET_VERIFY_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace gasket {

// One-shot verification suite. Every check pins its tolerance and depth in
// code; the quick profile trims depths for a fast smoke run, the full
// profile runs everything at the depths the checks are specified at.
enum class VerifyProfile { quick, full };

// Deliberate single-identity perturbations, used to prove the suite actually
// trips when a computation goes wrong. Each fault is applied to a local copy
// inside one criterion; the engine itself is never modified.
enum class Fault {
    none,
    mn_coefficient,
    z_enumeration,
    tn_factor,
    conjugacy_scale,
    mn_shift_divisibility,
    tv_weight,
    mass_weight,
    zero_displacement,
    h_identity,
    gap_scale,
    pressure_bias,
};

std::optional<Fault> fault_from_name(const std::string& name);
std::string to_string(Fault f);
std::vector<std::pair<Fault, std::string>> detectable_faults();  // fault -> criterion id

struct CriterionResult {
    std::string id;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

struct VerifyOptions {
    VerifyProfile profile = VerifyProfile::quick;
    Fault fault = Fault::none;
    // The fault-injection criterion re-enters the suite; sub-runs disable it.
    bool include_fault_injection = true;
};

std::vector<CriterionResult> run_verification(const VerifyOptions& options);

// Runs a single criterion by id (as listed in criterion_ids()).
CriterionResult run_criterion(const std::string& id, const VerifyOptions& options);

std::vector<std::string> criterion_ids();

// Prints one pass/fail line per criterion; returns 0 iff all passed.
int print_report(const std::vector<CriterionResult>& results, std::ostream& os);

}  // namespace gasket

#endif
