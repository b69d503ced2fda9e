#pragma once

#include <span>

#include "psl213/forms.hpp"
#include "psl213/report.hpp"

namespace psl213 {

VerificationReport run_group_suite(const RunConfig& cfg);
// the optional corruption hook backs the mutation-sensitivity tests
VerificationReport run_forms_suite(const RunConfig& cfg,
                                   const std::optional<DTableMutation>& mutation = std::nullopt);
VerificationReport run_invariance_suite(const RunConfig& cfg);
VerificationReport run_modular_suite(const RunConfig& cfg);
VerificationReport run_singularity_suite(const RunConfig& cfg);
VerificationReport run_icosahedral_suite(const RunConfig& cfg);
VerificationReport run_prop32_suite(const RunConfig& cfg);

// cfg.suite selects one suite name or "all"
std::vector<VerificationReport> run_suites(const RunConfig& cfg);
bool known_suite(const std::string& name);
std::vector<std::string> suite_names();

// Frozen catalog of every check the suites emit, with the identity labels
// each one certifies. The coverage test pins both directions.
struct ManifestEntry {
    const char* check_id;
    const char* suite;
    const char* covers;  // comma-separated identity labels
};
std::span<const ManifestEntry> check_manifest();

// identity labels that must appear in the union of `covers`
std::span<const char* const> required_identity_labels();

}  // namespace psl213
