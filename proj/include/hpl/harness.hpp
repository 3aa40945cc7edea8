#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hpl/catalog.hpp"

namespace hpl {

struct SuiteConfig {
    std::string suite;
    int n = 2;
    int m = 1;
    std::vector<std::string> bodies;  // empty -> catalog defaults for n
    long long samples = 0;            // 0 -> default for nm
    uint64_t seed = 42;
    double z = 3.0;                   // sigma multiplier for Monte Carlo verdicts
    bool no_meta = false;
    std::string catalog_path;         // empty -> HPL_CATALOG or builtin

    // suite-internal knobs without CLI surface
    int affine_maps = 5;       // affine-invariance: maps per body
    int random_cases = 20;     // variational: random (K, theta_bar) pairs
    int pointwise_samples = 1000;  // mixed: sampled directions for gauge inequalities
};

enum class Verdict { Pass, Fail, Inconclusive };
const char* to_string(Verdict v);

struct CheckRecord {
    std::string name;
    std::string anchor;  // canonical inequality the check verifies
    double lhs = 0;
    double rhs = 0;
    double sigma = 0;
    Verdict verdict = Verdict::Pass;
};

struct SuiteReport {
    std::string suite;
    int n = 0;
    int m = 0;
    long long samples = 0;
    uint64_t seed = 0;
    double z = 0;
    double duration_ms = 0;
    std::string generated_at;
    std::vector<CheckRecord> checks;

    bool any_fail() const;
    bool any_inconclusive() const;
    std::string to_json(bool include_meta) const;
    std::string to_csv() const;
    static SuiteReport from_json(const std::string& payload);
};

const std::vector<std::string>& suite_names();

// Resolves defaults, validates, dispatches. ConfigError on bad input;
// individual body failures become FAIL records, never exceptions.
SuiteReport run_suite(const SuiteConfig& cfg);

SuiteReport suite_petty_zhang(const SuiteConfig& cfg, const Catalog& cat);
SuiteReport suite_affine_invariance(const SuiteConfig& cfg, const Catalog& cat);
SuiteReport suite_petty_isoperimetric(const SuiteConfig& cfg, const Catalog& cat);
SuiteReport suite_stability(const SuiteConfig& cfg, const Catalog& cat);
SuiteReport suite_variational(const SuiteConfig& cfg, const Catalog& cat);
SuiteReport suite_mixed(const SuiteConfig& cfg, const Catalog& cat);

// CLI entry point: exit 0 clean (warnings on INCONCLUSIVE), 1 on FAIL,
// 2 on configuration errors.
int run_cli(int argc, char** argv);

}  // namespace hpl
