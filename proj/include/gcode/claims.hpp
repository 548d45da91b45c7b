#pragma once

// Reproduction suites: each check recomputes one published or derived claim
// from scratch and reports pass/fail with the numbers behind it.

#include <cstdint>
#include <string>
#include <vector>

#include "gcode/checkability.hpp"
#include "gcode/code.hpp"

namespace gcode {

struct ClaimResult {
    int criterion = 0;  // 0 for informational lines
    std::string name;
    bool pass = false;
    bool gating = true;
    std::string detail;
    double seconds = 0;
};

struct ClaimOptions {
    std::uint64_t seed = kDefaultSeed;
    unsigned threads = 0;
    std::uint64_t distance_budget = std::uint64_t{1} << 33;
    PrincipalityOptions principality;
    std::uint64_t golay_trials = 1'000'000;
    /// Also evaluate u in the order-64 quotient given by the completed
    /// presentation (informational).
    bool completed_g64 = true;
    /// Random cases per property and per algebra.
    unsigned cases = 100;
};

struct CatalogEntry {
    const char* preset;
    unsigned p;
    bool code_checkable;
};

/// Frozen predicate values for the classification catalog, p | |G|.
const std::vector<CatalogEntry>& classification_catalog();

std::vector<ClaimResult> check_binary_code(const ClaimOptions& opts);       // 1
std::vector<ClaimResult> check_ternary_code(const ClaimOptions& opts);      // 2
std::vector<ClaimResult> check_klein_pair(const ClaimOptions& opts);        // 3
std::vector<ClaimResult> check_radical_powers(const ClaimOptions& opts);    // 4
std::vector<ClaimResult> check_classification(const ClaimOptions& opts);    // 5
std::vector<ClaimResult> check_annihilators(const ClaimOptions& opts);      // 6
std::vector<ClaimResult> check_properties(const ClaimOptions& opts);        // 7
std::vector<ClaimResult> check_presentations(const ClaimOptions& opts);     // 8
std::vector<ClaimResult> check_golay(const ClaimOptions& opts);             // 9

/// all | golay | remark29 | reed_muller | classification | ex211 | acceptance
std::vector<ClaimResult> run_claims(const std::string& scope, const ClaimOptions& opts);

/// One line per result: "PASS [1] name (1.2s): detail".
std::string format_claim(const ClaimResult& r);

/// An idempotent power of a: a^M with M a multiple of the exponent of the
/// unit group of K[a] and at least dim KG.
AlgebraElement idempotent_power(const AlgebraElement& a);

}  // namespace gcode
