#pragma once

// Principality of one-sided ideals and checkability of group codes.
//
// A right ideal C is checkable (C = ann_r(v) for one v) exactly when its dual
// C^⊥ is a principal right ideal, and then v = hat(w) for C^⊥ = wKG.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gcode/algebra.hpp"

namespace gcode {

enum class PrincipalStatus { Principal, NotPrincipal, Unknown };
enum class CheckStatus { Checkable, NotCheckable, Unknown };
enum class VerdictMethod { Exhaustive, Randomized, LocalAlgebra };

const char* to_string(PrincipalStatus s) noexcept;
const char* to_string(CheckStatus s) noexcept;
const char* to_string(VerdictMethod m) noexcept;

inline constexpr std::uint64_t kDefaultSeed = 20240611;

struct PrincipalityOptions {
    std::uint64_t exhaustive_budget = std::uint64_t{1} << 20;
    unsigned random_trials = 200;
    std::uint64_t seed = kDefaultSeed;
    /// Use the exact dim(M/MJ) criterion when KG is local.
    bool local_algebra = true;
    /// Try the p-subgroup restriction bound before enumerating.
    bool restriction_bound = true;
};

struct PrincipalityVerdict {
    PrincipalStatus status = PrincipalStatus::Unknown;
    std::optional<AlgebraElement> witness;
    VerdictMethod method = VerdictMethod::Exhaustive;
    std::uint64_t trials_used = 0;
    std::uint64_t seed = 0;
    /// Human-readable certificate, e.g. the dimension count behind a negative.
    std::string detail;
};

struct CheckabilityVerdict {
    CheckStatus status = CheckStatus::Unknown;
    std::optional<AlgebraElement> check_element;
    PrincipalityVerdict via;
};

/// Decision cascade: zero ideal; local algebra dim(M/MJ) <= 1; restriction to
/// p-subgroups H (dim M/M·I_H > |G:H| rules out one generator); exhaustive
/// enumeration within the budget; seeded random trials. Only the exact paths
/// report NotPrincipal.
PrincipalityVerdict principality_test(const IdealSubspace& m, Side side,
                                      const PrincipalityOptions& opts = {});

/// dim(M / M·I_H) with I_H the augmentation ideal of KH, acting on `side`.
std::size_t top_dimension(const IdealSubspace& m, Side side, const std::vector<std::size_t>& h);

CheckabilityVerdict checkable_test(const IdealSubspace& c, const PrincipalityOptions& opts = {});

/// True iff ann_r(v) equals the code.
bool verify_check_element(const AlgebraElement& v, const Subspace& code);

/// Every right ideal of KG is checkable: true when char K does not divide
/// |G|, otherwise G must be p-nilpotent with a cyclic Sylow p-subgroup.
bool classify_code_checkable(const Group& g, const Field& k);

struct RadicalPowerRow {
    unsigned r = 0;
    std::size_t dim = 0;
    PrincipalityVerdict principal;
    CheckabilityVerdict checkable;
};

struct RadicalPowerReport {
    unsigned p = 0, m = 0, top = 0;  // top = m(p-1)
    std::vector<RadicalPowerRow> rows;
    /// Principal powers are exactly J^0, the one-dimensional J^top and 0.
    bool principal_claim = false;
    /// Among nonzero powers, exactly J^0 and J^1 are checkable.
    bool checkable_claim = false;
};

/// Powers J^0 .. J^(top+1) of the radical of GF(p)[elem_abelian(p, m)].
RadicalPowerReport reed_muller_experiment(unsigned p, unsigned m,
                                          const PrincipalityOptions& opts = {});

}  // namespace gcode
