#pragma once

// Randomized construction of checkable group codes and searches for
// non-checkable ideals.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "gcode/checkability.hpp"
#include "gcode/code.hpp"

namespace gcode {

struct SearchRecord {
    std::string group_id;
    std::string field;
    std::uint64_t seed = 0;  // master seed of the run
    std::size_t n = 0, k = 0;
    std::optional<std::size_t> d;
    std::string d_method;  // exhausted | bounded | none
    /// v with C = (vKG)^⊥; hat(v) is a check element of C.
    std::string generator;
    std::uint64_t elapsed_ms = 0;

    bool operator==(const SearchRecord&) const = default;
};

struct WeightProfile {
    /// 0 means uniform coefficients; otherwise the support size.
    std::size_t sparse_weight = 0;

    /// "uniform" or "sparse:W"
    static WeightProfile parse(const std::string& text);
    std::string to_string() const;
};

struct SearchOptions {
    std::uint64_t trials = 100;
    WeightProfile profile;
    std::uint64_t seed = kDefaultSeed;
    DistanceOptions distance;
    /// Prune each distance run at the best d already seen for the same k.
    bool prune = true;
    /// Wall-clock times vary between runs; leave off for byte-identical output.
    bool timing = false;
};

struct SearchResult {
    std::vector<SearchRecord> records;
    /// Index into `records` of the best d for each k that occurred.
    std::vector<std::size_t> best;
};

/// Draws one element by the profile from the generator for trial `index`.
AlgebraElement sample_element(const AlgebraPtr& alg, const WeightProfile& profile,
                              std::uint64_t seed, std::uint64_t index);

/// Record for the code C = (vKG)^⊥ of a given v.
SearchRecord evaluate_generator(const AlgebraElement& v, std::uint64_t seed,
                                const DistanceOptions& distance, bool timing = false);

SearchResult random_checkable_search(const AlgebraPtr& alg, const SearchOptions& opts);

struct GolayResult {
    SearchRecord record;
    AlgebraElement generator;
    bool self_dual = false;
    std::vector<std::uint64_t> weights;
    std::uint64_t trials_used = 0;
};

/// Looks in F2[D24] for v with vKG a self-dual [24,12,8] code, drawing sparse
/// elements of weight 8..12.
std::optional<GolayResult> golay_search(std::uint64_t seed, std::uint64_t trials);

struct WitnessResult {
    IdealSubspace ideal;
    CheckabilityVerdict verdict;
    std::string description;
};

struct WitnessOptions {
    std::uint64_t trials = 200;
    std::uint64_t seed = kDefaultSeed;
    PrincipalityOptions principality;
};

/// Structured candidates first (K·σ, then duals of σ_H·KG ∩ I for cyclic H
/// and their normal closures), then random sums of principal right ideals.
/// Returns the first ideal with an exact NotCheckable verdict.
std::optional<WitnessResult> non_checkable_witness_search(const AlgebraPtr& alg,
                                                          const WitnessOptions& opts = {});

/// Sum of 1-3 principal right ideals with uniform generators.
IdealSubspace random_right_ideal(const AlgebraPtr& alg, std::uint64_t seed, std::uint64_t index);

void export_csv(std::ostream& out, const std::vector<SearchRecord>& records);
void export_json(std::ostream& out, const std::vector<SearchRecord>& records);
std::vector<SearchRecord> import_json(std::istream& in);
/// Writes CSV or JSON depending on `format` ("csv" or "json").
void export_records(const std::vector<SearchRecord>& records, const std::string& format,
                    const std::string& path);

}  // namespace gcode
