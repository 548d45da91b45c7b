#pragma once

// Group codes: subspaces of K^|G| in the group-element coordinate basis,
// their duals under the standard dot product, and minimum distance.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "gcode/algebra.hpp"

namespace gcode {

enum class DistanceMethod { Exhausted, Bounded };

const char* to_string(DistanceMethod m) noexcept;

struct DistanceResult {
    /// Empty for the zero code, or for a bounded run that found nothing.
    std::optional<std::size_t> d;
    DistanceMethod method = DistanceMethod::Exhausted;
    std::uint64_t enumerated = 0;
};

struct DistanceOptions {
    std::uint64_t budget = std::uint64_t{1} << 33;
    /// Stop at the first codeword of weight <= early_stop.
    std::optional<std::size_t> early_stop;
    /// 0 means std::thread::hardware_concurrency().
    unsigned threads = 0;
};

class CodeSubspace {
public:
    explicit CodeSubspace(IdealSubspace ideal) : ideal_(std::move(ideal)) {}

    const IdealSubspace& ideal() const noexcept { return ideal_; }
    const Subspace& space() const noexcept { return ideal_.space(); }
    const AlgebraPtr& alg() const noexcept { return ideal_.alg(); }
    std::size_t n() const noexcept { return ideal_.alg()->dim(); }
    std::size_t k() const noexcept { return ideal_.dim(); }

    const std::optional<DistanceResult>& distance() const noexcept { return distance_; }
    const DistanceResult& compute_distance(const DistanceOptions& opts = {});

    /// "[n,k,d]", "[n,k,<=d]" for bounded or "[n,k]" if not computed.
    std::string params() const;

private:
    IdealSubspace ideal_;
    std::optional<DistanceResult> distance_;
};

CodeSubspace dual_code(const CodeSubspace& c);
IdealSubspace dual_ideal(const IdealSubspace& c);

/// Cross-checks the nullspace dual against hat(ann_l(C)); always true for a
/// correct implementation.
bool macwilliams_dual_check(const IdealSubspace& c);

/// Number of codewords a full enumeration visits: 2^k - 1 for q = 2,
/// (q^k - 1)/(q - 1) otherwise. Saturates at UINT64_MAX.
std::uint64_t enumeration_size(unsigned q, std::size_t k);

DistanceResult min_distance(const Subspace& code, const DistanceOptions& opts = {});

/// A_0..A_n. Throws BudgetExceeded when q^k > budget.
std::vector<std::uint64_t> weight_distribution(const Subspace& code,
                                               std::uint64_t budget = std::uint64_t{1} << 33,
                                               unsigned threads = 0);

/// Reference distance by naive message-space enumeration; used by tests.
std::size_t naive_min_distance(const Subspace& code);

struct CodeFileHeader {
    std::string group_id;
    std::string field_spec;
    std::string side;
};

void write_code(std::ostream& out, const IdealSubspace& code);
/// Reads the header line and the generator matrix. The matrix is returned in
/// its stored form; the caller resolves the group.
std::pair<CodeFileHeader, Matrix> read_code_file(std::istream& in);
/// Reads a code file and resolves the group through the preset registry.
IdealSubspace read_code(std::istream& in);

}  // namespace gcode
