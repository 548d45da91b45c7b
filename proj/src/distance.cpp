// Minimum distance and weight distribution by full codeword enumeration.
//
// The message space is cut into a fixed list of units that depends only on
// the code, never on the thread count. Workers pull units from a shared
// counter; results are merged per unit index, so every output is the same
// for any number of threads. With an early-stop weight the answer is the
// first hit of the lowest-index unit that has one.

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <cmath>
#include <limits>
#include <thread>

#include "gcode/code.hpp"
#include "gcode/error.hpp"

namespace gcode {

namespace {

constexpr std::size_t kNoWeight = std::numeric_limits<std::size_t>::max();
constexpr unsigned kUnitBits = 6;

struct UnitResult {
    std::size_t best = kNoWeight;
    bool hit = false;
    std::uint64_t count = 0;
    std::vector<std::uint64_t> hist;
};

unsigned worker_count(unsigned requested, std::size_t units) {
    unsigned t = requested ? requested : std::max(1u, std::thread::hardware_concurrency());
    return static_cast<unsigned>(std::min<std::size_t>(t, std::max<std::size_t>(units, 1)));
}

// Runs fn(u) for u < units. Units above the lowest hit so far are skipped.
template <class Fn>
std::vector<UnitResult> run_units(std::size_t units, unsigned threads, Fn fn) {
    std::vector<UnitResult> results(units);
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> first_hit{units};
    auto work = [&] {
        for (;;) {
            const std::size_t u = next.fetch_add(1);
            if (u >= units) return;
            if (u > first_hit.load()) continue;
            results[u] = fn(u);
            if (results[u].hit) {
                std::size_t cur = first_hit.load();
                while (u < cur && !first_hit.compare_exchange_weak(cur, u)) {
                }
            }
        }
    };
    const unsigned t = worker_count(threads, units);
    if (t <= 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned i = 0; i < t; ++i) pool.emplace_back(work);
    }
    return results;
}

struct Mode {
    std::size_t stop_at = 0;  // stop once weight <= stop_at (0: never)
    bool histogram = false;
};

// ---- binary: bit-packed Gray code ----

template <std::size_t W>
struct BinaryCode {
    std::vector<std::array<std::uint64_t, W>> rows;
    std::size_t n;

    explicit BinaryCode(const Subspace& code) : n(code.ambient_dim()) {
        for (std::size_t r = 0; r < code.dim(); ++r) {
            std::array<std::uint64_t, W> bits{};
            auto row = code.basis().row(r);
            for (std::size_t i = 0; i < n; ++i) {
                if (row[i]) bits[i / 64] |= std::uint64_t{1} << (i % 64);
            }
            rows.push_back(bits);
        }
    }

    UnitResult run_unit(std::size_t unit, unsigned unit_bits, const Mode& mode) const {
        const std::size_t k = rows.size();
        const std::size_t low = k - unit_bits;
        std::array<std::uint64_t, W> cw{};
        for (unsigned b = 0; b < unit_bits; ++b) {
            if ((unit >> b) & 1) {
                for (std::size_t w = 0; w < W; ++w) cw[w] ^= rows[low + b][w];
            }
        }
        UnitResult res;
        if (mode.histogram) res.hist.assign(n + 1, 0);
        auto visit = [&](const std::array<std::uint64_t, W>& c) {
            std::size_t wt = 0;
            for (std::size_t w = 0; w < W; ++w) wt += std::popcount(c[w]);
            ++res.count;
            if (mode.histogram) ++res.hist[wt];
            if (wt < res.best) {
                res.best = wt;
                if (wt <= mode.stop_at) {
                    res.hit = true;
                    return true;
                }
            }
            return false;
        };
        if (unit != 0 && visit(cw)) return res;
        const std::uint64_t steps = (std::uint64_t{1} << low) - 1;
        for (std::uint64_t c = 1; c <= steps; ++c) {
            const auto& row = rows[std::countr_zero(c)];
            for (std::size_t w = 0; w < W; ++w) cw[w] ^= row[w];
            if (visit(cw)) return res;
        }
        return res;
    }
};

// ---- q-ary: projective enumeration over GF(p)-expanded rows ----

struct QaryCode {
    const Field& f;
    std::size_t n, k;
    unsigned p, m;
    // expanded[i * m + t] = x^t * row_i, kept sparse for the inner loop
    std::vector<Vec> expanded;
    std::vector<std::vector<std::uint32_t>> support;

    struct Unit {
        std::size_t lead;
        std::uint64_t prefix;
        unsigned prefix_digits;
        unsigned low_digits;
    };
    std::vector<Unit> units;

    explicit QaryCode(const Subspace& code)
        : f(*code.field()), n(code.ambient_dim()), k(code.dim()), p(f.p()), m(f.m()) {
        Elem xt = 1;
        std::vector<Elem> powers;
        for (unsigned t = 0; t < m; ++t) {
            powers.push_back(xt);
            xt = f.mul(xt, f.primitive_x());
        }
        for (std::size_t i = 0; i < k; ++i) {
            for (unsigned t = 0; t < m; ++t) {
                Vec v(n);
                std::vector<std::uint32_t> s;
                auto row = code.basis().row(i);
                for (std::size_t c = 0; c < n; ++c) {
                    v[c] = f.mul(powers[t], row[c]);
                    if (v[c]) s.push_back(static_cast<std::uint32_t>(c));
                }
                expanded.push_back(std::move(v));
                support.push_back(std::move(s));
            }
        }
        const unsigned max_prefix =
            std::max(1u, static_cast<unsigned>(std::log(64.0) / std::log(double(p)) + 1e-9));
        for (std::size_t lead = 0; lead < k; ++lead) {
            const unsigned free = static_cast<unsigned>((k - 1 - lead) * m);
            const unsigned pd = std::min(free, max_prefix);
            std::uint64_t count = 1;
            for (unsigned i = 0; i < pd; ++i) count *= p;
            for (std::uint64_t pre = 0; pre < count; ++pre) {
                units.push_back({lead, pre, pd, free - pd});
            }
        }
    }

    std::uint64_t unit_size(const Unit& u) const {
        std::uint64_t s = 1;
        for (unsigned i = 0; i < u.low_digits; ++i) {
            if (s > UINT64_MAX / p) return UINT64_MAX;
            s *= p;
        }
        return s;
    }

    UnitResult run_unit(std::size_t index, const Mode& mode) const {
        const Unit& u = units[index];
        // Free digits of lead j are the expanded rows after row j; the prefix
        // takes the last ones.
        const std::size_t first_free = (u.lead + 1) * m;
        const std::size_t first_prefix = first_free + u.low_digits;
        Vec cw = expanded[u.lead * m];
        std::uint64_t pre = u.prefix;
        for (unsigned d = 0; d < u.prefix_digits; ++d, pre /= p) {
            const Elem times = static_cast<Elem>(pre % p);
            const auto& row = expanded[first_prefix + d];
            for (unsigned c = 0; c < times; ++c) {
                for (std::size_t i = 0; i < n; ++i) cw[i] = f.add(cw[i], row[i]);
            }
        }
        std::size_t wt = 0;
        for (Elem x : cw) wt += x != 0;

        UnitResult res;
        if (mode.histogram) res.hist.assign(n + 1, 0);
        auto visit = [&] {
            ++res.count;
            if (mode.histogram) ++res.hist[wt];
            if (wt < res.best) {
                res.best = wt;
                if (wt <= mode.stop_at) {
                    res.hit = true;
                    return true;
                }
            }
            return false;
        };
        if (visit()) return res;
        // Modular p-ary Gray code: step c -> c+1 adds the row whose digit is
        // the p-adic valuation of c+1.
        std::vector<unsigned> counter(u.low_digits + 1, 0);
        for (;;) {
            unsigned d = 0;
            while (d < u.low_digits && counter[d] == p - 1) counter[d++] = 0;
            if (d == u.low_digits) break;
            ++counter[d];
            const auto& row = expanded[first_free + d];
            for (auto i : support[first_free + d]) {
                const bool was = cw[i] != 0;
                cw[i] = f.add(cw[i], row[i]);
                wt = wt - was + (cw[i] != 0);
            }
            if (visit()) return res;
        }
        return res;
    }
};

template <class Code>
std::vector<UnitResult> run_binary(const Code& code, std::size_t max_units, unsigned unit_bits,
                                   unsigned threads, const Mode& mode) {
    return run_units(max_units, threads,
                     [&](std::size_t u) { return code.run_unit(u, unit_bits, mode); });
}

DistanceResult merge_min(const std::vector<UnitResult>& results, bool complete) {
    DistanceResult out;
    std::size_t best = kNoWeight;
    for (const auto& r : results) {
        out.enumerated += r.count;
        best = std::min(best, r.best);
        if (r.hit) {
            out.d = r.best;
            // weight 1 cannot be beaten, so the early stop is exact there
            out.method = r.best == 1 ? DistanceMethod::Exhausted : DistanceMethod::Bounded;
            return out;
        }
    }
    if (best != kNoWeight) out.d = best;
    out.method = complete ? DistanceMethod::Exhausted : DistanceMethod::Bounded;
    return out;
}

template <std::size_t W>
std::vector<UnitResult> binary_pass(const Subspace& code, const DistanceOptions* opts,
                                    std::uint64_t budget, unsigned threads, const Mode& mode,
                                    bool& complete) {
    BinaryCode<W> bc(code);
    const std::size_t k = code.dim();
    const unsigned unit_bits = static_cast<unsigned>(std::min<std::size_t>(kUnitBits, k - 1));
    const std::size_t units = std::size_t{1} << unit_bits;
    if (k - unit_bits > 62) {
        throw Error(ErrorKind::ScaleExceeded, "binary enumeration supports k <= 68");
    }
    const std::uint64_t unit_size = std::uint64_t{1} << (k - unit_bits);
    std::size_t max_units = units;
    complete = true;
    if (opts && enumeration_size(2, k) > budget) {
        max_units = static_cast<std::size_t>(std::max<std::uint64_t>(1, budget / unit_size));
        max_units = std::min(max_units, units);
        complete = max_units == units;
    }
    return run_binary(bc, max_units, unit_bits, threads, mode);
}

std::vector<UnitResult> binary_dispatch(const Subspace& code, const DistanceOptions* opts,
                                        std::uint64_t budget, unsigned threads, const Mode& mode,
                                        bool& complete) {
    const std::size_t words = (code.ambient_dim() + 63) / 64;
    switch (words) {
        case 0:
        case 1: return binary_pass<1>(code, opts, budget, threads, mode, complete);
        case 2: return binary_pass<2>(code, opts, budget, threads, mode, complete);
        case 3: return binary_pass<3>(code, opts, budget, threads, mode, complete);
        case 4: return binary_pass<4>(code, opts, budget, threads, mode, complete);
        default: return binary_pass<8>(code, opts, budget, threads, mode, complete);
    }
}

std::vector<UnitResult> qary_pass(const Subspace& code, bool early, std::uint64_t budget,
                                  unsigned threads, const Mode& mode, bool& complete) {
    QaryCode qc(code);
    std::size_t max_units = qc.units.size();
    complete = true;
    if (early && enumeration_size(qc.f.q(), code.dim()) > budget) {
        std::uint64_t start = 0;
        max_units = 0;
        while (max_units < qc.units.size() && start < budget) {
            start += qc.unit_size(qc.units[max_units]);
            ++max_units;
        }
        complete = max_units == qc.units.size();
    }
    return run_units(max_units, threads, [&](std::size_t u) { return qc.run_unit(u, mode); });
}

}  // namespace

DistanceResult min_distance(const Subspace& code, const DistanceOptions& opts) {
    const std::size_t k = code.dim();
    if (k == 0) return {};
    const unsigned q = code.field()->q();
    const std::uint64_t total = enumeration_size(q, k);
    if (total > opts.budget && !opts.early_stop) {
        throw Error(ErrorKind::BudgetExceeded,
                    "enumerating " + std::to_string(q) + "^" + std::to_string(k) +
                        " codewords exceeds budget " + std::to_string(opts.budget));
    }
    if (code.ambient_dim() > 512) {
        throw Error(ErrorKind::ScaleExceeded, "distance enumeration supports n <= 512");
    }
    Mode mode;
    mode.stop_at = opts.early_stop.value_or(0);
    bool complete = true;
    std::vector<UnitResult> results =
        q == 2 ? binary_dispatch(code, &opts, opts.budget, opts.threads, mode, complete)
               : qary_pass(code, opts.early_stop.has_value(), opts.budget, opts.threads, mode,
                           complete);
    return merge_min(results, complete);
}

std::vector<std::uint64_t> weight_distribution(const Subspace& code, std::uint64_t budget,
                                               unsigned threads) {
    const std::size_t n = code.ambient_dim();
    std::vector<std::uint64_t> dist(n + 1, 0);
    dist[0] = 1;
    const std::size_t k = code.dim();
    if (k == 0) return dist;
    const unsigned q = code.field()->q();
    const std::uint64_t total = enumeration_size(q, k);
    if (total > budget || (q > 2 && total > budget / (q - 1))) {
        throw Error(ErrorKind::BudgetExceeded,
                    "weight distribution of " + std::to_string(q) + "^" + std::to_string(k) +
                        " codewords exceeds budget " + std::to_string(budget));
    }
    if (n > 512) throw Error(ErrorKind::ScaleExceeded, "distance enumeration supports n <= 512");
    Mode mode;
    mode.histogram = true;
    bool complete = true;
    auto results = q == 2 ? binary_dispatch(code, nullptr, budget, threads, mode, complete)
                          : qary_pass(code, false, budget, threads, mode, complete);
    const std::uint64_t scale = q == 2 ? 1 : q - 1;
    for (const auto& r : results) {
        for (std::size_t w = 0; w <= n; ++w) dist[w] += r.hist[w] * scale;
    }
    return dist;
}

}  // namespace gcode
