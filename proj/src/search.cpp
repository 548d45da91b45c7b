#include "gcode/search.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <map>
#include <set>

#include <json.hpp>

#include "gcode/error.hpp"
#include "gcode/random.hpp"

namespace gcode {

WeightProfile WeightProfile::parse(const std::string& text) {
    if (text == "uniform") return {};
    const std::string prefix = "sparse:";
    if (text.rfind(prefix, 0) == 0) {
        const std::string num = text.substr(prefix.size());
        if (!num.empty() && std::all_of(num.begin(), num.end(), ::isdigit)) {
            WeightProfile w;
            w.sparse_weight = std::stoul(num);
            if (w.sparse_weight > 0) return w;
        }
    }
    throw Error(ErrorKind::ParseError, "profile must be 'uniform' or 'sparse:W', got '" + text + "'");
}

std::string WeightProfile::to_string() const {
    return sparse_weight ? "sparse:" + std::to_string(sparse_weight) : "uniform";
}

AlgebraElement sample_element(const AlgebraPtr& alg, const WeightProfile& profile,
                              std::uint64_t seed, std::uint64_t index) {
    auto rng = trial_rng(seed, index);
    const std::size_t n = alg->dim();
    const unsigned q = alg->f().q();
    Vec c(n, 0);
    if (profile.sparse_weight == 0) {
        for (auto& x : c) x = static_cast<Elem>(rng() % q);
    } else {
        std::vector<std::size_t> pos(n);
        for (std::size_t i = 0; i < n; ++i) pos[i] = i;
        const std::size_t w = std::min(profile.sparse_weight, n);
        for (std::size_t i = 0; i < w; ++i) {
            std::swap(pos[i], pos[i + rng() % (n - i)]);
            c[pos[i]] = static_cast<Elem>(1 + rng() % (q - 1));
        }
    }
    return {alg, std::move(c)};
}

SearchRecord evaluate_generator(const AlgebraElement& v, std::uint64_t seed,
                                const DistanceOptions& distance, bool timing) {
    const auto start = std::chrono::steady_clock::now();
    const GroupAlgebra& alg = *v.alg();
    SearchRecord rec;
    rec.group_id = alg.group().id();
    rec.field = alg.field()->spec();
    rec.seed = seed;
    rec.n = alg.dim();
    rec.generator = format_element(v);
    const IdealSubspace c = dual_ideal(principal_ideal(v, Side::Right));
    rec.k = c.dim();
    rec.d_method = "none";
    if (rec.k > 0) {
        DistanceOptions opts = distance;
        // Out of budget: settle for an upper bound from the budgeted prefix.
        if (!opts.early_stop && enumeration_size(alg.f().q(), rec.k) > opts.budget) {
            opts.early_stop = 1;
        }
        const DistanceResult r = min_distance(c.space(), opts);
        rec.d = r.d;
        rec.d_method = r.d ? to_string(r.method) : "none";
    }
    if (timing) {
        rec.elapsed_ms = static_cast<std::uint64_t>(
            std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                                  start)
                .count());
    }
    return rec;
}

SearchResult random_checkable_search(const AlgebraPtr& alg, const SearchOptions& opts) {
    SearchResult out;
    std::map<std::size_t, std::size_t> best;  // k -> record index
    for (std::uint64_t t = 0; t < opts.trials; ++t) {
        const AlgebraElement v = sample_element(alg, opts.profile, opts.seed, t);
        DistanceOptions dopts = opts.distance;
        std::size_t k_guess = alg->dim() - principal_dim(v, Side::Right);
        auto it = best.find(k_guess);
        if (opts.prune && it != best.end() && out.records[it->second].d) {
            dopts.early_stop = *out.records[it->second].d;
        }
        SearchRecord rec = evaluate_generator(v, opts.seed, dopts, opts.timing);
        out.records.push_back(rec);
        const std::size_t idx = out.records.size() - 1;
        auto cur = best.find(rec.k);
        if (cur == best.end()) {
            best[rec.k] = idx;
        } else if (rec.d && rec.d_method == "exhausted") {
            const SearchRecord& b = out.records[cur->second];
            if (!b.d || *rec.d > *b.d || (*rec.d == *b.d && b.d_method != "exhausted")) {
                cur->second = idx;
            }
        }
    }
    for (const auto& [k, idx] : best) out.best.push_back(idx);
    return out;
}

std::optional<GolayResult> golay_search(std::uint64_t seed, std::uint64_t trials) {
    auto alg = GroupAlgebra::create(preset_group("d24"), Field::create(2, 1));
    for (std::uint64_t t = 0; t < trials; ++t) {
        WeightProfile profile{8 + t % 5};
        const AlgebraElement v = sample_element(alg, profile, seed, t);
        if (principal_dim(v, Side::Right, 13) != 12) continue;
        const IdealSubspace c = principal_ideal(v, Side::Right);
        if (!(orthogonal(c.space()) == c.space())) continue;
        const DistanceResult d = min_distance(c.space());
        if (d.d != 8u) continue;
        GolayResult res{evaluate_generator(v, seed, {}), v, true, weight_distribution(c.space()),
                        t + 1};
        return res;
    }
    return std::nullopt;
}

IdealSubspace random_right_ideal(const AlgebraPtr& alg, std::uint64_t seed, std::uint64_t index) {
    auto rng = trial_rng(seed, index);
    const std::size_t count = 1 + rng() % 3;
    const unsigned q = alg->f().q();
    std::vector<AlgebraElement> gens;
    for (std::size_t i = 0; i < count; ++i) {
        Vec c(alg->dim());
        for (auto& x : c) x = static_cast<Elem>(rng() % q);
        gens.emplace_back(alg, std::move(c));
    }
    return generated_ideal(alg, gens, Side::Right);
}

std::optional<WitnessResult> non_checkable_witness_search(const AlgebraPtr& alg,
                                                          const WitnessOptions& opts) {
    const Group& g = alg->group();
    auto attempt = [&](const IdealSubspace& c, std::string what) -> std::optional<WitnessResult> {
        CheckabilityVerdict v = checkable_test(c, opts.principality);
        if (v.status == CheckStatus::NotCheckable) return WitnessResult{c, std::move(v), std::move(what)};
        return std::nullopt;
    };

    if (auto r = attempt(principal_ideal(AlgebraElement::sigma(alg), Side::Right), "K*sigma")) {
        return r;
    }

    std::set<std::vector<std::size_t>> subgroups;
    for (const auto& h : cyclic_subgroups(g)) {
        subgroups.insert(h);
        subgroups.insert(normal_closure(g, h));
    }
    const IdealSubspace aug = augmentation_ideal(alg);
    for (const auto& h : subgroups) {
        if (h.size() == 1 || h.size() == g.order()) continue;
        const AlgebraElement sigma_h = AlgebraElement::subset_sum(alg, h);
        const std::string name = "sigma_H for H = <" + g.label(h[1]) + ",...> (order " +
                                 std::to_string(h.size()) + ")";
        const IdealSubspace induced = principal_ideal(sigma_h, Side::Right);
        if (auto r = attempt(dual_ideal(ideal_intersect(induced, aug)),
                             "dual of (" + name + ")*KG meet augmentation")) {
            return r;
        }
        if (auto r = attempt(induced, name + " * KG")) return r;
    }

    for (std::uint64_t t = 0; t < opts.trials; ++t) {
        if (auto r = attempt(random_right_ideal(alg, opts.seed, t),
                             "random ideal #" + std::to_string(t))) {
            return r;
        }
    }
    return std::nullopt;
}

namespace {

std::string csv_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

}  // namespace

void export_csv(std::ostream& out, const std::vector<SearchRecord>& records) {
    out << "group_id,field,seed,n,k,d,d_method,generator,elapsed_ms\n";
    for (const auto& r : records) {
        out << r.group_id << ',' << csv_quote(r.field) << ',' << r.seed << ',' << r.n << ','
            << r.k << ',';
        if (r.d) out << *r.d;
        out << ',' << r.d_method << ',' << csv_quote(r.generator) << ',' << r.elapsed_ms << '\n';
    }
}

void export_json(std::ostream& out, const std::vector<SearchRecord>& records) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : records) {
        nlohmann::ordered_json j;
        j["group_id"] = r.group_id;
        j["field"] = r.field;
        j["seed"] = r.seed;
        j["n"] = r.n;
        j["k"] = r.k;
        j["d"] = r.d ? nlohmann::ordered_json(*r.d) : nlohmann::ordered_json(nullptr);
        j["d_method"] = r.d_method;
        j["generator"] = r.generator;
        j["elapsed_ms"] = r.elapsed_ms;
        j["checkable"] = true;
        arr.push_back(std::move(j));
    }
    out << arr.dump(2) << '\n';
}

std::vector<SearchRecord> import_json(std::istream& in) {
    nlohmann::json arr;
    try {
        in >> arr;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::IoError, std::string("bad JSON: ") + e.what());
    }
    std::vector<SearchRecord> out;
    try {
        for (const auto& j : arr) {
            SearchRecord r;
            r.group_id = j.at("group_id").get<std::string>();
            r.field = j.at("field").get<std::string>();
            r.seed = j.at("seed").get<std::uint64_t>();
            r.n = j.at("n").get<std::size_t>();
            r.k = j.at("k").get<std::size_t>();
            if (!j.at("d").is_null()) r.d = j.at("d").get<std::size_t>();
            r.d_method = j.at("d_method").get<std::string>();
            r.generator = j.at("generator").get<std::string>();
            r.elapsed_ms = j.at("elapsed_ms").get<std::uint64_t>();
            out.push_back(std::move(r));
        }
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::IoError, std::string("bad record: ") + e.what());
    }
    return out;
}

void export_records(const std::vector<SearchRecord>& records, const std::string& format,
                    const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorKind::IoError, "cannot write '" + path + "'");
    if (format == "csv") export_csv(out, records);
    else if (format == "json") export_json(out, records);
    else throw Error(ErrorKind::ParseError, "format must be csv or json");
    if (!out) throw Error(ErrorKind::IoError, "write to '" + path + "' failed");
}

}  // namespace gcode
