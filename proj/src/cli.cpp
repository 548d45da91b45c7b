#include "gcode/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "gcode/checkability.hpp"
#include "gcode/claims.hpp"
#include "gcode/code.hpp"
#include "gcode/error.hpp"
#include "gcode/presentation.hpp"
#include "gcode/search.hpp"

namespace gcode {

namespace {

using json = nlohmann::ordered_json;

struct RunConfig {
    std::string preset;
    std::string presentation;
    std::string field = "GF(2)";
    std::string element;
    std::string element_file;
    std::string code_file;
    std::string out;
    std::string group_out;
    std::string matrix_in;
    std::string matrix_out;
    std::string format = "csv";
    std::string profile = "uniform";
    std::string scope = "all";
    std::string side = "right";
    std::uint64_t budget = std::uint64_t{1} << 33;
    std::optional<std::size_t> early_stop;
    std::uint64_t exhaustive_budget = std::uint64_t{1} << 20;
    unsigned trials = 200;
    std::uint64_t search_trials = 100;
    std::uint64_t golay_trials = 1'000'000;
    std::uint64_t seed = kDefaultSeed;
    unsigned threads = 0;
    unsigned p = 2, m = 2;
    bool json_out = false;
    bool dual = false;
    bool no_dual = false;
    bool timing = false;
};

std::string read_text(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::IoError, "cannot read '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorKind::IoError, "cannot write '" + path + "'");
    return out;
}

GroupPtr resolve_group(const RunConfig& cfg, const std::string& fallback = "") {
    if (!cfg.presentation.empty()) {
        std::string text = cfg.presentation;
        std::string id = "presentation";
        if (text.find('<') == std::string::npos) {
            id = std::filesystem::path(text).stem().string();
            text = read_text(text);
        }
        return todd_coxeter(parse_presentation(text), kDefaultMaxCosets, id);
    }
    const std::string name = cfg.preset.empty() ? fallback : cfg.preset;
    if (name.empty()) throw Error(ErrorKind::ParseError, "no group given (--preset or --presentation)");
    return preset_group(name);
}

AlgebraElement resolve_element(const RunConfig& cfg, const AlgebraPtr& alg) {
    std::string text = cfg.element;
    if (!cfg.element_file.empty()) text = read_text(cfg.element_file);
    if (text.empty()) throw Error(ErrorKind::ParseError, "no element given (--element)");
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.pop_back();
    return parse_element(alg, text);
}

Side parse_side(const std::string& s) {
    if (s == "right") return Side::Right;
    if (s == "left") return Side::Left;
    throw Error(ErrorKind::ParseError, "side must be right or left");
}

IdealSubspace load_code(const RunConfig& cfg) {
    if (cfg.code_file.empty()) throw Error(ErrorKind::ParseError, "no code file given (--code)");
    std::ifstream in(cfg.code_file);
    if (!in) throw Error(ErrorKind::IoError, "cannot read '" + cfg.code_file + "'");
    auto [header, m] = read_code_file(in);
    auto alg = GroupAlgebra::create(resolve_group(cfg, header.group_id), m.field());
    if (m.cols() != alg->dim()) {
        throw Error(ErrorKind::AmbientMismatch, "code length " + std::to_string(m.cols()) +
                                                    " but |G| = " + std::to_string(alg->dim()));
    }
    return IdealSubspace::from_subspace(alg, Subspace::row_space(m));
}

PrincipalityOptions principality_options(const RunConfig& cfg) {
    PrincipalityOptions o;
    o.exhaustive_budget = cfg.exhaustive_budget;
    o.random_trials = cfg.trials;
    o.seed = cfg.seed;
    return o;
}

DistanceOptions distance_options(const RunConfig& cfg) {
    DistanceOptions o;
    o.budget = cfg.budget;
    o.early_stop = cfg.early_stop;
    o.threads = cfg.threads;
    return o;
}

json verdict_json(const PrincipalityVerdict& v) {
    json j;
    j["status"] = to_string(v.status);
    j["method"] = to_string(v.method);
    j["witness"] = v.witness ? json(format_element(*v.witness)) : json(nullptr);
    j["trials_used"] = v.trials_used;
    j["seed"] = v.seed;
    j["detail"] = v.detail;
    return j;
}

json record_json(const SearchRecord& r) {
    json j;
    j["group_id"] = r.group_id;
    j["field"] = r.field;
    j["seed"] = r.seed;
    j["n"] = r.n;
    j["k"] = r.k;
    j["d"] = r.d ? json(*r.d) : json(nullptr);
    j["d_method"] = r.d_method;
    j["generator"] = r.generator;
    j["elapsed_ms"] = r.elapsed_ms;
    return j;
}

std::string record_line(const SearchRecord& r) {
    std::string s = "[" + std::to_string(r.n) + "," + std::to_string(r.k);
    if (r.d) s += std::string(r.d_method == "bounded" ? ",<=" : ",") + std::to_string(*r.d);
    return s + "] v = " + r.generator;
}

int cmd_group(const RunConfig& cfg, std::ostream& out) {
    auto g = resolve_group(cfg);
    out << "group " << g->id() << " order " << g->order() << "\n";
    out << "generators";
    for (std::size_t i = 0; i < g->generators().size(); ++i) {
        out << ' ' << g->gen_names()[i] << '=' << g->label(g->generators()[i]);
    }
    out << "\nelement orders";
    for (std::size_t i = 0; i < g->order(); ++i) out << ' ' << g->elem_order(i);
    out << '\n';
    if (!cfg.group_out.empty()) {
        auto f = open_out(cfg.group_out);
        write_group(f, *g);
    }
    return 0;
}

int cmd_code_build(const RunConfig& cfg, std::ostream& out) {
    auto alg = GroupAlgebra::create(resolve_group(cfg), Field::parse(cfg.field));
    IdealSubspace c = IdealSubspace::zero(alg);
    if (!cfg.matrix_in.empty()) {
        std::ifstream in(cfg.matrix_in);
        if (!in) throw Error(ErrorKind::IoError, "cannot read '" + cfg.matrix_in + "'");
        c = IdealSubspace::from_subspace(alg, Subspace::row_space(read_matrix(in, alg->field())));
    } else {
        c = principal_ideal(resolve_element(cfg, alg), parse_side(cfg.side));
    }
    if (cfg.dual) c = dual_ideal(c);
    out << "[" << alg->dim() << "," << c.dim() << "] " << c.side_name() << " ideal in "
        << alg->describe() << "\n";
    if (!cfg.out.empty()) {
        auto f = open_out(cfg.out);
        write_code(f, c);
    }
    if (!cfg.matrix_out.empty()) {
        auto f = open_out(cfg.matrix_out);
        write_matrix(f, c.space().basis());
    }
    return 0;
}

void print_distance(const IdealSubspace& c, const DistanceResult& d, bool as_json,
                    std::ostream& out) {
    if (as_json) {
        json j;
        j["n"] = c.alg()->dim();
        j["k"] = c.dim();
        j["d"] = d.d ? json(*d.d) : json(nullptr);
        j["d_method"] = d.d ? to_string(d.method) : "none";
        j["enumerated"] = d.enumerated;
        out << j.dump(2) << '\n';
        return;
    }
    CodeSubspace code(c);
    if (!d.d) {
        out << "[" << code.n() << "," << code.k() << "] d undefined ("
            << (code.k() == 0 ? "zero code" : "no codeword reached within budget") << ")\n";
        return;
    }
    out << "[" << code.n() << "," << code.k() << "," << (d.method == DistanceMethod::Bounded ? "<=" : "")
        << *d.d << "] " << to_string(d.method) << ", " << d.enumerated << " codewords\n";
}

int cmd_code_params(const RunConfig& cfg, std::ostream& out, bool distance) {
    const IdealSubspace c = load_code(cfg);
    if (!distance && c.dim() > 0 &&
        enumeration_size(c.alg()->f().q(), c.dim()) > cfg.budget && !cfg.early_stop) {
        out << "[" << c.alg()->dim() << "," << c.dim() << "] (distance exceeds budget)\n";
        return 0;
    }
    print_distance(c, min_distance(c.space(), distance_options(cfg)), cfg.json_out, out);
    return 0;
}

int cmd_code_dual(const RunConfig& cfg, std::ostream& out) {
    const IdealSubspace d = dual_ideal(load_code(cfg));
    out << "[" << d.alg()->dim() << "," << d.dim() << "] " << d.side_name() << "\n";
    if (!cfg.out.empty()) {
        auto f = open_out(cfg.out);
        write_code(f, d);
    } else {
        write_code(out, d);
    }
    return 0;
}

int cmd_check(const RunConfig& cfg, std::ostream& out) {
    IdealSubspace c = IdealSubspace::zero(GroupAlgebra::create(cyclic(1), Field::create(2, 1)));
    if (!cfg.code_file.empty()) {
        c = load_code(cfg);
    } else {
        // the code (vKG)^⊥ for a given v, or vKG itself with --no-dual
        auto alg = GroupAlgebra::create(resolve_group(cfg), Field::parse(cfg.field));
        c = principal_ideal(resolve_element(cfg, alg), Side::Right);
        if (!cfg.no_dual) c = dual_ideal(c);
    }
    const CheckabilityVerdict v = checkable_test(c, principality_options(cfg));
    if (cfg.json_out) {
        json j;
        j["algebra"] = c.alg()->describe();
        j["n"] = c.alg()->dim();
        j["k"] = c.dim();
        j["status"] = to_string(v.status);
        j["check_element"] = v.check_element ? json(format_element(*v.check_element)) : json(nullptr);
        j["dual_principality"] = verdict_json(v.via);
        out << j.dump(2) << '\n';
        return 0;
    }
    out << "code [" << c.alg()->dim() << "," << c.dim() << "] in " << c.alg()->describe() << ": "
        << to_string(v.status) << "\n";
    out << "dual principality: " << to_string(v.via.status) << " (" << to_string(v.via.method);
    if (v.via.method == VerdictMethod::Randomized) out << ", seed " << v.via.seed;
    out << ", " << v.via.trials_used << " trials)";
    if (!v.via.detail.empty()) out << " " << v.via.detail;
    out << "\n";
    if (v.check_element) out << "check element: " << format_element(*v.check_element) << "\n";
    return 0;
}

int cmd_classify(const RunConfig& cfg, std::ostream& out) {
    auto g = resolve_group(cfg);
    auto f = Field::parse(cfg.field);
    const bool result = classify_code_checkable(*g, *f);
    const auto report = is_p_nilpotent_cyclic_sylow(*g, f->p());
    const bool semisimple = g->order() % f->p() != 0;
    if (cfg.json_out) {
        json j;
        j["group"] = g->id();
        j["order"] = g->order();
        j["field"] = f->spec();
        j["semisimple"] = semisimple;
        j["p_nilpotent"] = report.p_nilpotent;
        j["cyclic_sylow"] = report.cyclic_sylow;
        j["code_checkable"] = result;
        out << j.dump(2) << '\n';
        return 0;
    }
    out << "code-checkable: " << (result ? "true" : "false") << "\n";
    if (semisimple) {
        out << "char " << f->p() << " does not divide " << g->order() << " (semisimple)\n";
    } else {
        out << "p-nilpotent: " << (report.p_nilpotent ? "yes" : "no")
            << ", cyclic Sylow " << f->p() << "-subgroup: " << (report.cyclic_sylow ? "yes" : "no")
            << "\n";
    }
    return 0;
}

int cmd_search(const RunConfig& cfg, std::ostream& out) {
    auto alg = GroupAlgebra::create(resolve_group(cfg), Field::parse(cfg.field));
    SearchOptions so;
    so.trials = cfg.search_trials;
    so.profile = WeightProfile::parse(cfg.profile);
    so.seed = cfg.seed;
    so.distance = distance_options(cfg);
    so.timing = cfg.timing;
    const SearchResult res = random_checkable_search(alg, so);
    out << "seed " << cfg.seed << ", " << res.records.size() << " trials, profile "
        << so.profile.to_string() << "\n";
    for (auto idx : res.best) out << "best " << record_line(res.records[idx]) << "\n";
    if (!cfg.out.empty()) export_records(res.records, cfg.format, cfg.out);
    if (cfg.json_out) {
        json arr = json::array();
        for (auto idx : res.best) arr.push_back(record_json(res.records[idx]));
        out << arr.dump(2) << '\n';
    }
    return 0;
}

int cmd_witness(const RunConfig& cfg, std::ostream& out) {
    auto alg = GroupAlgebra::create(resolve_group(cfg), Field::parse(cfg.field));
    WitnessOptions wo;
    wo.trials = cfg.search_trials;
    wo.seed = cfg.seed;
    wo.principality = principality_options(cfg);
    const auto w = non_checkable_witness_search(alg, wo);
    if (!w) {
        out << "no non-checkable ideal found (seed " << cfg.seed << ")\n";
        return 0;
    }
    out << "non-checkable ideal: " << w->description << "\n";
    out << "[" << alg->dim() << "," << w->ideal.dim() << "] " << w->ideal.side_name()
        << " ideal; dual not principal via " << to_string(w->verdict.via.method);
    if (!w->verdict.via.detail.empty()) out << " (" << w->verdict.via.detail << ")";
    out << "\n";
    if (!cfg.out.empty()) {
        auto f = open_out(cfg.out);
        write_code(f, w->ideal);
    }
    return 0;
}

int cmd_golay(const RunConfig& cfg, std::ostream& out) {
    const auto g = golay_search(cfg.seed, cfg.golay_trials);
    if (!g) {
        out << "no self-dual [24,12,8] principal ideal within " << cfg.golay_trials
            << " trials (seed " << cfg.seed << ")\n";
        return 0;
    }
    out << "found after " << g->trials_used << " trials (seed " << cfg.seed << ")\n";
    out << "v = " << format_element(g->generator) << "\n";
    out << "vKG is self-dual, [24,12,8], weight distribution:";
    for (std::size_t w = 0; w < g->weights.size(); ++w) {
        if (g->weights[w]) out << " A_" << w << "=" << g->weights[w];
    }
    out << "\n";
    return 0;
}

int cmd_rm(const RunConfig& cfg, std::ostream& out) {
    const RadicalPowerReport rep = reed_muller_experiment(cfg.p, cfg.m, principality_options(cfg));
    if (cfg.json_out) {
        json j;
        j["p"] = rep.p;
        j["m"] = rep.m;
        j["top"] = rep.top;
        json rows = json::array();
        for (const auto& r : rep.rows) {
            json x;
            x["r"] = r.r;
            x["dim"] = r.dim;
            x["principal"] = verdict_json(r.principal);
            x["checkable"] = to_string(r.checkable.status);
            rows.push_back(std::move(x));
        }
        j["rows"] = std::move(rows);
        j["principal_claim"] = rep.principal_claim;
        j["checkable_claim"] = rep.checkable_claim;
        out << j.dump(2) << '\n';
    } else {
        out << "F_" << rep.p << "[elementary abelian of rank " << rep.m << "], N = " << rep.top << "\n";
        for (const auto& r : rep.rows) {
            out << "J^" << r.r << ": dim " << r.dim << ", " << to_string(r.principal.status) << " ("
                << to_string(r.principal.method) << "), " << to_string(r.checkable.status) << "\n";
        }
        out << "only J^0, J^N (dim 1) and 0 principal: " << (rep.principal_claim ? "yes" : "no")
            << "\nonly J^0, J^1 checkable among nonzero powers: "
            << (rep.checkable_claim ? "yes" : "no") << "\n";
    }
    return rep.principal_claim && rep.checkable_claim ? 0 : 1;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
    ClaimOptions co;
    co.seed = cfg.seed;
    co.threads = cfg.threads;
    co.distance_budget = cfg.budget;
    co.principality = principality_options(cfg);
    co.golay_trials = cfg.golay_trials;
    bool ok = true;
    json arr = json::array();
    for (const auto& r : run_claims(cfg.scope, co)) {
        if (cfg.json_out) {
            json j;
            j["criterion"] = r.criterion;
            j["name"] = r.name;
            j["pass"] = r.pass;
            j["gating"] = r.gating;
            j["detail"] = r.detail;
            arr.push_back(std::move(j));
        } else {
            out << format_claim(r) << std::endl;
        }
        if (r.gating && r.criterion && !r.pass) ok = false;
    }
    if (cfg.json_out) out << arr.dump(2) << '\n';
    return ok ? 0 : 1;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    if (const char* env = std::getenv("GCF_SEED")) {
        try {
            cfg.seed = std::stoull(env);
        } catch (const std::exception&) {
            err << "GCF_SEED must be an unsigned integer\n";
            return 2;
        }
    }

    CLI::App app{"group codes: construction, checkability and distance"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Show help for all subcommands");

    auto add_group = [&](CLI::App* sub) {
        sub->add_option("--preset,--group", cfg.preset,
                        "group preset: c<n>, d<n>, s<n>, klein4, q8, a4, g64, g64c, g48, "
                        "ea(p,m), product(x,y)");
        sub->add_option("--presentation", cfg.presentation,
                        "presentation text '<a,b | ...>' or a file containing one");
    };
    auto add_field = [&](CLI::App* sub) {
        sub->add_option("--field", cfg.field, "field, e.g. GF(2), GF(9), GF(4)[1,1,1]");
    };
    auto add_element = [&](CLI::App* sub) {
        sub->add_option("--element", cfg.element, "algebra element, e.g. '1 + a^6*c + d'");
        sub->add_option("--element-file", cfg.element_file, "file holding an element expression");
    };
    auto add_principality = [&](CLI::App* sub) {
        sub->add_option("--exhaustive-budget", cfg.exhaustive_budget,
                        "max q^dim for exhaustive principality (default 2^20)");
        sub->add_option("--trials", cfg.trials, "random principality trials (default 200)");
    };
    auto add_distance = [&](CLI::App* sub) {
        sub->add_option("--budget", cfg.budget, "max codewords to enumerate (default 2^33)");
        sub->add_option("--early-stop", cfg.early_stop, "stop at the first word of weight <= w");
    };
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--seed", cfg.seed, "master seed (env GCF_SEED)");
        sub->add_option("--threads", cfg.threads, "worker threads (default: all cores)");
        sub->add_flag("--json", cfg.json_out, "JSON output");
    };

    auto* group = app.add_subcommand("group", "build a group and print a summary");
    add_group(group);
    group->add_option("--group-out", cfg.group_out, "write the multiplication table");

    auto* code = app.add_subcommand("code", "build codes and compute parameters");
    code->require_subcommand(1);
    auto* build = code->add_subcommand("build", "principal ideal vKG (or its dual) as a code file");
    add_group(build);
    add_field(build);
    add_element(build);
    build->add_option("--side", cfg.side, "right (vKG) or left (KGv)");
    build->add_flag("--dual", cfg.dual, "write the dual code instead");
    build->add_option("--matrix-in", cfg.matrix_in, "take the span of a matrix file instead");
    build->add_option("--out", cfg.out, "code file to write");
    build->add_option("--matrix-out", cfg.matrix_out, "also write the bare basis matrix");
    auto* params = code->add_subcommand("params", "print [n,k,d]");
    auto* dual = code->add_subcommand("dual", "dual code");
    auto* distance = code->add_subcommand("distance", "minimum distance by enumeration");
    for (auto* sub : {params, dual, distance}) {
        sub->add_option("--code", cfg.code_file, "code file")->required();
        add_group(sub);
        add_common(sub);
    }
    for (auto* sub : {params, distance}) add_distance(sub);
    dual->add_option("--out", cfg.out, "code file to write");

    auto* check = app.add_subcommand("check", "decide checkability of a right ideal");
    add_group(check);
    add_field(check);
    add_element(check);
    check->add_option("--code", cfg.code_file, "code file");
    check->add_flag("--no-dual", cfg.no_dual, "with --element, test vKG instead of (vKG)^perp");
    add_principality(check);
    add_common(check);

    auto* classify = app.add_subcommand("classify", "is every right ideal of KG checkable?");
    add_group(classify);
    add_field(classify);
    add_common(classify);

    auto* search = app.add_subcommand("search", "random checkable codes (vKG)^perp");
    add_group(search);
    add_field(search);
    add_distance(search);
    add_common(search);
    search->add_option("--trials", cfg.search_trials, "number of random generators");
    search->add_option("--profile", cfg.profile, "uniform or sparse:W");
    search->add_option("--out", cfg.out, "export all records");
    search->add_option("--format", cfg.format, "csv or json");
    search->add_flag("--timing", cfg.timing, "record elapsed_ms (breaks byte-identical reruns)");

    auto* witness = app.add_subcommand("witness", "look for a non-checkable right ideal");
    add_group(witness);
    add_field(witness);
    add_principality(witness);
    add_common(witness);
    witness->add_option("--random", cfg.search_trials, "random ideals after structured candidates");
    witness->add_option("--out", cfg.out, "write the ideal as a code file");

    auto* golay = app.add_subcommand("golay", "self-dual [24,12,8] principal ideal in F2[D24]");
    golay->add_option("--trials", cfg.golay_trials, "candidates to draw (default 10^6)");
    add_common(golay);

    auto* rm = app.add_subcommand("rm-experiment", "radical powers of F_p[elementary abelian]");
    rm->add_option("-p", cfg.p, "prime")->required();
    rm->add_option("-m", cfg.m, "rank")->required();
    add_principality(rm);
    add_common(rm);

    auto* verify = app.add_subcommand("verify-paper", "rerun the reproduction suites");
    verify->add_option("--scope", cfg.scope,
                       "all, remark29, ex211, reed_muller, classification or golay");
    add_distance(verify);
    add_principality(verify);
    add_common(verify);
    verify->add_option("--golay-trials", cfg.golay_trials, "Golay search budget");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return 2;
    }

    try {
        if (group->parsed()) return cmd_group(cfg, out);
        if (build->parsed()) return cmd_code_build(cfg, out);
        if (params->parsed()) return cmd_code_params(cfg, out, false);
        if (distance->parsed()) return cmd_code_params(cfg, out, true);
        if (dual->parsed()) return cmd_code_dual(cfg, out);
        if (check->parsed()) return cmd_check(cfg, out);
        if (classify->parsed()) return cmd_classify(cfg, out);
        if (search->parsed()) return cmd_search(cfg, out);
        if (witness->parsed()) return cmd_witness(cfg, out);
        if (golay->parsed()) return cmd_golay(cfg, out);
        if (rm->parsed()) return cmd_rm(cfg, out);
        if (verify->parsed()) return cmd_verify(cfg, out);
    } catch (const Error& e) {
        err << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

}  // namespace gcode
