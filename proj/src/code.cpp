#include "gcode/code.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include "gcode/error.hpp"

namespace gcode {

const char* to_string(DistanceMethod m) noexcept {
    return m == DistanceMethod::Exhausted ? "exhausted" : "bounded";
}

const DistanceResult& CodeSubspace::compute_distance(const DistanceOptions& opts) {
    distance_ = min_distance(space(), opts);
    return *distance_;
}

std::string CodeSubspace::params() const {
    std::string out = "[" + std::to_string(n()) + "," + std::to_string(k());
    if (distance_ && distance_->d) {
        out += distance_->method == DistanceMethod::Bounded ? ",<=" : ",";
        out += std::to_string(*distance_->d);
    }
    return out + "]";
}

IdealSubspace dual_ideal(const IdealSubspace& c) {
    return IdealSubspace::from_subspace(c.alg(), orthogonal(c.space()));
}

CodeSubspace dual_code(const CodeSubspace& c) { return CodeSubspace(dual_ideal(c.ideal())); }

bool macwilliams_dual_check(const IdealSubspace& c) {
    if (!c.is_right()) throw Error(ErrorKind::NotARightIdeal, "dual check needs a right ideal");
    return dual_ideal(c).space() == hat(annihilator(c, Side::Left)).space();
}

std::uint64_t enumeration_size(unsigned q, std::size_t k) {
    // (q^k - 1) / (q - 1) = 1 + q + ... + q^(k-1)
    std::uint64_t total = 0, term = 1;
    for (std::size_t i = 0; i < k; ++i) {
        if (total > UINT64_MAX - term) return UINT64_MAX;
        total += term;
        if (i + 1 < k) {
            if (term > UINT64_MAX / q) return UINT64_MAX;
            term *= q;
        }
    }
    return total;
}

std::size_t naive_min_distance(const Subspace& code) {
    const Field& f = *code.field();
    const std::size_t k = code.dim();
    if (k == 0) throw Error(ErrorKind::BudgetExceeded, "zero code has no minimum distance");
    Vec msg(k, 0);
    std::size_t best = code.ambient_dim();
    while (true) {
        std::size_t i = 0;
        while (i < k && msg[i] == f.q() - 1) msg[i++] = 0;
        if (i == k) break;
        ++msg[i];
        std::size_t w = 0;
        for (Elem x : code.combine(msg)) w += x != 0;
        best = std::min(best, w);
    }
    return best;
}

void write_code(std::ostream& out, const IdealSubspace& code) {
    out << "group=" << code.alg()->group().id() << " field=" << code.alg()->field()->spec()
        << " side=" << code.side_name() << '\n';
    write_matrix(out, code.space().basis());
}

std::pair<CodeFileHeader, Matrix> read_code_file(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw Error(ErrorKind::IoError, "empty code file");
    CodeFileHeader header;
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) {
        auto eq = tok.find('=');
        if (eq == std::string::npos) throw Error(ErrorKind::IoError, "bad header token '" + tok + "'");
        auto key = tok.substr(0, eq), value = tok.substr(eq + 1);
        if (key == "group") header.group_id = value;
        else if (key == "field") header.field_spec = value;
        else if (key == "side") header.side = value;
        else throw Error(ErrorKind::IoError, "unknown header key '" + key + "'");
    }
    if (header.group_id.empty() || header.field_spec.empty()) {
        throw Error(ErrorKind::IoError, "header needs group= and field=");
    }
    auto field = Field::parse(header.field_spec);
    return {header, read_matrix(in, field)};
}

IdealSubspace read_code(std::istream& in) {
    auto [header, m] = read_code_file(in);
    auto alg = GroupAlgebra::create(preset_group(header.group_id), m.field());
    if (m.cols() != alg->dim()) {
        throw Error(ErrorKind::AmbientMismatch, "code length " + std::to_string(m.cols()) +
                                                    " but |G| = " + std::to_string(alg->dim()));
    }
    return IdealSubspace::from_subspace(alg, Subspace::row_space(m));
}

}  // namespace gcode
