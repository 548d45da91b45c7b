#include "gcode/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <ostream>
#include <set>

#include "gcode/error.hpp"
#include "gcode/presentation.hpp"

namespace gcode {

namespace {

std::string format_word(const Word& w, const std::vector<std::string>& names) {
    if (w.empty()) return "1";
    std::string out;
    for (const auto& [gen, exp] : w) {
        if (!out.empty()) out += '*';
        out += names[gen];
        if (exp != 1) out += '^' + std::to_string(exp);
    }
    return out;
}

// Appends generator x to a word, merging with a trailing power of x.
Word extend(const Word& w, std::size_t x) {
    Word out = w;
    if (!out.empty() && out.back().first == x) {
        ++out.back().second;
    } else {
        out.emplace_back(x, 1);
    }
    return out;
}

struct Closure {
    std::vector<std::vector<std::uint32_t>> right_gen;  // [element][gen]
    std::vector<std::size_t> parent;
    std::vector<std::size_t> parent_gen;
    std::vector<Word> words;
};

// mult[i][j] = right_gen[mult[i][parent(j)]][gen(j)], filled in BFS order.
std::vector<std::uint32_t> table_from_closure(const Closure& c) {
    const std::size_t n = c.right_gen.size();
    std::vector<std::uint32_t> mult(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        mult[i * n] = static_cast<std::uint32_t>(i);
        for (std::size_t j = 1; j < n; ++j) {
            mult[i * n + j] = c.right_gen[mult[i * n + c.parent[j]]][c.parent_gen[j]];
        }
    }
    return mult;
}

std::size_t gcd(std::size_t a, std::size_t b) { return std::gcd(a, b); }

}  // namespace

GroupPtr Group::from_table(std::string id, std::size_t order, std::vector<std::uint32_t> mult,
                           std::vector<std::string> labels, std::vector<std::size_t> generators,
                           std::vector<std::string> gen_names) {
    if (order == 0 || mult.size() != order * order || labels.size() != order) {
        throw Error(ErrorKind::InvalidGroup, "table shape does not match order");
    }
    auto g = std::shared_ptr<Group>(new Group());
    g->id_ = std::move(id);
    g->n_ = order;
    g->mult_ = std::move(mult);
    g->labels_ = std::move(labels);
    g->generators_ = std::move(generators);
    g->gen_names_ = std::move(gen_names);
    for (auto x : g->mult_) {
        if (x >= order) throw Error(ErrorKind::InvalidGroup, "table entry out of range");
    }
    g->inv_.assign(order, order);
    for (std::size_t i = 0; i < order; ++i) {
        for (std::size_t j = 0; j < order; ++j) {
            if (g->mul(i, j) == 0) {
                g->inv_[i] = j;
                break;
            }
        }
        if (g->inv_[i] == order) throw Error(ErrorKind::InvalidGroup, "element without inverse");
    }
    g->elem_order_.assign(order, 0);
    for (std::size_t i = 0; i < order; ++i) {
        std::size_t x = i, t = 1;
        while (x != 0 && t <= order) {
            x = g->mul(x, i);
            ++t;
        }
        g->elem_order_[i] = t;
    }
    g->validate();
    return g;
}

void Group::validate() const {
    const std::size_t n = n_;
    std::vector<char> seen(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (mul(0, i) != i || mul(i, 0) != i) {
            throw Error(ErrorKind::InvalidGroup, "index 0 is not the identity");
        }
        std::fill(seen.begin(), seen.end(), 0);
        for (std::size_t j = 0; j < n; ++j) {
            if (seen[mul(i, j)]++) throw Error(ErrorKind::InvalidGroup, "row is not a permutation");
        }
        std::fill(seen.begin(), seen.end(), 0);
        for (std::size_t j = 0; j < n; ++j) {
            if (seen[mul(j, i)]++) {
                throw Error(ErrorKind::InvalidGroup, "column is not a permutation");
            }
        }
        if (mul(i, inv_[i]) != 0 || mul(inv_[i], i) != 0) {
            throw Error(ErrorKind::InvalidGroup, "inverse table inconsistent");
        }
        if (elem_order_[i] > n || n % elem_order_[i] != 0) {
            throw Error(ErrorKind::InvalidGroup, "element order does not divide |G|");
        }
    }
    if (n <= kAssociativityCheckLimit) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                const std::size_t ij = mul(i, j);
                for (std::size_t k = 0; k < n; ++k) {
                    if (mul(ij, k) != mul(i, mul(j, k))) {
                        throw Error(ErrorKind::InvalidGroup, "multiplication is not associative");
                    }
                }
            }
        }
    }
    for (auto gen : generators_) {
        if (gen >= n) throw Error(ErrorKind::InvalidGroup, "generator index out of range");
    }
}

GroupPtr Group::from_regular_action(std::string id, std::vector<std::string> gen_names,
                                    const std::vector<std::vector<std::uint32_t>>& action) {
    const std::size_t points = action.size();
    const std::size_t k = gen_names.size();
    std::vector<std::size_t> elem_of(points, points);
    std::vector<std::size_t> point_of;
    Closure c;
    elem_of[0] = 0;
    point_of.push_back(0);
    c.parent.push_back(0);
    c.parent_gen.push_back(0);
    c.words.emplace_back();
    for (std::size_t e = 0; e < point_of.size(); ++e) {
        for (std::size_t x = 0; x < k; ++x) {
            const std::size_t next = action[point_of[e]][x];
            if (next >= points) throw Error(ErrorKind::IncompleteEnumeration, "undefined image");
            if (elem_of[next] == points) {
                elem_of[next] = point_of.size();
                point_of.push_back(next);
                c.parent.push_back(e);
                c.parent_gen.push_back(x);
                c.words.push_back(extend(c.words[e], x));
            }
        }
    }
    if (point_of.size() != points) {
        throw Error(ErrorKind::InvalidGroup, "action is not transitive");
    }
    c.right_gen.assign(points, std::vector<std::uint32_t>(k));
    for (std::size_t e = 0; e < points; ++e) {
        for (std::size_t x = 0; x < k; ++x) {
            c.right_gen[e][x] = static_cast<std::uint32_t>(elem_of[action[point_of[e]][x]]);
        }
    }
    std::vector<std::string> labels;
    for (const auto& w : c.words) labels.push_back(format_word(w, gen_names));
    std::vector<std::size_t> gens;
    for (std::size_t x = 0; x < k; ++x) gens.push_back(c.right_gen[0][x]);
    return from_table(std::move(id), points, table_from_closure(c), std::move(labels),
                      std::move(gens), std::move(gen_names));
}

GroupPtr Group::from_permutations(std::string id, std::vector<std::string> gen_names,
                                  const std::vector<std::vector<std::uint32_t>>& perms,
                                  std::size_t order_cap) {
    const std::size_t k = perms.size();
    const std::size_t degree = k ? perms[0].size() : 0;
    std::vector<std::uint32_t> identity(degree);
    std::iota(identity.begin(), identity.end(), 0u);
    std::map<std::vector<std::uint32_t>, std::size_t> index;
    std::vector<std::vector<std::uint32_t>> elems{identity};
    index[identity] = 0;
    Closure c;
    c.parent.push_back(0);
    c.parent_gen.push_back(0);
    c.words.emplace_back();
    std::vector<std::vector<std::uint32_t>> right_gen;
    for (std::size_t e = 0; e < elems.size(); ++e) {
        right_gen.emplace_back(k);
        for (std::size_t x = 0; x < k; ++x) {
            std::vector<std::uint32_t> next(degree);
            for (std::size_t pt = 0; pt < degree; ++pt) next[pt] = perms[x][elems[e][pt]];
            auto [it, inserted] = index.emplace(next, elems.size());
            if (inserted) {
                if (elems.size() >= order_cap) {
                    throw Error(ErrorKind::OrderCapExceeded,
                                "group order exceeds " + std::to_string(order_cap));
                }
                elems.push_back(std::move(next));
                c.parent.push_back(e);
                c.parent_gen.push_back(x);
                c.words.push_back(extend(c.words[e], x));
            }
            right_gen[e][x] = static_cast<std::uint32_t>(it->second);
        }
    }
    c.right_gen = std::move(right_gen);
    std::vector<std::string> labels;
    for (const auto& w : c.words) labels.push_back(format_word(w, gen_names));
    std::vector<std::size_t> gens;
    for (std::size_t x = 0; x < k; ++x) gens.push_back(c.right_gen[0][x]);
    return from_table(std::move(id), elems.size(), table_from_closure(c), std::move(labels),
                      std::move(gens), std::move(gen_names));
}

std::size_t Group::power(std::size_t a, long e) const noexcept {
    const long ord = static_cast<long>(elem_order_[a]);
    long r = ((e % ord) + ord) % ord;
    std::size_t x = 0;
    for (long i = 0; i < r; ++i) x = mul(x, a);
    return x;
}

std::size_t Group::evaluate(const Word& w) const {
    std::size_t x = 0;
    for (const auto& [gen, exp] : w) {
        if (gen >= generators_.size()) {
            throw Error(ErrorKind::UnknownGenerator, "generator index " + std::to_string(gen));
        }
        x = mul(x, power(generators_[gen], exp));
    }
    return x;
}

std::optional<std::size_t> Group::find_label(std::string_view label) const {
    for (std::size_t i = 0; i < n_; ++i) {
        if (labels_[i] == label) return i;
    }
    return std::nullopt;
}

GroupPtr cyclic(std::size_t n) {
    if (n == 0) throw Error(ErrorKind::InvalidGroup, "cyclic group of order 0");
    if (n > Group::kDefaultOrderCap) {
        throw Error(ErrorKind::OrderCapExceeded, "cyclic(" + std::to_string(n) + ")");
    }
    std::vector<std::uint32_t> shift(n);
    for (std::size_t i = 0; i < n; ++i) shift[i] = static_cast<std::uint32_t>((i + 1) % n);
    return Group::from_permutations("c" + std::to_string(n), {"a"}, {shift});
}

GroupPtr dihedral(std::size_t order) {
    if (order < 6 || order % 2) {
        throw Error(ErrorKind::InvalidGroup, "dihedral order must be even and >= 6");
    }
    if (order > Group::kDefaultOrderCap) {
        throw Error(ErrorKind::OrderCapExceeded, "dihedral(" + std::to_string(order) + ")");
    }
    const std::size_t n = order / 2;
    std::vector<std::uint32_t> r(n), s(n);
    for (std::size_t i = 0; i < n; ++i) {
        r[i] = static_cast<std::uint32_t>((i + 1) % n);
        s[i] = static_cast<std::uint32_t>((n - i) % n);
    }
    return Group::from_permutations("d" + std::to_string(order), {"r", "s"}, {r, s});
}

GroupPtr symmetric(std::size_t n) {
    if (n < 1 || n > 5) throw Error(ErrorKind::OrderCapExceeded, "symmetric groups need n <= 5");
    std::vector<std::vector<std::uint32_t>> perms;
    std::vector<std::string> names;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        std::vector<std::uint32_t> t(n);
        std::iota(t.begin(), t.end(), 0u);
        std::swap(t[i], t[i + 1]);
        perms.push_back(t);
        names.push_back("s" + std::to_string(i + 1));
    }
    return Group::from_permutations("s" + std::to_string(n), names, perms);
}

GroupPtr alternating4() {
    return Group::from_permutations("a4", {"a", "b"}, {{1, 2, 0, 3}, {1, 0, 3, 2}});
}

GroupPtr quaternion8() {
    auto g = todd_coxeter(parse_presentation(kPresentationQ8), 1000, "q8");
    return g;
}

GroupPtr elem_abelian(unsigned p, unsigned m) {
    if (m == 0 || m > 26) throw Error(ErrorKind::InvalidGroup, "rank must be in 1..26");
    std::size_t n = 1;
    for (unsigned i = 0; i < m; ++i) {
        n *= p;
        if (n > Group::kDefaultOrderCap) {
            throw Error(ErrorKind::OrderCapExceeded,
                        "ea(" + std::to_string(p) + "," + std::to_string(m) + ")");
        }
    }
    auto digits = [&](std::size_t x) {
        std::vector<unsigned> d(m);
        for (unsigned t = m; t-- > 0;) {
            d[t] = static_cast<unsigned>(x % p);
            x /= p;
        }
        return d;
    };
    std::vector<std::uint32_t> mult(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        auto a = digits(i);
        for (std::size_t j = 0; j < n; ++j) {
            auto b = digits(j);
            std::size_t v = 0;
            for (unsigned t = 0; t < m; ++t) v = v * p + (a[t] + b[t]) % p;
            mult[i * n + j] = static_cast<std::uint32_t>(v);
        }
    }
    std::vector<std::string> names;
    std::vector<std::size_t> gens;
    for (unsigned t = 0; t < m; ++t) {
        names.emplace_back(1, static_cast<char>('a' + t));
        std::size_t v = 1;
        for (unsigned s = t + 1; s < m; ++s) v *= p;
        gens.push_back(v);
    }
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) {
        Word w;
        auto d = digits(i);
        for (unsigned t = 0; t < m; ++t) {
            if (d[t]) w.emplace_back(t, static_cast<long>(d[t]));
        }
        labels.push_back(format_word(w, names));
    }
    std::string id = (p == 2 && m == 2) ? "klein4"
                                        : "ea(" + std::to_string(p) + "," + std::to_string(m) + ")";
    return Group::from_table(id, n, std::move(mult), std::move(labels), std::move(gens),
                             std::move(names));
}

GroupPtr direct_product(const GroupPtr& g, const GroupPtr& h, std::size_t order_cap) {
    const std::size_t a = g->order(), b = h->order();
    if (a * b > order_cap) {
        throw Error(ErrorKind::OrderCapExceeded,
                    "product order " + std::to_string(a * b) + " exceeds " +
                        std::to_string(order_cap));
    }
    const std::size_t n = a * b;
    std::vector<std::uint32_t> mult(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            mult[i * n + j] = static_cast<std::uint32_t>(g->mul(i / b, j / b) * b +
                                                         h->mul(i % b, j % b));
        }
    }
    std::vector<std::string> names = g->gen_names();
    std::vector<std::string> renamed;
    for (auto name : h->gen_names()) {
        while (std::find(names.begin(), names.end(), name) != names.end()) name += '\'';
        names.push_back(name);
        renamed.push_back(name);
    }
    // Relabel H's words with the renamed generators. Labels are gen^exp
    // tokens joined by '*', so a token-wise rename is enough.
    auto relabel = [&](const std::string& label) {
        if (label == "1") return std::string{};
        std::string out, token;
        auto flush = [&]() {
            auto caret = token.find('^');
            std::string base = token.substr(0, caret);
            for (std::size_t x = 0; x < h->gen_names().size(); ++x) {
                if (h->gen_names()[x] == base) base = renamed[x];
            }
            if (!out.empty()) out += '*';
            out += base + (caret == std::string::npos ? "" : token.substr(caret));
            token.clear();
        };
        for (char c : label) {
            if (c == '*') {
                flush();
            } else {
                token.push_back(c);
            }
        }
        flush();
        return out;
    };
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) {
        std::string left = g->label(i / b) == "1" ? std::string{} : g->label(i / b);
        std::string right = relabel(h->label(i % b));
        std::string label = left;
        if (!right.empty()) label += (label.empty() ? "" : "*") + right;
        labels.push_back(label.empty() ? "1" : label);
    }
    std::vector<std::size_t> gens;
    for (auto x : g->generators()) gens.push_back(x * b);
    for (auto y : h->generators()) gens.push_back(y);
    return Group::from_table("product(" + g->id() + "," + h->id() + ")", n, std::move(mult),
                             std::move(labels), std::move(gens), std::move(names));
}

namespace {

std::string lower(std::string_view s) {
    std::string out;
    for (char c : s) {
        if (c != ' ') out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
    return out;
}

std::vector<std::string> split_args(const std::string& s) {
    std::vector<std::string> out;
    int depth = 0;
    std::string cur;
    for (char c : s) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

std::size_t to_size(const std::string& s) {
    std::size_t pos = 0;
    std::size_t v = 0;
    try {
        v = std::stoul(s, &pos);
    } catch (const std::exception&) {
        throw ParseError(0, "integer argument, got '" + s + "'");
    }
    if (pos != s.size()) throw ParseError(pos, "integer argument, got '" + s + "'");
    return v;
}

}  // namespace

GroupPtr preset_group(std::string_view raw) {
    const std::string name = lower(raw);
    const auto open = name.find('(');
    if (open != std::string::npos) {
        if (name.back() != ')') throw ParseError(name.size(), "')'");
        const std::string head = name.substr(0, open);
        const auto args = split_args(name.substr(open + 1, name.size() - open - 2));
        if ((head == "cyclic" || head == "c") && args.size() == 1) return cyclic(to_size(args[0]));
        if ((head == "dihedral" || head == "d") && args.size() == 1) {
            return dihedral(to_size(args[0]));
        }
        if ((head == "symmetric" || head == "s") && args.size() == 1) {
            return symmetric(to_size(args[0]));
        }
        if ((head == "ea" || head == "elem_abelian") && args.size() == 2) {
            return elem_abelian(static_cast<unsigned>(to_size(args[0])),
                                static_cast<unsigned>(to_size(args[1])));
        }
        if ((head == "product" || head == "direct_product") && args.size() == 2) {
            return direct_product(preset_group(args[0]), preset_group(args[1]));
        }
        throw Error(ErrorKind::ParseError, "unknown preset '" + std::string(raw) + "'");
    }
    if (name == "klein4" || name == "v4") return elem_abelian(2, 2);
    if (name == "q8") return quaternion8();
    if (name == "a4") return alternating4();
    if (name == "g64") return todd_coxeter(parse_presentation(kPresentationG64), 1'000'000, "g64");
    if (name == "g64c") {
        return todd_coxeter(parse_presentation(kPresentationG64Completed), 1'000'000, "g64c");
    }
    if (name == "g48") return todd_coxeter(parse_presentation(kPresentationG48), 1'000'000, "g48");
    if (name.size() > 1 && std::all_of(name.begin() + 1, name.end(), ::isdigit)) {
        const std::size_t n = to_size(name.substr(1));
        switch (name[0]) {
            case 'c': return cyclic(n);
            case 'd': return dihedral(n);
            case 's': return symmetric(n);
            default: break;
        }
    }
    throw Error(ErrorKind::ParseError, "unknown preset '" + std::string(raw) + "'");
}

std::vector<std::string> preset_names() {
    return {"c2", "c4", "c6", "c12", "klein4", "d8", "q8", "d24", "s3", "s4", "a4", "g64", "g64c", "g48"};
}

std::size_t p_part(std::size_t n, unsigned p) {
    std::size_t r = 1;
    while (n % p == 0) {
        n /= p;
        r *= p;
    }
    return r;
}

bool is_p_group(const Group& g, unsigned p) { return p_part(g.order(), p) == g.order(); }

PNilpotencyReport is_p_nilpotent_cyclic_sylow(const Group& g, unsigned p) {
    const std::size_t n = g.order();
    const std::size_t sylow = p_part(n, p);
    if (sylow == 1) return {true, true};
    std::vector<std::size_t> p_prime;
    std::vector<char> member(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        if (gcd(g.elem_order(i), p) == 1) {
            p_prime.push_back(i);
            member[i] = 1;
        }
    }
    bool closed = true;
    for (std::size_t a : p_prime) {
        for (std::size_t b : p_prime) {
            if (!member[g.mul(a, b)]) {
                closed = false;
                break;
            }
        }
        if (!closed) break;
    }
    bool cyclic_sylow = false;
    for (std::size_t i = 0; i < n; ++i) {
        if (g.elem_order(i) == sylow) {
            cyclic_sylow = true;
            break;
        }
    }
    return {closed, cyclic_sylow};
}

std::vector<std::size_t> subgroup_closure(const Group& g, const std::vector<std::size_t>& gens) {
    std::vector<char> seen(g.order(), 0);
    std::vector<std::size_t> elems{0};
    seen[0] = 1;
    for (std::size_t e = 0; e < elems.size(); ++e) {
        for (auto x : gens) {
            const std::size_t y = g.mul(elems[e], x);
            if (!seen[y]) {
                seen[y] = 1;
                elems.push_back(y);
            }
        }
    }
    std::sort(elems.begin(), elems.end());
    return elems;
}

std::vector<std::size_t> normal_closure(const Group& g, const std::vector<std::size_t>& gens) {
    std::set<std::size_t> conj;
    for (auto x : gens) {
        for (std::size_t t = 0; t < g.order(); ++t) conj.insert(g.mul(g.mul(t, x), g.inv(t)));
    }
    return subgroup_closure(g, {conj.begin(), conj.end()});
}

std::vector<std::vector<std::size_t>> cyclic_subgroups(const Group& g) {
    std::set<std::vector<std::size_t>> seen;
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t i = 0; i < g.order(); ++i) {
        auto h = subgroup_closure(g, {i});
        if (seen.insert(h).second) out.push_back(std::move(h));
    }
    return out;
}

std::vector<std::vector<std::size_t>> small_p_subgroups(const Group& g, unsigned p) {
    std::vector<std::size_t> p_elems;
    for (std::size_t i = 1; i < g.order(); ++i) {
        if (p_part(g.elem_order(i), p) == g.elem_order(i)) p_elems.push_back(i);
    }
    std::set<std::vector<std::size_t>> seen;
    for (std::size_t a = 0; a < p_elems.size(); ++a) {
        for (std::size_t b = a; b < p_elems.size(); ++b) {
            auto h = subgroup_closure(g, {p_elems[a], p_elems[b]});
            if (p_part(h.size(), p) == h.size()) seen.insert(std::move(h));
        }
    }
    std::vector<std::vector<std::size_t>> out(seen.begin(), seen.end());
    std::stable_sort(out.begin(), out.end(),
                     [](const auto& x, const auto& y) { return x.size() > y.size(); });
    return out;
}

void write_group(std::ostream& out, const Group& g) {
    const std::size_t n = g.order();
    out << "order " << n << '\n';
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (j) out << ' ';
            out << g.mul(i, j);
        }
        out << '\n';
    }
    out << "labels";
    for (const auto& l : g.labels()) out << ' ' << l;
    out << "\ngenerators";
    for (std::size_t x = 0; x < g.generators().size(); ++x) {
        out << ' ' << g.gen_names()[x] << '=' << g.generators()[x];
    }
    out << '\n';
}

}  // namespace gcode
