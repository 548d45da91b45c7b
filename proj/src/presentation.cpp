#include "gcode/presentation.hpp"

#include <cctype>
#include <cstdint>
#include <sstream>

#include "gcode/error.hpp"

namespace gcode {

namespace {

bool is_name_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool is_name_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

void skip_space(std::string_view text, std::size_t& pos) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
}

long parse_int(std::string_view text, std::size_t& pos) {
    skip_space(text, pos);
    bool negative = false;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
        negative = text[pos] == '-';
        ++pos;
        skip_space(text, pos);
    }
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) {
        throw ParseError(pos, "integer exponent");
    }
    long v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        v = v * 10 + (text[pos] - '0');
        if (v > 1'000'000'000) throw ParseError(pos, "exponent below 10^9");
        ++pos;
    }
    return negative ? -v : v;
}

// Merges adjacent powers of the same generator and drops zero exponents.
Word normalize(const Word& w) {
    Word out;
    for (const auto& item : w) {
        if (!out.empty() && out.back().first == item.first) {
            out.back().second += item.second;
            if (out.back().second == 0) out.pop_back();
        } else if (item.second != 0) {
            out.push_back(item);
        }
    }
    return out;
}

Word inverse(const Word& w) {
    Word out;
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.emplace_back(it->first, -it->second);
    return out;
}

}  // namespace

Word parse_word(std::string_view text, std::size_t& pos, const std::vector<std::string>& gen_names) {
    Word w;
    skip_space(text, pos);
    if (pos < text.size() && text[pos] == '1') {
        ++pos;
        return w;
    }
    bool expect_item = true;
    while (true) {
        skip_space(text, pos);
        if (pos >= text.size()) break;
        if (!expect_item && text[pos] == '*') {
            std::size_t look = pos + 1;
            skip_space(text, look);
            if (look < text.size() && is_name_start(text[look])) {
                pos = look;
            } else {
                break;
            }
        }
        if (!is_name_start(text[pos])) break;
        std::size_t best = gen_names.size();
        std::size_t best_len = 0;
        for (std::size_t x = 0; x < gen_names.size(); ++x) {
            const auto& name = gen_names[x];
            if (name.size() > best_len && text.substr(pos, name.size()) == name) {
                best = x;
                best_len = name.size();
            }
        }
        if (best == gen_names.size()) {
            std::size_t end = pos;
            while (end < text.size() && is_name_char(text[end])) ++end;
            throw Error(ErrorKind::UnknownGenerator,
                        "'" + std::string(text.substr(pos, end - pos)) + "' at position " +
                            std::to_string(pos));
        }
        pos += best_len;
        long exp = 1;
        std::size_t look = pos;
        skip_space(text, look);
        if (look < text.size() && text[look] == '^') {
            pos = look + 1;
            exp = parse_int(text, pos);
            if (exp == 0) throw ParseError(pos, "nonzero exponent");
        }
        w.emplace_back(best, exp);
        expect_item = false;
    }
    if (expect_item) throw ParseError(pos, "generator or '1'");
    return w;
}

Presentation parse_presentation(std::string_view text) {
    Presentation pres;
    std::size_t pos = 0;
    auto expect = [&](char c) {
        skip_space(text, pos);
        if (pos >= text.size() || text[pos] != c) throw ParseError(pos, std::string("'") + c + "'");
        ++pos;
    };
    expect('<');
    while (true) {
        skip_space(text, pos);
        if (pos >= text.size() || !is_name_start(text[pos])) throw ParseError(pos, "generator name");
        std::size_t start = pos;
        while (pos < text.size() && is_name_char(text[pos])) ++pos;
        std::string name(text.substr(start, pos - start));
        for (const auto& existing : pres.gen_names) {
            if (existing == name) throw ParseError(start, "distinct generator names");
        }
        pres.gen_names.push_back(std::move(name));
        skip_space(text, pos);
        if (pos < text.size() && text[pos] == ',') {
            ++pos;
            continue;
        }
        break;
    }
    expect('|');
    skip_space(text, pos);
    if (pos < text.size() && text[pos] == '>') {
        ++pos;
    } else {
        while (true) {
            std::vector<Word> chain;
            chain.push_back(parse_word(text, pos, pres.gen_names));
            skip_space(text, pos);
            if (pos >= text.size() || text[pos] != '=') throw ParseError(pos, "'='");
            while (pos < text.size() && text[pos] == '=') {
                ++pos;
                chain.push_back(parse_word(text, pos, pres.gen_names));
                skip_space(text, pos);
            }
            const Word& last = chain.back();
            for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
                Word rel = chain[i];
                Word tail = inverse(last);
                rel.insert(rel.end(), tail.begin(), tail.end());
                pres.relators.push_back(normalize(rel));
            }
            skip_space(text, pos);
            if (pos < text.size() && text[pos] == ',') {
                ++pos;
                continue;
            }
            expect('>');
            break;
        }
    }
    skip_space(text, pos);
    if (pos != text.size()) throw ParseError(pos, "end of presentation");
    return pres;
}

std::string format_presentation(const Presentation& pres) {
    std::ostringstream out;
    out << '<';
    for (std::size_t i = 0; i < pres.gen_names.size(); ++i) {
        out << (i ? "," : "") << pres.gen_names[i];
    }
    out << " | ";
    for (std::size_t r = 0; r < pres.relators.size(); ++r) {
        if (r) out << ", ";
        const auto& w = pres.relators[r];
        if (w.empty()) out << '1';
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (i) out << '*';
            out << pres.gen_names[w[i].first];
            if (w[i].second != 1) out << '^' << w[i].second;
        }
        out << "=1";
    }
    out << '>';
    return out.str();
}

namespace {

// Coset table with one column per generator and one per inverse; column c
// and c ^ 1 are mutually inverse. Undefined entries are -1.
class CosetEnumerator {
public:
    CosetEnumerator(std::size_t gens, std::size_t max_cosets)
        : width_(2 * gens), max_cosets_(max_cosets) {
        new_coset();
    }

    void run(const std::vector<std::vector<std::size_t>>& relators) {
        for (std::size_t c = 0; c < parent_.size(); ++c) {
            if (!alive(c)) continue;
            for (const auto& r : relators) {
                scan_and_fill(c, r);
                if (!alive(c)) break;
            }
            if (!alive(c)) continue;
            for (std::size_t x = 0; x < width_; ++x) {
                if (at(c, x) < 0) define(c, x);
            }
        }
    }

    // action[live coset][gen] after renumbering live cosets in order.
    std::vector<std::vector<std::uint32_t>> compact() {
        std::vector<std::int64_t> number(parent_.size(), -1);
        std::size_t live = 0;
        for (std::size_t c = 0; c < parent_.size(); ++c) {
            if (alive(c)) number[c] = static_cast<std::int64_t>(live++);
        }
        std::vector<std::vector<std::uint32_t>> action(live,
                                                       std::vector<std::uint32_t>(width_ / 2));
        for (std::size_t c = 0; c < parent_.size(); ++c) {
            if (!alive(c)) continue;
            for (std::size_t x = 0; x < width_; x += 2) {
                const auto target = at(c, x);
                if (target < 0) {
                    throw Error(ErrorKind::IncompleteEnumeration, "coset table has gaps");
                }
                action[number[c]][x / 2] =
                    static_cast<std::uint32_t>(number[rep(static_cast<std::size_t>(target))]);
            }
        }
        return action;
    }

private:
    bool alive(std::size_t c) const { return parent_[c] == c; }
    std::int64_t& at(std::size_t c, std::size_t x) { return table_[c * width_ + x]; }

    std::size_t new_coset() {
        if (parent_.size() >= max_cosets_) {
            throw Error(ErrorKind::CosetBudgetExceeded,
                        "more than " + std::to_string(max_cosets_) + " cosets");
        }
        const std::size_t c = parent_.size();
        parent_.push_back(c);
        table_.resize(table_.size() + width_, -1);
        return c;
    }

    void define(std::size_t c, std::size_t x) {
        const std::size_t d = new_coset();
        at(c, x) = static_cast<std::int64_t>(d);
        at(d, x ^ 1) = static_cast<std::int64_t>(c);
    }

    std::size_t rep(std::size_t c) {
        std::size_t r = c;
        while (parent_[r] != r) r = parent_[r];
        while (parent_[c] != r) {
            const std::size_t next = parent_[c];
            parent_[c] = r;
            c = next;
        }
        return r;
    }

    void merge(std::size_t a, std::size_t b) {
        const std::size_t ra = rep(a), rb = rep(b);
        if (ra == rb) return;
        const std::size_t lo = std::min(ra, rb), hi = std::max(ra, rb);
        parent_[hi] = lo;
        queue_.push_back(hi);
    }

    void coincidence(std::size_t a, std::size_t b) {
        queue_.clear();
        merge(a, b);
        for (std::size_t i = 0; i < queue_.size(); ++i) {
            const std::size_t g = queue_[i];
            for (std::size_t x = 0; x < width_; ++x) {
                const auto d_raw = at(g, x);
                if (d_raw < 0) continue;
                const auto d = static_cast<std::size_t>(d_raw);
                at(d, x ^ 1) = -1;
                const std::size_t mu = rep(g), nu = rep(d);
                if (at(mu, x) >= 0) {
                    merge(nu, static_cast<std::size_t>(at(mu, x)));
                } else if (at(nu, x ^ 1) >= 0) {
                    merge(mu, static_cast<std::size_t>(at(nu, x ^ 1)));
                } else {
                    at(mu, x) = static_cast<std::int64_t>(nu);
                    at(nu, x ^ 1) = static_cast<std::int64_t>(mu);
                }
            }
        }
    }

    void scan_and_fill(std::size_t c, const std::vector<std::size_t>& w) {
        if (w.empty()) return;
        std::size_t f = c, b = c;
        std::size_t i = 0, j = w.size() - 1;
        while (true) {
            while (i <= j && at(f, w[i]) >= 0) {
                f = static_cast<std::size_t>(at(f, w[i]));
                ++i;
            }
            if (i > j) {
                if (f != b) coincidence(f, b);
                return;
            }
            while (j >= i && at(b, w[j] ^ 1) >= 0) {
                b = static_cast<std::size_t>(at(b, w[j] ^ 1));
                if (j == 0) {
                    coincidence(f, b);
                    return;
                }
                --j;
            }
            if (j < i) {
                coincidence(f, b);
                return;
            }
            if (i == j) {
                at(f, w[i]) = static_cast<std::int64_t>(b);
                at(b, w[i] ^ 1) = static_cast<std::int64_t>(f);
                return;
            }
            define(f, w[i]);
        }
    }

    std::size_t width_;
    std::size_t max_cosets_;
    std::vector<std::int64_t> table_;
    std::vector<std::size_t> parent_;
    std::vector<std::size_t> queue_;
};

}  // namespace

GroupPtr todd_coxeter(const Presentation& pres, std::size_t max_cosets, std::string id) {
    std::vector<std::vector<std::size_t>> relators;
    for (const auto& w : pres.relators) {
        std::vector<std::size_t> cols;
        for (const auto& [gen, exp] : w) {
            if (gen >= pres.gen_names.size()) {
                throw Error(ErrorKind::UnknownGenerator, "generator index " + std::to_string(gen));
            }
            const std::size_t col = 2 * gen + (exp < 0 ? 1 : 0);
            for (long k = 0; k < (exp < 0 ? -exp : exp); ++k) cols.push_back(col);
        }
        relators.push_back(std::move(cols));
    }
    CosetEnumerator tc(pres.gen_names.size(), max_cosets);
    tc.run(relators);
    return Group::from_regular_action(std::move(id), pres.gen_names, tc.compact());
}

}  // namespace gcode
