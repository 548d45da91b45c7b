#include "gcode/field.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <sstream>

#include "gcode/error.hpp"

namespace gcode {

namespace {

using Poly = std::vector<unsigned>;

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo b over GF(p); b must be nonzero.
Poly poly_mod(Poly a, const Poly& b, unsigned p) {
    trim(a);
    const std::size_t db = b.size() - 1;
    // leading coefficient inverse by brute force, p is small
    unsigned lead_inv = 1;
    while ((lead_inv * b.back()) % p != 1) ++lead_inv;
    while (a.size() >= b.size()) {
        const unsigned factor = (a.back() * lead_inv) % p;
        const std::size_t shift = a.size() - 1 - db;
        for (std::size_t i = 0; i < b.size(); ++i) {
            a[shift + i] = (a[shift + i] + p * p - factor * b[i]) % p;
        }
        trim(a);
    }
    return a;
}

// Built-in moduli, constant-first; reproducible across runs by construction.
const std::map<std::pair<unsigned, unsigned>, Poly>& builtin_moduli() {
    static const std::map<std::pair<unsigned, unsigned>, Poly> table = {
        {{2, 2}, {1, 1, 1}},        // x^2+x+1
        {{2, 3}, {1, 1, 0, 1}},     // x^3+x+1
        {{2, 4}, {1, 1, 0, 0, 1}},  // x^4+x+1
        {{3, 2}, {1, 0, 1}},        // x^2+1
    };
    return table;
}

Poly first_irreducible(unsigned p, unsigned m) {
    // monic, so enumerate the m low coefficients in encoding order
    unsigned long long count = 1;
    for (unsigned i = 0; i < m; ++i) count *= p;
    for (unsigned long long code = 0; code < count; ++code) {
        Poly poly(m + 1, 0);
        unsigned long long c = code;
        for (unsigned i = 0; i < m; ++i) {
            poly[i] = static_cast<unsigned>(c % p);
            c /= p;
        }
        poly[m] = 1;
        if (is_irreducible(poly, p)) return poly;
    }
    throw Error(ErrorKind::ReducibleModulus, "no irreducible polynomial found");
}

}  // namespace

bool is_prime(unsigned n) noexcept {
    if (n < 2) return false;
    for (unsigned d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

bool is_irreducible(const std::vector<unsigned>& poly, unsigned p) {
    Poly f = poly;
    trim(f);
    if (f.size() < 2) return false;
    const std::size_t deg = f.size() - 1;
    if (deg == 1) return true;
    for (std::size_t d = 1; d <= deg / 2; ++d) {
        unsigned long long count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= p;
        for (unsigned long long code = 0; code < count; ++code) {
            Poly g(d + 1, 0);
            unsigned long long c = code;
            for (std::size_t i = 0; i < d; ++i) {
                g[i] = static_cast<unsigned>(c % p);
                c /= p;
            }
            g[d] = 1;
            if (poly_mod(f, g, p).empty()) return false;
        }
    }
    return true;
}

Field::Field(unsigned p, unsigned m, std::vector<unsigned> modulus)
    : p_(p), m_(m), q_(1), modulus_(std::move(modulus)) {
    for (unsigned i = 0; i < m_; ++i) q_ *= p_;
    add_.resize(q_ * q_);
    sub_.resize(q_ * q_);
    mul_.resize(q_ * q_);
    neg_.resize(q_);
    inv_.assign(q_, 0);

    std::vector<Poly> polys(q_);
    for (unsigned a = 0; a < q_; ++a) polys[a] = coeffs(static_cast<Elem>(a));

    for (unsigned a = 0; a < q_; ++a) {
        for (unsigned b = 0; b < q_; ++b) {
            Poly s(m_), d(m_);
            for (unsigned i = 0; i < m_; ++i) {
                s[i] = (polys[a][i] + polys[b][i]) % p_;
                d[i] = (polys[a][i] + p_ - polys[b][i]) % p_;
            }
            add_[idx(static_cast<Elem>(a), static_cast<Elem>(b))] = from_coeffs(s);
            sub_[idx(static_cast<Elem>(a), static_cast<Elem>(b))] = from_coeffs(d);

            Poly prod(2 * m_ - 1, 0);
            for (unsigned i = 0; i < m_; ++i) {
                for (unsigned j = 0; j < m_; ++j) {
                    prod[i + j] = (prod[i + j] + polys[a][i] * polys[b][j]) % p_;
                }
            }
            Poly r = poly_mod(prod, modulus_, p_);
            r.resize(m_, 0);
            mul_[idx(static_cast<Elem>(a), static_cast<Elem>(b))] = from_coeffs(r);
        }
    }
    for (unsigned a = 0; a < q_; ++a) {
        neg_[a] = sub_[idx(0, static_cast<Elem>(a))];
        for (unsigned b = 1; b < q_; ++b) {
            if (mul_[idx(static_cast<Elem>(a), static_cast<Elem>(b))] == 1) {
                inv_[a] = static_cast<Elem>(b);
                break;
            }
        }
    }
}

FieldPtr Field::create(unsigned p, unsigned m, std::optional<std::vector<unsigned>> modulus,
                       unsigned cap) {
    if (!gcode::is_prime(p)) throw Error(ErrorKind::NonPrime, std::to_string(p) + " is not prime");
    if (m < 1) throw Error(ErrorKind::UnsupportedSize, "extension degree must be >= 1");
    unsigned long long q = 1;
    for (unsigned i = 0; i < m; ++i) {
        q *= p;
        if (q > cap) {
            throw Error(ErrorKind::UnsupportedSize,
                        "field size exceeds cap " + std::to_string(cap));
        }
    }
    Poly mod;
    if (modulus) {
        mod = *modulus;
        for (unsigned c : mod) {
            if (c >= p) throw Error(ErrorKind::ReducibleModulus, "coefficient out of range");
        }
        Poly t = mod;
        trim(t);
        if (t.size() != m + 1 || t.back() != 1) {
            throw Error(ErrorKind::ReducibleModulus, "modulus must be monic of degree m");
        }
        mod = t;
        if (!is_irreducible(mod, p)) {
            throw Error(ErrorKind::ReducibleModulus, "modulus is reducible over GF(p)");
        }
    } else if (m == 1) {
        mod = {0, 1};
    } else if (auto it = builtin_moduli().find({p, m}); it != builtin_moduli().end()) {
        mod = it->second;
    } else {
        mod = first_irreducible(p, m);
    }
    return FieldPtr(new Field(p, m, std::move(mod)));
}

FieldPtr Field::parse(std::string_view spec) {
    std::string s;
    for (char c : spec) {
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    }
    std::size_t pos = 0;
    auto expect = [&](char c, const char* what) {
        if (pos >= s.size() || s[pos] != c) throw ParseError(pos, what);
        ++pos;
    };
    auto number = [&]() {
        unsigned value = 0;
        auto [ptr, ec] = std::from_chars(s.data() + pos, s.data() + s.size(), value);
        if (ec != std::errc()) throw ParseError(pos, "integer");
        pos = static_cast<std::size_t>(ptr - s.data());
        return value;
    };
    if (s.rfind("GF", 0) != 0 && s.rfind("gf", 0) != 0) throw ParseError(0, "'GF'");
    pos = 2;
    expect('(', "'('");
    unsigned base = number();
    unsigned p = 0, m = 0;
    if (pos < s.size() && s[pos] == '^') {
        ++pos;
        p = base;
        m = number();
    } else {
        // factor q = p^m
        for (unsigned d = 2; d <= base; ++d) {
            if (base % d == 0) {
                p = d;
                break;
            }
        }
        if (p == 0) throw Error(ErrorKind::NonPrime, "field size " + std::to_string(base));
        unsigned t = base;
        while (t % p == 0) {
            t /= p;
            ++m;
        }
        if (t != 1) {
            throw Error(ErrorKind::NonPrime, std::to_string(base) + " is not a prime power");
        }
    }
    expect(')', "')'");
    std::optional<Poly> modulus;
    if (pos < s.size()) {
        expect('[', "'['");
        Poly coeffs;
        coeffs.push_back(number());
        while (pos < s.size() && s[pos] == ',') {
            ++pos;
            coeffs.push_back(number());
        }
        expect(']', "']'");
        modulus = coeffs;
    }
    if (pos != s.size()) throw ParseError(pos, "end of field spec");
    return create(p, m, modulus);
}

Elem Field::inv(Elem a) const {
    if (a == 0) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
    return inv_[a];
}

Elem Field::div(Elem a, Elem b) const { return mul(a, inv(b)); }

Elem Field::pow(Elem a, unsigned long long e) const noexcept {
    Elem result = 1;
    Elem base = a;
    while (e) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

std::vector<unsigned> Field::coeffs(Elem a) const {
    std::vector<unsigned> c(m_);
    unsigned v = a;
    for (unsigned i = 0; i < m_; ++i) {
        c[i] = v % p_;
        v /= p_;
    }
    return c;
}

Elem Field::from_coeffs(const std::vector<unsigned>& c) const {
    unsigned v = 0;
    for (std::size_t i = c.size(); i-- > 0;) v = v * p_ + c[i] % p_;
    return static_cast<Elem>(v);
}

std::string Field::spec() const {
    std::ostringstream out;
    out << "GF(" << q_ << ")";
    if (m_ == 1) return out.str();
    out << '[';
    for (std::size_t i = 0; i < modulus_.size(); ++i) {
        if (i) out << ',';
        out << modulus_[i];
    }
    out << ']';
    return out.str();
}

std::string Field::format(Elem a) const {
    if (m_ == 1) return std::to_string(a);
    auto c = coeffs(a);
    std::string out;
    for (std::size_t i = c.size(); i-- > 0;) {
        if (c[i] == 0) continue;
        if (!out.empty()) out += '+';
        if (i == 0) {
            out += std::to_string(c[i]);
            continue;
        }
        if (c[i] != 1) out += std::to_string(c[i]);
        out += 'x';
        if (i > 1) out += '^' + std::to_string(i);
    }
    return out.empty() ? "0" : out;
}

bool same_field(const FieldPtr& a, const FieldPtr& b) noexcept {
    return a == b || (a && b && *a == *b);
}

FieldElement::FieldElement(FieldPtr field, Elem value) : field_(std::move(field)), value_(value) {
    if (value_ >= field_->q()) {
        throw Error(ErrorKind::FieldMismatch, "encoding out of range for " + field_->spec());
    }
}

void FieldElement::check_same(const FieldElement& b) const {
    if (!same_field(field_, b.field_)) {
        throw Error(ErrorKind::FieldMismatch, field_->spec() + " vs " + b.field_->spec());
    }
}

FieldElement FieldElement::operator+(const FieldElement& b) const {
    check_same(b);
    return {field_, field_->add(value_, b.value_)};
}

FieldElement FieldElement::operator-(const FieldElement& b) const {
    check_same(b);
    return {field_, field_->sub(value_, b.value_)};
}

FieldElement FieldElement::operator*(const FieldElement& b) const {
    check_same(b);
    return {field_, field_->mul(value_, b.value_)};
}

FieldElement FieldElement::operator/(const FieldElement& b) const {
    check_same(b);
    return {field_, field_->div(value_, b.value_)};
}

FieldElement fe_arith(const FieldElement& a, const FieldElement& b, ArithKind kind) {
    switch (kind) {
        case ArithKind::Add: return a + b;
        case ArithKind::Sub: return a - b;
        case ArithKind::Mul: return a * b;
        case ArithKind::Div: return a / b;
    }
    return a;
}

std::vector<FieldElement> enumerate(const FieldPtr& field) {
    std::vector<FieldElement> out;
    out.reserve(field->q());
    for (unsigned a = 0; a < field->q(); ++a) out.emplace_back(field, static_cast<Elem>(a));
    return out;
}

}  // namespace gcode
