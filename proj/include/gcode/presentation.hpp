#pragma once

// Finite presentations and Todd-Coxeter coset enumeration over the trivial
// subgroup.
//
// Grammar:
//   presentation ::= '<' gens '|' relations '>'
//   relations    ::= relation (',' relation)*
//   relation     ::= word '=' word ('=' word)*
//   word         ::= item+ | '1'          (juxtaposition or '*' = product)
//   item         ::= gen ('^' int)?
//
// A chain w1 = w2 = ... = wk expands to wi = wk for i < k; each relation
// lhs = rhs becomes the relator lhs * rhs^-1.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "gcode/group.hpp"

namespace gcode {

struct Presentation {
    std::vector<std::string> gen_names;
    std::vector<Word> relators;
};

Presentation parse_presentation(std::string_view text);
std::string format_presentation(const Presentation& pres);

/// Parses a word over `gen_names` starting at `pos`; stops at any character
/// that cannot continue the word. Generator names match longest-first.
Word parse_word(std::string_view text, std::size_t& pos, const std::vector<std::string>& gen_names);

inline constexpr std::size_t kDefaultMaxCosets = 1'000'000;

/// HLT coset enumeration; the completed table is closed into a Group whose
/// element order is BFS over the generators in declaration order.
GroupPtr todd_coxeter(const Presentation& pres, std::size_t max_cosets = kDefaultMaxCosets,
                      std::string id = "presentation");

inline constexpr std::string_view kPresentationD24 = "<r,s | r^12=s^2=1, srs=r^11>";
inline constexpr std::string_view kPresentationG64 =
    "<a,b,c,d | a^8=b^2=c^2=d^8=1, ab=ba, ac=ca, bc=cb, da=a^7cd, db=bd^5, dc=cd>";
/// The relations above define a group of order 256. Adding d^2 = a^6 b cuts
/// it to an order-64 quotient in which the weight-12 element
/// 1 + a^6c + ad^4 + ... generates a 32-dimensional right ideal.
inline constexpr std::string_view kPresentationG64Completed =
    "<a,b,c,d | a^8=b^2=c^2=d^8=1, ab=ba, ac=ca, bc=cb, da=a^7cd, db=bd^5, dc=cd, d^2=a^6b>";
inline constexpr std::string_view kPresentationG48 =
    "<a,b,c | a^4=b^4=c^3=1, ab=ba, ca=a^3b^3c, cb=ac>";
inline constexpr std::string_view kPresentationQ8 = "<i,j | i^4=1, i^2=j^2, j^-1*i*j=i^-1>";

}  // namespace gcode
