#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace leonard {

/// Generators of the dihedral group acting on Leonard systems.
enum class D4Generator {
  Star,      ///< swap the roles of (A, E) and (A*, E*)
  Down,      ///< reverse the ordering of the E*_i
  DoubleDown ///< reverse the ordering of the E_i
};

/// A word over the generators, applied left to right.
using D4Word = std::vector<D4Generator>;

/// Accepts whitespace-separated tokens "star" | "*", "dn" | "↓", "DN" | "⇓";
/// unseparated symbol runs such as "⇓*" are also accepted. Empty text is the
/// identity. Throws ParseError on anything else.
D4Word parse_d4_word(std::string_view text);

std::string to_string(const D4Word& word);

/// One representative word for each of the eight group elements.
std::vector<D4Word> d4_elements();

}  // namespace leonard
