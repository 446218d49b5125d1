#include "leonard/d4.hpp"

#include "leonard/errors.hpp"

namespace leonard {

namespace {

constexpr std::string_view kDown = "↓";        // ↓
constexpr std::string_view kDoubleDown = "⇓";  // ⇓

}  // namespace

D4Word parse_d4_word(std::string_view text) {
  D4Word word;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const char c = text[pos];
    if (c == ' ' || c == '\t' || c == ',') {
      ++pos;
      continue;
    }
    auto take = [&](std::string_view token, D4Generator g) {
      if (text.substr(pos, token.size()) != token) return false;
      word.push_back(g);
      pos += token.size();
      return true;
    };
    if (take("star", D4Generator::Star) || take("*", D4Generator::Star) ||
        take("dn", D4Generator::Down) || take("DN", D4Generator::DoubleDown) ||
        take(kDown, D4Generator::Down) ||
        take(kDoubleDown, D4Generator::DoubleDown)) {
      continue;
    }
    throw ParseError("malformed D4 word '" + std::string(text) + "'");
  }
  return word;
}

std::string to_string(const D4Word& word) {
  std::string s;
  for (auto g : word) {
    if (!s.empty()) s += ' ';
    switch (g) {
      case D4Generator::Star: s += "star"; break;
      case D4Generator::Down: s += "dn"; break;
      case D4Generator::DoubleDown: s += "DN"; break;
    }
  }
  return s;
}

std::vector<D4Word> d4_elements() {
  using G = D4Generator;
  // ↓ and ⇓ generate a Klein four-group; composing with * gives the rest.
  return {
      {},
      {G::Down},
      {G::DoubleDown},
      {G::Down, G::DoubleDown},
      {G::Star},
      {G::Star, G::Down},
      {G::Star, G::DoubleDown},
      {G::Star, G::Down, G::DoubleDown},
  };
}

}  // namespace leonard
