#include "trigpi1/word.hpp"

#include <cctype>
#include <sstream>

namespace trigpi1 {

const std::vector<std::string>& standard_gens() {
  static const std::vector<std::string> g = {"a1", "a2", "a3"};
  return g;
}

Word rho_word() { return Word({1, 2, 3}); }
Word delta_word() { return Word({2, 3, -2}); }

namespace {

int find_gen(const std::vector<std::string>& gens, const std::string& name) {
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (gens[i] == name) return static_cast<int>(i) + 1;
  return 0;
}

}  // namespace

Word parse_word(const std::string& text, const std::vector<std::string>& gens) {
  Word w;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    std::string base = tok;
    int exp = 1;
    auto caret = tok.find('^');
    if (caret != std::string::npos) {
      base = tok.substr(0, caret);
      std::string e = tok.substr(caret + 1);
      try {
        std::size_t used = 0;
        exp = std::stoi(e, &used);
        if (used != e.size()) throw std::invalid_argument(e);
      } catch (const std::exception&) {
        throw Error("Syntax", "bad exponent in token '" + tok + "'");
      }
    }
    if (base == "1" && caret == std::string::npos) continue;
    Word piece;
    if (int g = find_gen(gens, base); g != 0) {
      piece = Word::gen(g);
    } else if (base == "r") {
      piece = rho_word();
    } else if (base == "d") {
      piece = delta_word();
    } else {
      throw Error("Syntax", "unknown generator '" + base + "'");
    }
    w.append(piece.pow(exp));
  }
  return w;
}

std::string print_word(const Word& w, const std::vector<std::string>& gens) {
  if (w.trivial()) return "1";
  std::ostringstream out;
  const auto& ls = w.letters();
  std::size_t i = 0;
  bool first = true;
  while (i < ls.size()) {
    std::size_t j = i;
    while (j < ls.size() && ls[j] == ls[i]) ++j;
    int g = ls[i] > 0 ? ls[i] : -ls[i];
    int exp = static_cast<int>(j - i) * (ls[i] > 0 ? 1 : -1);
    if (g > static_cast<int>(gens.size()))
      throw Error("Syntax", "generator index out of range in print_word");
    if (!first) out << ' ';
    first = false;
    out << gens[g - 1];
    if (exp != 1) out << '^' << exp;
    i = j;
  }
  return out.str();
}

}  // namespace trigpi1
