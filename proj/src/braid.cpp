#include "trigpi1/braid.hpp"

#include <sstream>

namespace trigpi1 {

void Braid::reduce() {
  std::vector<int> out;
  for (int l : ls_) {
    if (!out.empty() && out.back() == -l)
      out.pop_back();
    else
      out.push_back(l);
  }
  ls_ = std::move(out);
}

Braid Braid::sigma(int i, int exp) {
  std::vector<int> ls;
  if (i == 1 || i == 2) {
    int l = exp >= 0 ? i : -i;
    for (int k = 0; k < (exp >= 0 ? exp : -exp); ++k) ls.push_back(l);
  } else if (i == 3) {
    // sigma3^e = sigma1^-1 sigma2^e sigma1
    if (exp != 0) {
      ls.push_back(-1);
      int l = exp >= 0 ? 2 : -2;
      for (int k = 0; k < (exp >= 0 ? exp : -exp); ++k) ls.push_back(l);
      ls.push_back(1);
    }
  } else {
    throw Error("BadLetter", "sigma index must be 1, 2 or 3");
  }
  return Braid(ls);
}

Braid Braid::inverse() const {
  std::vector<int> ls;
  for (auto it = ls_.rbegin(); it != ls_.rend(); ++it) ls.push_back(-*it);
  return Braid(ls);
}

Braid Braid::operator*(const Braid& o) const {
  std::vector<int> ls = ls_;
  ls.insert(ls.end(), o.ls_.begin(), o.ls_.end());
  return Braid(ls);
}

Braid Braid::pow(int n) const {
  Braid base = n >= 0 ? *this : inverse();
  Braid r;
  for (int i = 0; i < (n >= 0 ? n : -n); ++i) r = r * base;
  return r;
}

int Braid::degree() const {
  int d = 0;
  for (int l : ls_) d += l > 0 ? 1 : -1;
  return d;
}

namespace {

// images of a1, a2, a3 under one Artin letter
Word act_letter(int letter, const Word& w) {
  Word out;
  for (int l : w.letters()) {
    int g = l > 0 ? l : -l;
    Word img;
    switch (letter) {
      case 1:  // sigma1
        if (g == 1)
          img = Word({1, 2, -1});
        else if (g == 2)
          img = Word({1});
        else
          img = Word::gen(g);
        break;
      case -1:  // sigma1^-1
        if (g == 1)
          img = Word({2});
        else if (g == 2)
          img = Word({-2, 1, 2});
        else
          img = Word::gen(g);
        break;
      case 2:  // sigma2
        if (g == 2)
          img = Word({2, 3, -2});
        else if (g == 3)
          img = Word({2});
        else
          img = Word::gen(g);
        break;
      case -2:  // sigma2^-1
        if (g == 2)
          img = Word({3});
        else if (g == 3)
          img = Word({-3, 2, 3});
        else
          img = Word::gen(g);
        break;
      default:
        throw Error("BadLetter", "braid letter out of range");
    }
    out.append(l > 0 ? img : img.inverse());
  }
  return out;
}

}  // namespace

Word act(const Braid& b, const Word& w) {
  Word out = w;
  const auto& ls = b.letters();
  for (auto it = ls.rbegin(); it != ls.rend(); ++it) out = act_letter(*it, out);
  return out;
}

Word Assignment::apply(const Word& w) const {
  Word out;
  for (int l : w.letters()) {
    int g = l > 0 ? l : -l;
    Word piece = (g >= 1 && g <= 3) ? img[g - 1] : Word::gen(g);
    out.append(l > 0 ? piece : piece.inverse());
  }
  return out;
}

Assignment assignment_of(const Braid& b) {
  Assignment a;
  for (int j = 0; j < 3; ++j) a.img[j] = act(b, Word::gen(j + 1));
  return a;
}

BraidClass normal_form(const Braid& b) {
  // sigma1 -> [[1,1],[0,1]], sigma2 -> [[1,0],[-1,1]]; product left to right
  std::array<std::int64_t, 4> m = {1, 0, 0, 1};
  auto mul = [&m](std::int64_t a, std::int64_t b2, std::int64_t c, std::int64_t d) {
    std::array<std::int64_t, 4> r = {m[0] * a + m[1] * c, m[0] * b2 + m[1] * d,
                                     m[2] * a + m[3] * c, m[2] * b2 + m[3] * d};
    m = r;
  };
  for (int l : b.letters()) {
    switch (l) {
      case 1: mul(1, 1, 0, 1); break;
      case -1: mul(1, -1, 0, 1); break;
      case 2: mul(1, 0, -1, 1); break;
      case -2: mul(1, 0, 1, 1); break;
      default: throw Error("BadLetter", "braid letter out of range");
    }
  }
  for (int i = 0; i < 4; ++i) {
    if (m[i] == 0) continue;
    if (m[i] < 0)
      for (auto& x : m) x = -x;
    break;
  }
  return BraidClass{m, b.degree()};
}

Braid parse_braid(const std::string& text) {
  std::vector<int> ls;
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
        throw Error("Syntax", "bad exponent in braid token '" + tok + "'");
      }
    }
    int i = 0;
    if (base == "s1")
      i = 1;
    else if (base == "s2")
      i = 2;
    else if (base == "s3")
      i = 3;
    else if (base == "1" && caret == std::string::npos)
      continue;
    else
      throw Error("Syntax", "unknown braid letter '" + base + "'");
    Braid piece = Braid::sigma(i, exp);
    const auto& pls = piece.letters();
    ls.insert(ls.end(), pls.begin(), pls.end());
  }
  return Braid(ls);
}

std::string print_braid(const Braid& b) {
  if (b.letters().empty()) return "1";
  std::ostringstream out;
  const auto& ls = b.letters();
  std::size_t i = 0;
  bool first = true;
  while (i < ls.size()) {
    std::size_t j = i;
    while (j < ls.size() && ls[j] == ls[i]) ++j;
    int g = ls[i] > 0 ? ls[i] : -ls[i];
    int exp = static_cast<int>(j - i) * (ls[i] > 0 ? 1 : -1);
    if (!first) out << ' ';
    first = false;
    out << 's' << g;
    if (exp != 1) out << '^' << exp;
    i = j;
  }
  return out.str();
}

Braid translation_edge(int i, int j) {
  if (i < 1 || i > 3 || j < 1 || j > 3)
    throw Error("BadParameters", "edge indices must be in 1..3");
  auto next = [](int a) { return a % 3 + 1; };
  if (j == next(i)) return Braid::sigma(i);        // m_[i,i+1] = sigma_i
  if (i == next(j)) return Braid::sigma(j, -1);    // m_[i+1,i] = sigma_i^-1
  // i == j: m_[i,i] = sigma_i sigma_{i-1} sigma_i, indices mod 3
  int prev = (i + 1) % 3 + 1;
  return Braid::sigma(i) * Braid::sigma(prev) * Braid::sigma(i);
}

Braid translation_path(const std::vector<std::pair<int, int>>& steps) {
  Braid m;
  for (const auto& [i, j] : steps) m = m * translation_edge(i, j);
  return m.inverse();
}

}  // namespace trigpi1
