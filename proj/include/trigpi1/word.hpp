// Freely reduced words in a free group with numbered generators.
//
// A letter is a nonzero int: +g is generator number g (g >= 1), -g its
// inverse.  Generators 1, 2, 3 are the standard basis a1, a2, a3 of the
// fiber group; presentations may add further generators.  The named
// constants r = a1 a2 a3 and d = a2 a3 a2^-1 are recognized by the parser.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace trigpi1 {

// Shared error type; `kind` carries the contract error name.
struct Error : std::runtime_error {
  std::string kind;
  Error(std::string k, const std::string& msg)
      : std::runtime_error(k + ": " + msg), kind(std::move(k)) {}
};

class Word {
 public:
  Word() = default;
  explicit Word(std::vector<int> letters) {
    for (int l : letters) push(l);
  }
  static Word gen(int g) { return Word({g}); }

  const std::vector<int>& letters() const { return ls_; }
  std::size_t length() const { return ls_.size(); }
  bool trivial() const { return ls_.empty(); }

  // append with free reduction
  void push(int letter) {
    if (letter == 0) throw Error("BadLetter", "zero letter");
    if (!ls_.empty() && ls_.back() == -letter)
      ls_.pop_back();
    else
      ls_.push_back(letter);
  }
  void append(const Word& w) {
    for (int l : w.ls_) push(l);
  }

  Word inverse() const {
    Word r;
    for (auto it = ls_.rbegin(); it != ls_.rend(); ++it) r.ls_.push_back(-*it);
    return r;
  }
  Word operator*(const Word& o) const {
    Word r = *this;
    r.append(o);
    return r;
  }
  Word pow(int n) const {
    Word r;
    Word base = n >= 0 ? *this : inverse();
    for (int i = 0; i < (n >= 0 ? n : -n); ++i) r.append(base);
    return r;
  }
  // c w c^-1
  Word conj_by(const Word& c) const {
    Word r = c;
    r.append(*this);
    r.append(c.inverse());
    return r;
  }
  // cyclic reduction: conjugate so no cancelling first/last pair remains
  Word cyclically_reduced() const {
    Word r = *this;
    while (r.ls_.size() >= 2 && r.ls_.front() == -r.ls_.back()) {
      r.ls_.erase(r.ls_.begin());
      r.ls_.pop_back();
    }
    return r;
  }

  int exponent_sum(int g) const {
    int s = 0;
    for (int l : ls_) {
      if (l == g) ++s;
      if (l == -g) --s;
    }
    return s;
  }
  int max_generator() const {
    int m = 0;
    for (int l : ls_) m = std::max(m, l > 0 ? l : -l);
    return m;
  }

  bool operator==(const Word& o) const { return ls_ == o.ls_; }
  bool operator!=(const Word& o) const { return ls_ != o.ls_; }
  bool operator<(const Word& o) const { return ls_ < o.ls_; }

 private:
  std::vector<int> ls_;
};

// Word syntax: whitespace separated tokens NAME or NAME^INT, where NAME is a
// generator name from `gens`; tokens `r` and `d` expand to a1a2a3 and
// a2a3a2^-1 when not themselves generator names.  The single token `1`
// denotes the empty word.  Throws Error("Syntax", ...) on bad input.
Word parse_word(const std::string& text, const std::vector<std::string>& gens);

std::string print_word(const Word& w, const std::vector<std::string>& gens);

// default generator names a1 a2 a3
const std::vector<std::string>& standard_gens();

// rho = a1 a2 a3, delta = a2 a3 a2^-1
Word rho_word();
Word delta_word();

}  // namespace trigpi1
