// The braid group B3 acting on the free group <a1,a2,a3>.
//
// Braid words are sequences of letters +-1 (sigma1) and +-2 (sigma2);
// sigma3 := sigma1^-1 sigma2 sigma1 is expanded by the parser.  The Artin
// action is
//     sigma_i : a_i |-> a_i a_{i+1} a_i^-1,  a_{i+1} |-> a_i,
// with the rightmost letter of a braid word acting first, so that
// act(uv, w) = act(u, act(v, w)).  Every braid fixes r = a1 a2 a3.
//
// Equality in B3 is decided by the pair (matrix class, degree): the matrix
// is the image under sigma1 |-> [[1,1],[0,1]], sigma2 |-> [[1,0],[-1,1]]
// taken modulo global sign (the modular group), and degree is the exponent
// sum.  The kernel of the matrix-class map is the center, generated by
// (sigma1 sigma2)^3 of degree 6, so the pair is a complete invariant.
//
// Translation braids along marked skeleton edges [i,j]:
//     m_[i,i+1] = sigma_i,  m_[i+1,i] = sigma_i^-1,  m_[i,i] = sigma_i
//     sigma_{i-1} sigma_i   (indices mod 3).
// translation_path composes edge translations and returns the braid whose
// action expresses the basis seen at the far end of the path in the base
// words; steps are listed factor-first, i.e. the step incident to the far
// end comes first and the step leaving the base vertex comes last.  The
// composition order is calibrated against the three printed path displays
// (single edge, double edge, length-four path) and frozen by tests.

#pragma once

#include <array>
#include <cstdint>

#include "trigpi1/word.hpp"

namespace trigpi1 {

class Braid {
 public:
  Braid() = default;
  explicit Braid(std::vector<int> letters) : ls_(std::move(letters)) {
    for (int l : ls_)
      if (l == 0 || l > 2 || l < -2)
        throw Error("BadLetter", "braid letters are +-1, +-2");
    reduce();
  }
  static Braid sigma(int i, int exp = 1);  // i in {1,2,3}; sigma3 expands

  const std::vector<int>& letters() const { return ls_; }
  Braid inverse() const;
  Braid operator*(const Braid& o) const;
  Braid pow(int n) const;
  int degree() const;
  bool operator==(const Braid& o) const { return ls_ == o.ls_; }

 private:
  void reduce();  // cancel adjacent s s^-1 pairs only
  std::vector<int> ls_;
};

// Artin action; letters outside {1,2,3} in w are left fixed.
Word act(const Braid& b, const Word& w);

// Endomorphism given by generator images; apply substitutes each letter.
struct Assignment {
  std::array<Word, 3> img;  // images of a1, a2, a3
  Word apply(const Word& w) const;
};
Assignment assignment_of(const Braid& b);

// (matrix class, degree): complete invariant of the B3 element.
struct BraidClass {
  std::array<std::int64_t, 4> m;  // row major, sign-normalized
  int degree = 0;
  bool operator==(const BraidClass& o) const = default;
  bool identity_class() const { return m == std::array<std::int64_t, 4>{1, 0, 0, 1}; }
};
BraidClass normal_form(const Braid& b);

Braid parse_braid(const std::string& text);
std::string print_braid(const Braid& b);

// translation along one marked edge [i,j], i, j in {1,2,3}
Braid translation_edge(int i, int j);

// composite translation for a path, steps listed factor-first (see header
// comment); returns the braid whose action maps base words to the basis at
// the far end of the path.
Braid translation_path(const std::vector<std::pair<int, int>>& steps);

}  // namespace trigpi1
