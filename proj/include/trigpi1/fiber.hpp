// Singular-fiber dictionary for trigonal curves: multiplicities, Milnor
// numbers, elementary transformations, local monodromies, and the local
// slope catalog for fibers meeting the exceptional section.
//
// Proper fiber classes and their multiplicities:
//   A0 0, A0* 1, A0** 2, A1* 3, A2* 4, A_p p+1, D_q q+2, E_n n+2,
//   J_{r,p} p+6r.
// One elementary transformation advances
//   A0 -> D4, A0* -> D5, A0** -> E6, A1* -> E7, A2* -> E8, A_p -> D_{p+5},
//   D_q -> J_{2,q-4}, E_n -> E_{n+6}, J_{r,p} -> J_{r+1,p}
// and always adds 6 to the multiplicity.
//
// A slope is the free-group element k attached to an improper fiber; its
// braid relations read m(a_j) = k a_j k^-1 and it enters the relation at
// infinity r^k = k_r ... k_1.

#pragma once

#include <memory>

#include "trigpi1/braid.hpp"

namespace trigpi1 {

enum class FiberKind { A0, A0s, A0ss, A1s, A2s, A, D, E, J };

struct FiberClass {
  FiberKind kind = FiberKind::A0;
  int p = 0;  // A_p; D_q stores q here; E_n stores n; J_{r,p} stores p
  int r = 0;  // J only

  static FiberClass A(int p);
  static FiberClass Dq(int q);
  static FiberClass En(int n);
  static FiberClass Jrp(int r, int p);
  static FiberClass simple(FiberKind k);  // the parameterless kinds

  bool operator==(const FiberClass&) const = default;
};

int multiplicity(const FiberClass& f);
int milnor(const FiberClass& f);  // Error("NonSimple") for J and E_{n>8}
FiberClass elementary_transform(const FiberClass& f);

FiberClass parse_fiber(const std::string& token);
std::string print_fiber(const FiberClass& f);

// braid monodromy about a proper singular fiber seen through angle i
Braid local_monodromy(int i, const FiberClass& f);  // Error("UnsupportedFiber")

enum class InfKind { Proper, Smooth, Double, TwoBranch, OddTan, Triple };

struct InfinityClass {
  InfKind kind = InfKind::Proper;
  int p = 0, q = 0;
  int side = 1;  // 1 = angle 12, 2 = angle 23
  std::shared_ptr<InfinityClass> inner;  // Triple only

  static InfinityClass proper(int p, int side = 1);
  static InfinityClass smooth(int p, int q, int side);
  static InfinityClass dbl(int p, int q, int side);
  static InfinityClass twobranch(int p, int q, int side = 1);
  static InfinityClass oddtan(int p, int side = 1);
  static InfinityClass triple(InfinityClass inner);
};

struct LocalData {
  Braid monodromy;
  Word slope;                 // empty for proper fibers
  std::vector<Word> relators;  // freely reduced m(a_j) k a_j^-1 k^-1, j=1..3
};

LocalData local_slope(const InfinityClass& c);  // Error("BadParameters")

// tokens: proper(p), smooth(p,q), double(p,q), twobranch(p,q), oddtan(p),
// triple(<token>), each followed by @12 or @23
InfinityClass parse_infinity(const std::string& token);
std::string print_infinity(const InfinityClass& c);

// {a,b}_m: (ab)^k (ba)^-k for m=2k; (ab)^k a ((ba)^k b)^-1 for m=2k+1
Word bracket_relator(const Word& a, const Word& b, int m);

enum class AngleKind { A12, A23, A31 };

// single relation carried by an m-gonal region containing one A-type fiber
Word region_relator(AngleKind angle, int p);

}  // namespace trigpi1
