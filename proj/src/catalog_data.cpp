// Transcribed family tables, the presentation schema for each row, the
// reference skeletons, and the two quintic scenarios.
//
// The irreducible tables store the printed parameter tuples; a dash is
// stored as 0 and suppresses the corresponding bracket relation (those
// positions belong to regions carrying a D-type fiber, whose relation is
// always skipped).  The exponent in the twisted relators of the blown-up
// fiber is P - 6, where D_P is the distinguished singular point read off
// the multiset.  Translated generators beta_j are precomputed words in
// alpha_1..alpha_3 for each translation length; the identities they satisfy
// were fixed once against the 1..4 edge calibration and are exercised by
// the unit tests.

#include <algorithm>
#include <array>

#include "trigpi1/braid.hpp"
#include "trigpi1/catalog.hpp"

namespace trigpi1 {

namespace {

using RM = RowMethod;

FamilyRow mk(TableId t, int row, const char* sing, const char* fig, int nr,
             int nc, RM method, std::vector<int> params, bool special,
             const char* splitting, const char* expected) {
  FamilyRow r;
  r.table = t;
  r.row = row;
  r.sing = sing;
  r.figure = fig;
  r.nr = nr;
  r.nc = nc;
  r.method = method;
  r.params = std::move(params);
  r.special = special;
  r.splitting = splitting;
  r.expected = expected;
  return r;
}

std::vector<FamilyRow> rows_d() {
  std::vector<FamilyRow> v;
  auto add = [&](int row, const char* s, const char* f, int nr, int nc, RM m,
                 std::vector<int> p, bool sp = false) {
    v.push_back(mk(TableId::D, row, s, f, nr, nc, m, std::move(p), sp, "", "C6"));
  };
  add(1, "D11+A4+2A2", "(a)", 1, 0, RM::Adjacent, {});
  add(2, "D9+2A4+A2", "(a)", 1, 0, RM::Edge1, {5, 5, 3});
  add(3, "D19", "(b)1", 1, 0, RM::Adjacent, {});
  add(4, "D7+A12", "(b)1", 1, 0, RM::Edge1, {13, 0, 1});
  add(5, "D7+A12", "(b)1", 0, 1, RM::Edge2, {13, 13, 1});
  add(6, "D17+A2", "(b)2", 1, 0, RM::Adjacent, {});
  add(7, "D9+A10", "(b)2", 1, 0, RM::Adjacent, {});
  add(8, "D7+A10+A2", "(b)2", 0, 1, RM::Edge3, {3, 11, 1});
  add(9, "D13+A6", "(c)1,~1", 0, 1, RM::Adjacent, {});
  add(10, "D7+2A6", "(c)1,~1", 0, 1, RM::Edge2, {7, 7, 1});
  add(11, "D15+A4", "(c)2", 1, 0, RM::Adjacent, {});
  add(12, "D11+A8", "(c)2", 1, 0, RM::Edge1, {9, 0, 5});
  add(13, "D7+A8+A4", "(c)2", 1, 0, RM::Edge1, {9, 0, 1});
  add(14, "D7+A8+A4", "(c)2", 1, 0, RM::Edge3, {9, 0, 1}, true);
  add(15, "D13+A4+A2", "(c)3", 1, 0, RM::Adjacent, {});
  add(16, "D11+A6+A2", "(c)3", 1, 0, RM::Edge2, {3, 7, 5});
  add(17, "D9+A6+A4", "(c)3", 1, 0, RM::Adjacent, {});
  add(18, "D7+A6+A4+A2", "(c)3", 1, 0, RM::Edge4, {3, 7, 1});
  return v;
}

std::vector<FamilyRow> rows_d5() {
  std::vector<FamilyRow> v;
  auto add = [&](int row, const char* s, const char* f, int nr, int nc, RM m,
                 std::vector<int> p, bool sp = false,
                 const char* exp = "C6") {
    v.push_back(mk(TableId::D5, row, s, f, nr, nc, m, std::move(p), sp, "", exp));
  };
  add(19, "D5+A6+A4+2A2", "(a)", 1, 0, RM::Bibigon, {7, 5, 3});
  add(20, "D5+A14", "(b)1", 0, 1, RM::Bibigon, {15, 0, 1});
  add(21, "D5+A12+A2", "(b)2", 1, 0, RM::Bibigon, {13, 3, 0});
  add(22, "D5+A10+A4", "(b)2", 1, 0, RM::Bibigon, {11, 5, 0}, true);
  add(23, "D5+A8+A6", "(c)1,~1", 0, 1, RM::Bibigon, {9, 7, 0}, true);
  add(24, "D5+A10+A4", "(c)2", 0, 1, RM::Bibigon, {11, 0, 1});
  add(25, "D5+A8+A4+A2", "(c)3", 1, 0, RM::Bibigon, {9, 3, 0});
  add(26, "D5+A6+2A4", "(c)3", 1, 0, RM::Bibigon, {5, 7, 0});
  add(27, "D5+A8+3A2", "d5:1", 1, 0, RM::Torus, {}, false, "B3bar");
  add(28, "D5+A10+2A2", "d5:2", 1, 0, RM::QuadEdge, {11, 0, 1});
  add(29, "D5+A8+A4+A2", "d5:3,~3", 0, 1, RM::QuadEdge, {5, 9, 3});
  add(30, "D5+A6+2A4", "d5:4", 1, 0, RM::QuadEdge, {5, 5, 7});
  return v;
}

std::vector<FamilyRow> rows_dr() {
  std::vector<FamilyRow> v;
  int row = 0;
  auto add = [&](const char* s, const char* f, const char* split) {
    v.push_back(mk(TableId::DR, ++row, s, f, 0, 0, RM::Adjacent, {}, false,
                   split, "abelian"));
  };
  add("D14+A3+A2", "(a)1", "C3+C3");
  add("D10+A7+A2", "(a)1", "C3+C3");
  add("D16+A2+A1", "(a)4", "C3+C3");
  add("D18+A1", "(b)2", "C3+C3");
  add("D14+D5", "(c)1", "C3+C3");
  add("D11+A5+A3", "(a)2", "C4+C2");
  add("D11+A7+A1", "(a)3", "C4+C2");
  add("D9+A7+A2+A1", "(a)5", "C4+C2");
  add("D10+A9", "(b)1", "C4+C2");
  add("D9+A9+A1", "(b)3", "C4+C2");
  add("D10+D9", "(c)2", "C4+C2");
  add("D9+D5+A5", "(c)2", "C4+C2");
  add("D10+A5+A4", "(a)2", "C5+C1");
  add("D14+A4+A1", "(a)3", "C5+C1");
  add("D14+2A2+A1", "(a)5", "C5+C1");
  add("D16+A3", "(b)1", "C5+C1");
  add("D16+A2+A1", "(b)3", "C5+C1");
  add("D12+D7", "(c)2", "C5+C1");
  add("D12+D5+A2", "(c)2", "C5+C1");
  add("D12+A5+2A1", "(d)1", "C3+C2+C1");
  add("D12+2A3+A1", "(d)2", "C3+C2+C1");
  add("D10+A5+A3+A1", "(d)2", "C3+C2+C1");
  add("D10+D8+A1", "(e)", "C3+C2+C1");
  add("D10+D6+A3", "(e)", "C3+C2+C1");
  return v;
}

std::vector<FamilyRow> rows_d5r() {
  std::vector<FamilyRow> v;
  int row = 0;
  auto add = [&](const char* s, const char* f, std::vector<int> p,
                 const char* split, const char* comm, bool sp = false) {
    v.push_back(mk(TableId::D5R, ++row, s, f, 0, 0, RM::Bibigon, std::move(p),
                   sp, split, comm));
  };
  add("D5+A7+A5+A2", "(a)1", {6, 8, 3, 0, 0}, "C3+C3", "SL(2,7)");
  add("D5+A9+A3+A2", "(a)1", {10, 4, 3, 0, 0}, "C3+C3", "1");
  add("D5+A11+A2+A1", "(a)4", {12, 12, 1, 0, 0}, "C3+C3", "1");
  add("D5+A13+A1", "(b)2", {14, 14, 1, 0, 0}, "C3+C3", "1");
  add("D14+D5", "(c)1", {0, 0, 1, 0, 0}, "C3+C3", "1", true);
  add("2D5+A9", "(c)1", {10, 10, 1, 0, 0}, "C3+C3", "C5");
  add("D5+2A5+A4", "(a)2", {6, 5, 6, 0, 0}, "C4+C2", "P7680");
  add("D5+A9+A4+A1", "(a)3,~3", {10, 5, 2, 0, 0}, "C4+C2", "1");
  add("D5+A9+2A2+A1", "(a)5", {10, 3, 10, 0, 2}, "C4+C2", "1");
  add("D5+A11+A3", "(b)1", {12, 4, 12, 0, 1}, "C4+C2", "C4");
  add("D5+A11+A2+A1", "(b)3", {12, 3, 12, 0, 2}, "C4+C2", "Z");
  add("D12+D5+A2", "(c)2", {0, 3, 0, 0, 1}, "C4+C2", "1");
  add("D7+D5+A7", "(c)2", {8, 0, 8, 0, 1}, "C4+C2", "C4");
  add("2D5+A7+A2", "(c)2", {8, 3, 8, 0, 0}, "C4+C2", "Q8");
  add("D5+A6+A5+A3", "(a)2", {7, 4, 6, 0, 0}, "C5+C1", "1");
  add("D5+A7+A6+A1", "(a)3,~3", {7, 8, 2, 0, 0}, "C5+C1", "1");
  add("D5+A7+A4+A2+A1", "(a)5", {5, 8, 8, 2, 0}, "C5+C1", "1");
  add("D5+A9+A5", "(b)1", {6, 10, 10, 1, 0}, "C5+C1", "1");
  add("D5+A9+A4+A1", "(b)3", {5, 10, 10, 2, 0}, "C5+C1", "1");
  add("D10+D5+A4", "(c)2", {5, 0, 0, 1, 0}, "C5+C1", "1");
  add("D9+D5+A5", "(c)2", {0, 6, 6, 1, 0}, "C5+C1", "1");
  add("2D5+A5+A4", "(c)2", {5, 6, 6, 0, 0}, "C5+C1", "1");
  return v;
}

Word comm(const Word& u, const Word& v) {
  return u * v * u.inverse() * v.inverse();
}

// beta_j after translating the reference basis along 0..4 edges
std::array<Word, 3> beta_words(RM m) {
  const Word a1 = Word::gen(1), a2 = Word::gen(2), a3 = Word::gen(3);
  const Word d = delta_word(), r = rho_word();
  switch (m) {
    case RM::Adjacent:
    case RM::Bibigon:
      return {a1, a2, a3};
    case RM::Edge1:
      return {d, a2, a1.conj_by((a2 * a3).inverse())};
    case RM::Edge2:
      return {a1.conj_by(d.inverse()), a2, d.conj_by(r.inverse())};
    case RM::Edge3:
      return {a2.conj_by(r).conj_by(d.inverse()), a1.conj_by(d.inverse()),
              d.conj_by(r.inverse())};
    case RM::Edge4:
    case RM::Torus: {
      Word u = a1.conj_by(d.inverse());  // d^-1 a1 d
      Word b1 = u.inverse() * a2.conj_by(r) * u;
      Word b2 = d.inverse() * a1.inverse() * d * a1 * d;
      Word b3 = u.conj_by(r.inverse());
      return {b1, b2, b3};
    }
    default:
      throw Error("BadTemplate", "no translated basis for this method");
  }
}

Word subst(const Word& w, const std::array<Word, 3>& b) {
  Word out;
  for (int l : w.letters())
    out.append(l > 0 ? b[l - 1] : b[-l - 1].inverse());
  return out;
}

// distinguished point D_P: the largest D-index in the multiset
int distinguished_p(const std::string& sing) {
  int best = 0;
  for (const SingLabel& l : parse_singularities(sing))
    if (l.kind == 'D' && l.index > best) best = l.index;
  if (best < 7) throw Error("BadTemplate", "no D_p point with p >= 7: " + sing);
  return best;
}

// common schema for a sextic whose distinguished regions share a vertex or
// are joined by a short translation path
Presentation d7_presentation(int P, int l, int m, RM method, bool extra14) {
  const Word a1 = Word::gen(1), a2 = Word::gen(2), a3 = Word::gen(3);
  const Word r = rho_word();
  const auto b = beta_words(method);
  Presentation pr;
  pr.gens = {"a1", "a2", "a3"};
  pr.relators.push_back(comm(a1 * a2, a3));
  const Braid tw = Braid::sigma(2, P - 6);
  for (int j = 2; j <= 3; ++j) {
    Word lhs = subst(act(tw, Word::gen(j)), b);
    Word rhs = b[static_cast<std::size_t>(j) - 1].conj_by(b[0]);
    pr.relators.push_back(lhs * rhs.inverse());
  }
  pr.relators.push_back(r.pow(-3) * b[0] * (a1 * a2));
  if (l > 0) pr.relators.push_back(bracket_relator(a1, a3, l));
  if (m > 0) pr.relators.push_back(bracket_relator(a2, a3, m));
  if (extra14) pr.relators.push_back(bracket_relator(b[0], b[1], 5));
  return pr;
}

// schema for the bibigonal insertion: bigon and quadrilateral share both
// inserted vertices, the quadrilateral carries the D5 point
Presentation d5_presentation(const FamilyRow& row) {
  const Word a1 = Word::gen(1), a2 = Word::gen(2), a3 = Word::gen(3);
  const Word d = delta_word(), r = rho_word();
  std::vector<int> p = row.params;
  p.resize(5, 0);
  const int l = p[0], m = p[1], n = p[2], k1 = p[3], k2 = p[4];
  Presentation pr;
  pr.gens = {"a1", "a2", "a3"};
  pr.relators.push_back(comm(a1 * a2, a3));
  pr.relators.push_back(comm(a1, (a2 * a3).pow(2)));
  pr.relators.push_back(r.pow(-4) * (a2 * a3).pow(2) * (a1 * a2));
  if (l > 0) pr.relators.push_back(bracket_relator(a1, a3, l));
  if (m > 0)
    pr.relators.push_back(bracket_relator(a2, a1.conj_by(r.inverse()), m));
  if (n > 0)
    pr.relators.push_back(bracket_relator(a2, d.conj_by(r.inverse()), n));
  if (k1 > 0)
    pr.relators.push_back(bracket_relator(d.conj_by(r.inverse()),
                                          a1.conj_by(d.inverse()), k1));
  if (k2 > 0)
    pr.relators.push_back(bracket_relator(a2.conj_by(r),
                                          a1.conj_by(d.inverse()), k2));
  if (row.special) {
    if (row.table == TableId::D5 && row.row == 22)
      pr.relators.push_back(
          a2.inverse() *
          (r.inverse() * a2 * r.inverse() * d * r * a2.inverse() * r));
    else if (row.table == TableId::D5 && row.row == 23)
      pr.relators.push_back(
          a2.inverse() *
          (r.inverse() * a2 * r.inverse() * a1 * r * a2.inverse() * r));
    else if (row.table == TableId::D5R && row.row == 5)
      pr.relators.push_back(a2.conj_by(a2 * a3) *
                            d.conj_by(r).inverse());
    else
      throw Error("BadTemplate", "unknown special row");
  }
  return pr;
}

// quadrilateral one edge away from the bigon (rows 28..30)
Presentation quad_edge_presentation(int l, int m, int n) {
  const Word a1 = Word::gen(1), a2 = Word::gen(2), a3 = Word::gen(3);
  const Word r = rho_word();
  const Word a1r = a1.conj_by(r.inverse());  // r^-1 a1 r
  Presentation pr;
  pr.gens = {"a1", "a2", "a3"};
  pr.relators.push_back(comm(a1 * a2, a3));
  pr.relators.push_back(comm((a1r * a2).pow(2), a3));
  pr.relators.push_back((a3 * r.pow(3)) * (a2 * a1r).pow(2).inverse());
  if (l > 0) pr.relators.push_back(bracket_relator(a1, a3, l));
  if (m > 0) pr.relators.push_back(bracket_relator(a2, a3, m));
  if (n > 0)
    pr.relators.push_back(bracket_relator(a1.conj_by(a2.inverse()),
                                          a2.conj_by(r.inverse()), n));
  return pr;
}

// the torus-type row: relations of both distinguished fibers written in the
// four-edge translated basis
Presentation torus_presentation() {
  const Word a1 = Word::gen(1), a2 = Word::gen(2), a3 = Word::gen(3);
  const Word r = rho_word();
  const auto b = beta_words(RM::Torus);
  Presentation pr;
  pr.gens = {"a1", "a2", "a3"};
  pr.relators.push_back(comm(a1 * a2, a3));
  pr.relators.push_back(bracket_relator(a2, a3, 3));
  pr.relators.push_back(bracket_relator(a1, a3, 9));
  pr.relators.push_back(comm((b[0] * b[1]).pow(2), b[2]));
  pr.relators.push_back(bracket_relator(b[1], b[2], 3));
  pr.relators.push_back(bracket_relator(b[0], b[2].conj_by(b[1]), 3));
  pr.relators.push_back((a3 * r.pow(3)) * (b[0] * b[1]).pow(2).inverse());
  return pr;
}

}  // namespace

std::vector<FamilyRow> table_rows(TableId which) {
  switch (which) {
    case TableId::D:
      return rows_d();
    case TableId::D5:
      return rows_d5();
    case TableId::DR:
      return rows_dr();
    case TableId::D5R:
      return rows_d5r();
  }
  throw Error("BadParameters", "unknown table");
}

Presentation row_presentation(const FamilyRow& r) {
  switch (r.method) {
    case RM::Adjacent:
    case RM::Edge1:
    case RM::Edge2:
    case RM::Edge3:
    case RM::Edge4: {
      std::vector<int> p = r.params;
      p.resize(3, 0);
      return d7_presentation(distinguished_p(r.sing), p[0], p[1], r.method,
                             r.special);
    }
    case RM::Bibigon:
      return d5_presentation(r);
    case RM::QuadEdge: {
      std::vector<int> p = r.params;
      p.resize(3, 0);
      return quad_edge_presentation(p[0], p[1], p[2]);
    }
    case RM::Torus:
      return torus_presentation();
  }
  throw Error("BadParameters", "unknown method");
}

std::vector<DecoratedSkeleton> reference_skeletons() {
  EnumOptions opt;
  opt.irreducible_only = true;
  auto all = enumerate_cubic_skeletons(4, opt);
  if (all.size() != 3)
    throw Error("MismatchWithTables", "expected three reference skeletons");
  auto key = [](const DecoratedSkeleton& d) {
    std::vector<int> fs = face_sizes(d.sk);
    std::sort(fs.begin(), fs.end());
    return fs;
  };
  std::vector<DecoratedSkeleton> out(3);
  for (auto& d : all) {
    std::vector<int> fs = key(d);
    if (fs == std::vector<int>{3, 3, 3, 3})
      out[0] = d;
    else if (fs == std::vector<int>{1, 1, 1, 9})
      out[1] = d;
    else if (fs == std::vector<int>{1, 1, 5, 5})
      out[2] = d;
    else
      throw Error("MismatchWithTables", "unexpected reference skeleton");
  }
  out[0].label = "(a)";
  out[1].label = "(b)";
  out[2].label = "(c)";
  return out;
}

DecoratedSkeleton quad_reference_skeleton() {
  EnumOptions opt;
  opt.irreducible_only = true;
  opt.distinguished_m = 4;
  auto all = enumerate_cubic_skeletons(6, opt);
  if (all.size() != 1)
    throw Error("MismatchWithTables",
                "expected a unique six-vertex skeleton with a distinguished "
                "quadrilateral");
  all[0].label = "d5";
  return all[0];
}

std::vector<Scenario> quintic_scenarios() {
  std::vector<Scenario> out;
  auto refs = reference_skeletons();

  {
    // the quintic with the A6 point blown up: base at any vertex of the
    // tetrahedral skeleton, one triangle omitted
    Scenario sc;
    sc.name = "quintic-A6-3A2";
    sc.k = 2;
    sc.skeleton = refs[0];
    ScenarioBase base;
    base.vertex = 0;
    base.marking.assign(static_cast<std::size_t>(refs[0].sk.nv()), 0);
    for (int v = 0; v < refs[0].sk.nv(); ++v)
      base.marking[static_cast<std::size_t>(v)] = refs[0].sk.vcycle[v][0];
    sc.base = base;
    FiberEntry blown;
    blown.improper = true;
    blown.inf = InfinityClass::dbl(4, 1, 1);
    blown.angle = AngleKind::A12;
    sc.fibers.push_back(blown);
    FiberEntry cusp;
    cusp.cls = FiberClass::A(2);
    cusp.angle = AngleKind::A23;
    sc.fibers.push_back(cusp);
    cusp.angle = AngleKind::A31;
    sc.fibers.push_back(cusp);
    out.push_back(std::move(sc));
  }

  {
    // the quintic with three A4 points: base at a monogonal vertex of the
    // two-pentagon skeleton, one pentagon reached along a single edge
    const DecoratedSkeleton& ref = refs[2];
    const Skeleton& s = ref.sk;
    Scenario sc;
    sc.name = "quintic-3A4";
    sc.k = 2;
    sc.skeleton = ref;
    int v0 = -1, dout = -1;
    for (int v = 0; v < s.nv() && v0 < 0; ++v) {
      bool loop = false;
      for (int d : s.vcycle[v])
        if (s.vert[s.pr[d]] == v) loop = true;
      if (loop) v0 = v;
    }
    if (v0 < 0) throw Error("MismatchWithTables", "no monogonal vertex");
    int monogon = -1;
    for (int d : s.vcycle[v0])
      if (s.m_of(s.face[d]) == 1 || s.m_of(s.face[s.pr[d]]) == 1) {
        if (s.m_of(s.face[d]) == 1) monogon = s.face[d];
        if (s.m_of(s.face[s.pr[d]]) == 1) monogon = s.face[s.pr[d]];
      }
    for (int d : s.vcycle[v0])
      if (s.vert[s.pr[d]] != v0) dout = d;
    if (monogon < 0 || dout < 0)
      throw Error("MismatchWithTables", "bad monogonal vertex");
    const int w = s.vert[s.pr[dout]];

    Marking mk(static_cast<std::size_t>(s.nv()), 0);
    for (int v = 0; v < s.nv(); ++v) mk[static_cast<std::size_t>(v)] = s.vcycle[v][0];
    int chosen = -1;
    for (int d : s.vcycle[v0]) {
      mk[static_cast<std::size_t>(v0)] = d;
      if (angle_face(s, mk, v0, AngleKind::A12) == monogon) {
        chosen = d;
        break;
      }
    }
    if (chosen < 0) throw Error("MismatchWithTables", "no marking for monogon");
    mk[static_cast<std::size_t>(v0)] = chosen;
    mk[static_cast<std::size_t>(w)] = s.pr[dout];

    const int near = angle_face(s, mk, v0, AngleKind::A23);
    int far = -1;
    for (int f = 0; f < s.nf(); ++f)
      if (s.m_of(f) == 5 && f != near) far = f;
    AngleKind far_angle = AngleKind::A12;
    bool found = false;
    for (AngleKind a : {AngleKind::A12, AngleKind::A23, AngleKind::A31})
      if (angle_face(s, mk, w, a) == far) {
        far_angle = a;
        found = true;
      }
    if (s.m_of(near) != 5 || far < 0 || !found)
      throw Error("MismatchWithTables", "pentagons not where expected");

    ScenarioBase base;
    base.vertex = v0;
    base.marking = mk;
    sc.base = base;

    FiberEntry blown;
    blown.improper = true;
    blown.inf = InfinityClass::dbl(2, 1, 1);
    blown.angle = AngleKind::A12;
    sc.fibers.push_back(blown);
    FiberEntry p1;
    p1.cls = FiberClass::A(4);
    p1.angle = AngleKind::A23;
    sc.fibers.push_back(p1);
    FiberEntry p2;
    p2.cls = FiberClass::A(4);
    p2.angle = far_angle;
    p2.path = {{dart_index(s, mk, dout), dart_index(s, mk, s.pr[dout])}};
    sc.fibers.push_back(p2);
    out.push_back(std::move(sc));
  }

  return out;
}

std::vector<Presentation> quintic_templates() {
  const Word a1 = Word::gen(1), a2 = Word::gen(2), a3 = Word::gen(3);
  const Word d = delta_word(), r = rho_word();
  std::vector<Presentation> out;

  Presentation p1;
  p1.gens = {"a1", "a2", "a3"};
  p1.relators.push_back(r.pow(-2) * a3);
  p1.relators.push_back(bracket_relator(a2, a3, 3));
  p1.relators.push_back(bracket_relator(a1, d, 3));
  p1.relators.push_back(a2.conj_by(a1 * a2 * a1) *
                        a1.conj_by(a3).inverse());
  p1.relators.push_back(a1.conj_by(a1 * a2) * a2.conj_by(a3).inverse());
  out.push_back(std::move(p1));

  Presentation p2;
  p2.gens = {"a1", "a2", "a3"};
  p2.relators.push_back(r.pow(-2) * a3);
  p2.relators.push_back(bracket_relator(a2, a3, 5));
  p2.relators.push_back(bracket_relator(a2, a1.conj_by(r.inverse()), 5));
  p2.relators.push_back((a1 * a2 * a1.inverse()) * a1.conj_by(a3).inverse());
  p2.relators.push_back(a1 * a2.conj_by(a3).inverse());
  out.push_back(std::move(p2));

  return out;
}

}  // namespace trigpi1
