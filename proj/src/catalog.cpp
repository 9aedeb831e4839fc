// Census regeneration and row verification.
//
// The irreducible censuses are rebuilt geometrically: a bigonal insertion
// into an edge orbit of a reference skeleton (case D), a bibigonal insertion
// (case D5, rows 19..26), or a bigonal insertion into the six-vertex
// skeleton carrying the distinguished quadrilateral (rows 27..30).  Classes
// are deduplicated by canonical code, grouped into mirror pairs, and matched
// to the printed rows by singularity multiset, chirality count, figure
// letter, and, where that is still ambiguous, the distance between the two
// distinguished regions.
//
// Verification is layered.  Irreducible rows enumerate cosets directly and
// expect order six; when the enumeration overflows, the documented fallback
// adjoins the central element (a2 a3)^2, expects the quotient of order two,
// and flags the verdict.  Reducible rows of the first kind are certified
// abelian by exhibiting each generator commutator as a consequence of the
// region relator at R_I and the relation at infinity.  Reducible rows of
// the second kind adjoin (a2 a3)^2, compare the abelianization with the
// splitting type, and present the commutant through its normal closure.

#include "trigpi1/catalog.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "trigpi1/braid.hpp"

namespace trigpi1 {

namespace {

Word comm(const Word& u, const Word& v) {
  return u * v * u.inverse() * v.inverse();
}

std::string table_tag(TableId t) {
  switch (t) {
    case TableId::D:
      return "d";
    case TableId::D5:
      return "d5";
    case TableId::DR:
      return "d-r";
    case TableId::D5R:
      return "d5-r";
  }
  return "?";
}

std::string invariants_str(const AbelianInvariants& ab) {
  std::string s = "(";
  for (std::size_t i = 0; i < ab.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(ab[i]);
  }
  return s + ")";
}

struct RawClass {
  DecoratedSkeleton d;
  std::string ref;  // figure letter of the base skeleton
};

void insert_class(std::map<Code, RawClass>& classes, DecoratedSkeleton d,
                  const std::string& ref, int expected_k) {
  if (k_index(d.sk, d.ts) != expected_k)
    throw Error("MismatchWithTables", "census skeleton has the wrong index");
  Code c = canonical_code(d);
  if (!classes.count(c)) classes.emplace(c, RawClass{std::move(d), ref});
}

int method_distance(RowMethod m) {
  switch (m) {
    case RowMethod::Adjacent:
    case RowMethod::Bibigon:
      return 0;
    case RowMethod::Edge1:
      return 1;
    case RowMethod::Edge2:
      return 2;
    case RowMethod::Edge3:
      return 3;
    case RowMethod::Edge4:
      return 4;
    default:
      return -1;  // not used as a tie break
  }
}

std::string figure_letter(const std::string& figure) {
  if (figure.rfind("d5", 0) == 0) return "d5";
  return figure.substr(0, 3);
}

// group orientation classes into mirror classes and match them to the rows
std::vector<CensusClass> match_rows(const std::map<Code, RawClass>& classes,
                                    std::vector<FamilyRow> rows,
                                    SextCase sc) {
  std::vector<CensusClass> out;
  std::vector<std::string> refs;
  std::set<Code> used;
  for (const auto& [code, rc] : classes) {
    if (used.count(code)) continue;
    used.insert(code);
    CensusClass cc;
    cc.d = rc.d;
    if (is_mirror_symmetric(rc.d)) {
      cc.nr = 1;
    } else {
      Code mirror = mirror_code(rc.d);
      if (!classes.count(mirror))
        throw Error("MismatchWithTables", "mirror image missing from census");
      used.insert(mirror);
      cc.nc = 1;
    }
    cc.sing = print_singularities(singularity_set(rc.d, sc));
    cc.distance = region_distance(rc.d.sk, rc.d.RI, rc.d.RII);
    out.push_back(cc);
    refs.push_back(rc.ref);
  }

  std::vector<bool> taken(rows.size(), false);
  for (std::size_t i = 0; i < out.size(); ++i) {
    std::vector<std::size_t> cand;
    for (std::size_t j = 0; j < rows.size(); ++j) {
      if (taken[j]) continue;
      if (rows[j].sing != out[i].sing) continue;
      if (rows[j].nr != out[i].nr || rows[j].nc != out[i].nc) continue;
      if (figure_letter(rows[j].figure) != refs[i]) continue;
      cand.push_back(j);
    }
    if (cand.size() > 1) {
      std::vector<std::size_t> exact;
      for (std::size_t j : cand)
        if (method_distance(rows[j].method) == out[i].distance)
          exact.push_back(j);
      cand = exact;
    }
    if (cand.size() != 1)
      throw Error("MismatchWithTables",
                  "census class " + out[i].sing + " does not match one row");
    taken[cand[0]] = true;
    out[i].row = rows[cand[0]].row;
    if (method_distance(rows[cand[0]].method) >= 0 &&
        method_distance(rows[cand[0]].method) != out[i].distance)
      throw Error("MismatchWithTables",
                  "region distance disagrees for " + out[i].sing);
  }
  for (std::size_t j = 0; j < rows.size(); ++j)
    if (!taken[j])
      throw Error("MismatchWithTables", "row not realized: " + rows[j].sing);
  std::sort(out.begin(), out.end(),
            [](const CensusClass& a, const CensusClass& b) {
              return a.row < b.row;
            });
  return out;
}

}  // namespace

Census generate_tables() {
  Census census;
  const auto refs = reference_skeletons();

  std::map<Code, RawClass> classes_d;
  for (const auto& ref : refs) {
    for (int e : edge_orbit_reps(ref.sk)) {
      InsertionResult ins = insert_bigon(ref.sk, e);
      TypeSpec ts = uniform_typespec(ins.sk);
      if (!splitting_markings(ins.sk, ts).empty()) continue;
      for (int f = 0; f < ins.sk.nf(); ++f) {
        if (f == ins.ri_face) continue;
        DecoratedSkeleton d{ins.sk, ts, ins.ri_face, f, ref.label};
        insert_class(classes_d, std::move(d), ref.label, 3);
      }
    }
  }
  census.d = match_rows(classes_d, table_rows(TableId::D), SextCase::D7);

  std::map<Code, RawClass> classes_d5;
  for (const auto& ref : refs) {
    for (int e : edge_orbit_reps(ref.sk)) {
      for (int orient = 0; orient < 2; ++orient) {
        InsertionResult ins = insert_bibigon(ref.sk, e, orient);
        TypeSpec ts = uniform_typespec(ins.sk);
        if (!splitting_markings(ins.sk, ts).empty()) continue;
        DecoratedSkeleton d{ins.sk, ts, ins.ri_face, ins.rii_face, ref.label};
        insert_class(classes_d5, std::move(d), ref.label, 4);
      }
    }
  }
  {
    const DecoratedSkeleton quad = quad_reference_skeleton();
    const int qf = quad.RII;
    const int qdart = quad.sk.fcycle[qf][0];
    for (int e : edge_orbit_reps(quad.sk, decorated_dart_attrs(quad))) {
      if (quad.sk.face[e] == qf || quad.sk.face[quad.sk.pr[e]] == qf)
        continue;  // the quadrilateral must survive the insertion
      InsertionResult ins = insert_bigon(quad.sk, e);
      TypeSpec ts = uniform_typespec(ins.sk);
      if (!splitting_markings(ins.sk, ts).empty()) continue;
      DecoratedSkeleton d{ins.sk, ts, ins.ri_face, ins.sk.face[qdart], "d5"};
      insert_class(classes_d5, std::move(d), "d5", 4);
    }
  }
  census.d5 = match_rows(classes_d5, table_rows(TableId::D5), SextCase::D5);

  std::set<std::string> multisets;
  for (const auto& cc : census.d) {
    census.families_d += cc.nr + 2 * cc.nc;
    multisets.insert(cc.sing);
  }
  for (const auto& cc : census.d5) {
    census.families_d5 += cc.nr + 2 * cc.nc;
    multisets.insert(cc.sing);
  }
  census.distinct_multisets = static_cast<int>(multisets.size());
  return census;
}

namespace {

long long finite_order(const AbelianInvariants& ab) {
  long long n = 1;
  for (long long d : ab) {
    if (d == 0) return 0;
    n *= d;
  }
  return n;
}

void check_c6(const Presentation& p, Verdict& v, long long limit) {
  const AbelianInvariants ab = abelian_invariants(p);
  const bool ab_ok = ab == AbelianInvariants{6};
  try {
    EnumerationResult er = todd_coxeter(p, {}, limit);
    v.computed = "order " + std::to_string(er.index) + ", ab " +
                 invariants_str(ab);
    v.match = ab_ok && er.index == 6;
    return;
  } catch (const Error& e) {
    if (e.kind != "Overflow") throw;
  }
  Presentation q = add_relators(p, {(Word::gen(2) * Word::gen(3)).pow(2)});
  try {
    EnumerationResult er = todd_coxeter(q, {}, limit);
    v.computed = "central quotient of order " + std::to_string(er.index) +
                 ", ab " + invariants_str(ab);
    v.flagged = true;
    v.notes = "relies on the centrality of (a2 a3)^2";
    v.match = ab_ok && er.index == 2;
  } catch (const Error& e) {
    if (e.kind != "Overflow") throw;
    v.computed = "enumeration overflow";
    v.match = false;
  }
}

void check_torus_row(const Presentation& p, Verdict& v, long long limit) {
  const AbelianInvariants ab = abelian_invariants(p);
  Presentation cp = normal_closure_presentation(
      p, {Word::gen(1) * Word::gen(3).inverse()}, limit);
  const bool free2 = cp.gens.size() == 2 && cp.relators.empty();
  v.computed = "ab " + invariants_str(ab) + ", closure of a1 a3^-1 on " +
               std::to_string(cp.gens.size()) + " generators with " +
               std::to_string(cp.relators.size()) + " relators";
  v.match = ab == AbelianInvariants{6} && free2;
}

// abelianness certificate for a row whose distinguished regions are
// adjacent: each commutator is derived from the R_I relator and the
// relation at infinity alone
bool certify_abelian(const Presentation& p, std::string& notes) {
  const Word a1 = Word::gen(1), a2 = Word::gen(2), a3 = Word::gen(3);
  std::vector<Word> facts;
  facts.push_back(comm(a1 * a2, a3));
  facts.push_back(rho_word().pow(-3) * a1 * (a1 * a2));
  for (const Word& f : facts) {
    bool present = false;
    for (const Word& r : p.relators) present = present || r == f;
    if (!present) {
      notes = "expected relators not present";
      return false;
    }
  }
  ProverOptions po;
  po.max_length = 80;
  po.max_nodes = 400000;
  const Word inf_short = a2 * a1 * a2 * a3.pow(3);
  if (!is_consequence(facts, inf_short, po)) {
    notes = "no certificate for the shortened relation at infinity";
    return false;
  }
  facts.push_back(inf_short);
  for (const Word& goal :
       {comm(a2, a3), comm(a1, a3), comm(a1, a2)}) {
    if (!is_consequence(facts, goal, po)) {
      notes = "no certificate for a commutator";
      return false;
    }
    facts.push_back(goal);
  }
  return true;
}

AbelianInvariants splitting_invariants(const std::string& splitting) {
  if (splitting == "C3+C3") return {12};
  if (splitting == "C4+C2") return {2, 2};
  if (splitting == "C5+C1") return {8};
  throw Error("BadParameters", "unknown splitting " + splitting);
}

bool heavy_commutant(const std::string& expected) {
  return expected == "SL(2,7)" || expected == "P7680" || expected == "Z" ||
         expected == "Q8";
}

void check_commutant(const FamilyRow& r, const Presentation& p, Verdict& v,
                     bool extended, long long limit) {
  const Word a1 = Word::gen(1), a2 = Word::gen(2), a3 = Word::gen(3);
  Presentation g = add_relators(p, {(a2 * a3).pow(2)});
  const AbelianInvariants gab = abelian_invariants(g);
  const AbelianInvariants want = splitting_invariants(r.splitting);
  std::string computed = "ab " + invariants_str(gab);
  if (gab != want) {
    v.computed = computed;
    v.match = false;
    return;
  }
  if (!extended && heavy_commutant(r.expected)) {
    v.computed = computed;
    v.match = true;
    v.notes = "commutant deferred to the extended run";
    return;
  }

  const std::vector<Word> comms = {comm(a1, a2), comm(a1, a3), comm(a2, a3)};
  if (r.expected == "Z") {
    // the commutant coincides with the closure of a1 a2^-1 and is free
    Presentation h = normal_closure_presentation(
        g, {a1 * a2.inverse()}, limit);
    const bool ok = h.gens.size() == 1 && h.relators.empty();
    v.computed = computed + ", closure of a1 a2^-1 on " +
                 std::to_string(h.gens.size()) + " generators with " +
                 std::to_string(h.relators.size()) + " relators";
    v.match = ok;
    return;
  }
  if (r.expected == "Q8") {
    Presentation cp = normal_closure_presentation(g, comms, limit);
    const AbelianInvariants cab = abelian_invariants(cp);
    Presentation h = normal_closure_presentation(
        g, {a1 * a2.inverse()}, limit);
    const AbelianInvariants hab = abelian_invariants(h);
    computed += ", commutant ab " + invariants_str(cab) +
                ", closure ab " + invariants_str(hab);
    bool ok = cab == AbelianInvariants{3, 0} && hab == AbelianInvariants{0};
    std::string tower;
    if (ok) {
      ok = false;
      for (std::size_t gi = 0; gi < h.gens.size() && !ok; ++gi) {
        Presentation hq = add_relators(h, {Word::gen(static_cast<int>(gi) + 1).pow(3)});
        try {
          EnumerationResult er = todd_coxeter(hq, {}, limit);
          std::vector<Word> hcomms;
          for (std::size_t x = 0; x < hq.gens.size(); ++x)
            for (std::size_t y = x + 1; y < hq.gens.size(); ++y)
              hcomms.push_back(comm(Word::gen(static_cast<int>(x) + 1),
                                    Word::gen(static_cast<int>(y) + 1)));
          SmallGroup sg = identify_small(
              normal_closure_presentation(hq, hcomms, limit), limit);
          if (sg.kind == "Q8") {
            ok = true;
            tower = ", quotient of order " + std::to_string(er.index) +
                    " with quaternion commutant";
          }
        } catch (const Error& e) {
          if (e.kind != "Overflow") throw;
        }
      }
    }
    v.computed = computed + tower;
    v.match = ok;
    return;
  }

  Presentation cp = normal_closure_presentation(g, comms, limit);
  EnumerationResult er = todd_coxeter(cp, {}, limit);
  const AbelianInvariants cab = abelian_invariants(cp);
  computed += ", commutant order " + std::to_string(er.index) + " ab " +
              invariants_str(cab);
  v.computed = computed;
  if (r.expected == "1")
    v.match = er.index == 1;
  else if (r.expected == "C4")
    v.match = er.index == 4 && cab == AbelianInvariants{4};
  else if (r.expected == "C5")
    v.match = er.index == 5 && cab == AbelianInvariants{5};
  else if (r.expected == "SL(2,7)")
    v.match = er.index == 336 && cab.empty();
  else if (r.expected == "P7680")
    v.match = er.index == 7680 && cab.empty();
  else
    throw Error("BadParameters", "unknown commutant tag " + r.expected);
}

}  // namespace

Verdict verify_row(const FamilyRow& r, bool extended, long long limit) {
  Verdict v;
  v.table = r.table;
  v.row = r.row;
  v.name = table_tag(r.table) + ":" + std::to_string(r.row) + ":" + r.sing;
  v.expected = r.expected;
  Presentation p = row_presentation(r);
  try {
    switch (r.table) {
      case TableId::D:
      case TableId::D5:
        if (r.expected == "B3bar")
          check_torus_row(p, v, limit);
        else
          check_c6(p, v, limit);
        break;
      case TableId::DR: {
        const AbelianInvariants ab = abelian_invariants(p);
        v.match = certify_abelian(p, v.notes);
        v.computed = std::string(v.match ? "abelian" : "not certified") +
                     ", ab " + invariants_str(ab);
        break;
      }
      case TableId::D5R:
        check_commutant(r, p, v, extended, limit);
        break;
    }
  } catch (const Error& e) {
    if (e.kind != "Overflow") throw;
    v.computed = "enumeration overflow";
    v.match = false;
  }
  return v;
}

std::vector<Verdict> verify_quintics(long long limit) {
  std::vector<Verdict> out;
  const auto scs = quintic_scenarios();
  const auto tmpl = quintic_templates();

  {
    Verdict v;
    v.table = TableId::D;
    v.row = 0;
    v.name = scs[0].name;
    v.expected = "ab (5), nonabelian";
    Presentation p = assemble(scs[0]);
    const AbelianInvariants ab = abelian_invariants(p);
    ProverOptions po;
    po.max_length = 96;
    po.max_nodes = 800000;
    int derived = 0;
    for (const Word& rel : tmpl[0].relators)
      if (is_consequence(p.relators, rel, po)) ++derived;
    const int degree = nonabelian_symmetric_quotient(tmpl[0], 8);
    v.computed = "ab " + invariants_str(ab) + ", " + std::to_string(derived) +
                 "/" + std::to_string(tmpl[0].relators.size()) +
                 " printed relators derived, nonabelian image in S" +
                 std::to_string(degree);
    v.match = ab == AbelianInvariants{5} &&
              derived == static_cast<int>(tmpl[0].relators.size()) &&
              degree > 0;
    out.push_back(v);
  }

  {
    Verdict v;
    v.table = TableId::D;
    v.row = 0;
    v.name = scs[1].name;
    v.expected = "order 320, ab (5), derived (5,16,4)";
    Presentation p = assemble(scs[1]);
    const AbelianInvariants ab = abelian_invariants(p);
    try {
      EnumerationResult er = todd_coxeter(p, {}, limit);
      PermGroup reg = regular_representation(er.table);
      std::vector<long long> series = derived_series(reg);
      EnumerationResult tr = todd_coxeter(tmpl[1], {}, limit);
      std::string ss = "(";
      for (std::size_t i = 0; i < series.size(); ++i) {
        if (i) ss += ",";
        ss += std::to_string(series[i]);
      }
      ss += ")";
      v.computed = "order " + std::to_string(er.index) + ", ab " +
                   invariants_str(ab) + ", derived " + ss +
                   ", printed form order " + std::to_string(tr.index);
      v.match = er.index == 320 && ab == AbelianInvariants{5} &&
                series == std::vector<long long>{5, 16, 4} &&
                tr.index == 320;
    } catch (const Error& e) {
      if (e.kind != "Overflow") throw;
      v.computed = "enumeration overflow";
      v.match = false;
    }
    out.push_back(v);
  }
  return out;
}

std::vector<Verdict> perturb_row(const FamilyRow& r, long long limit) {
  std::vector<Verdict> out;
  if (r.table != TableId::D5R)
    throw Error("BadParameters", "perturbations apply to the second "
                                 "reducible table");
  for (std::size_t i = 0; i < r.params.size(); ++i) {
    const int val = r.params[i];
    if (val <= 0 || val % 2 != 0) continue;
    int odd = val;
    while (odd % 2 == 0) odd /= 2;
    FamilyRow pert = r;
    pert.params[i] = odd;
    Verdict v;
    v.table = r.table;
    v.row = r.row;
    v.name = table_tag(r.table) + ":" + std::to_string(r.row) + ":" + r.sing +
             ":p" + std::to_string(i + 1) + "=" + std::to_string(odd);
    v.expected = "abelian";
    Presentation p = row_presentation(pert);
    const AbelianInvariants ab = abelian_invariants(p);
    const long long abo = finite_order(ab);
    try {
      EnumerationResult er = todd_coxeter(p, {}, limit);
      v.computed = "order " + std::to_string(er.index) + ", ab " +
                   invariants_str(ab);
      v.match = abo > 0 && er.index == abo;
    } catch (const Error& e) {
      if (e.kind != "Overflow") throw;
      v.computed = "enumeration overflow";
      v.match = false;
    }
    out.push_back(v);
  }
  return out;
}

namespace {

using Perm = std::vector<int>;

Perm pmul(const Perm& a, const Perm& b) {
  Perm r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    r[i] = a[static_cast<std::size_t>(b[i])];
  return r;
}

Perm pinv(const Perm& a) {
  Perm r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    r[static_cast<std::size_t>(a[i])] = static_cast<int>(i);
  return r;
}

bool apply_word(const Word& w, const std::vector<Perm>& img, Perm& out) {
  Perm r(img[0].size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = static_cast<int>(i);
  for (int l : w.letters()) {
    const Perm& g = img[static_cast<std::size_t>(std::abs(l)) - 1];
    r = pmul(r, l > 0 ? g : pinv(g));
  }
  out = r;
  return true;
}

bool is_identity(const Perm& a) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != static_cast<int>(i)) return false;
  return true;
}

void partitions_of(int n, std::vector<int>& cur, int largest,
                   std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int part = std::min(n, largest); part >= 1; --part) {
    cur.push_back(part);
    partitions_of(n - part, cur, part, out);
    cur.pop_back();
  }
}

Perm rep_of_partition(const std::vector<int>& parts) {
  Perm p;
  int base = 0;
  for (int len : parts) {
    for (int i = 0; i < len; ++i)
      p.push_back(base + (i + 1) % len);
    base += len;
  }
  return p;
}

}  // namespace

int nonabelian_symmetric_quotient(const Presentation& p, int max_degree) {
  if (p.gens.size() != 3)
    throw Error("BadParameters", "expected three generators");
  const Word key = (rho_word().pow(-2) * Word::gen(3)).cyclically_reduced();
  bool found_key = false;
  for (const Word& r : p.relators) {
    Word c = r.cyclically_reduced();
    for (std::size_t i = 0; i < c.letters().size() && !found_key; ++i) {
      std::vector<int> rotated(c.letters().begin() + static_cast<long>(i),
                               c.letters().end());
      rotated.insert(rotated.end(), c.letters().begin(),
                     c.letters().begin() + static_cast<long>(i));
      Word rw{rotated};
      found_key = rw == key || rw.inverse() == key;
    }
    if (found_key) break;
  }
  if (!found_key)
    throw Error("BadParameters",
                "the presentation does not identify a3 with the square of "
                "the monodromy at infinity");

  for (int n = 2; n <= max_degree; ++n) {
    std::vector<std::vector<int>> parts;
    std::vector<int> cur;
    partitions_of(n, cur, n, parts);
    Perm y(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < y.size(); ++i) y[i] = static_cast<int>(i);
    for (const auto& part : parts) {
      const Perm x = rep_of_partition(part);
      Perm yy = y;
      do {
        const Perm xy = pmul(x, yy);
        const Perm z = pinv(pmul(xy, xy));  // forced by rho^2 = a3
        const std::vector<Perm> img = {x, yy, z};
        bool ok = true;
        for (const Word& r : p.relators) {
          Perm val;
          apply_word(r, img, val);
          if (!is_identity(val)) {
            ok = false;
            break;
          }
        }
        if (ok) {
          const bool commutes = pmul(x, yy) == pmul(yy, x) &&
                                pmul(x, z) == pmul(z, x) &&
                                pmul(yy, z) == pmul(z, yy);
          if (!commutes) return n;
        }
      } while (std::next_permutation(yy.begin(), yy.end()));
    }
  }
  return 0;
}

std::string verdict_json(const Verdict& v) {
  nlohmann::json j;
  j["table"] = table_tag(v.table);
  j["row"] = v.row;
  j["name"] = v.name;
  j["expected"] = v.expected;
  j["computed"] = v.computed;
  j["match"] = v.match;
  j["flagged"] = v.flagged;
  j["notes"] = v.notes;
  return j.dump();
}

std::string verdict_tsv(const Verdict& v) {
  std::ostringstream os;
  os << table_tag(v.table) << "\t" << v.row << "\t" << v.name << "\t"
     << v.expected << "\t" << v.computed << "\t"
     << (v.match ? "ok" : "MISMATCH") << "\t"
     << (v.flagged ? "flagged" : "-") << "\t"
     << (v.notes.empty() ? "-" : v.notes);
  return os.str();
}

}  // namespace trigpi1
