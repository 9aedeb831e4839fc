// Cubic genus-zero maps and their decorations.  The canonical form is a
// breadth-first relabeling sequence minimized over start darts; mirrors are
// coded through the inverted rotation, with face attributes carried across
// by face(pr[d]).  Enumeration grows a pairing on the smallest unpaired
// dart, drawing either from darts of vertices already reached or from one
// fresh vertex, which visits every connected map at least once; canonical
// codes remove duplicates.

#include "trigpi1/skeleton.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <sstream>

#include <json.hpp>

namespace trigpi1 {

namespace {

// orbit decomposition of a permutation, cycles listed from their least
// element, in order of least element
void orbits(const std::vector<int>& next, std::vector<int>& id,
            std::vector<std::vector<int>>& cycles) {
  int n = static_cast<int>(next.size());
  id.assign(n, -1);
  cycles.clear();
  for (int d = 0; d < n; ++d) {
    if (id[d] >= 0) continue;
    std::vector<int> cyc;
    int c = static_cast<int>(cycles.size());
    for (int e = d; id[e] < 0; e = next[e]) {
      id[e] = c;
      cyc.push_back(e);
    }
    cycles.push_back(std::move(cyc));
  }
}

Code bfs_code(const std::vector<int>& R, const std::vector<int>& P,
              const std::vector<int>& attr, int start,
              std::vector<int>* order_out = nullptr) {
  int D = static_cast<int>(R.size());
  std::vector<int> lab(D, -1), order;
  order.reserve(D);
  lab[start] = 0;
  order.push_back(start);
  for (std::size_t i = 0; i < order.size(); ++i) {
    int d = order[i];
    for (int nb : {R[d], P[d]})
      if (lab[nb] < 0) {
        lab[nb] = static_cast<int>(order.size());
        order.push_back(nb);
      }
  }
  Code c;
  c.reserve(3 * D);
  for (int d : order) {
    c.push_back(static_cast<char>(lab[R[d]]));
    c.push_back(static_cast<char>(lab[P[d]]));
    c.push_back(static_cast<char>(attr.empty() ? 0 : attr[d]));
  }
  if (order_out) *order_out = order;
  return c;
}

Code min_code(const std::vector<int>& R, const std::vector<int>& P,
              const std::vector<int>& attr) {
  Code best;
  for (int d = 0; d < static_cast<int>(R.size()); ++d) {
    Code c = bfs_code(R, P, attr, d);
    if (best.empty() || c < best) best = std::move(c);
  }
  return best;
}

std::vector<int> face_attr_table(const DecoratedSkeleton& d) {
  std::vector<int> fattr(d.sk.nf(), 0);
  for (const RegionType& r : d.ts)
    if (r.face >= 0 && r.face < d.sk.nf()) fattr[r.face] = 4 * r.s;
  if (d.RI >= 0) fattr[d.RI] += 2;
  if (d.RII >= 0) fattr[d.RII] += 1;
  return fattr;
}

const RegionType& region_entry(const Skeleton& s, const TypeSpec& t, int f) {
  for (const RegionType& r : t)
    if (r.face == f) return r;
  (void)s;
  throw Error("BadRegionValue", "no typespec entry for region " +
                                    std::to_string(f));
}

}  // namespace

Skeleton build_skeleton(const std::vector<int>& rotation,
                        const std::vector<int>& pairing) {
  int D = static_cast<int>(rotation.size());
  if (D == 0 || pairing.size() != rotation.size())
    throw Error("BadMap", "rotation and pairing must cover the same darts");
  std::vector<int> seen(D, 0);
  for (int d = 0; d < D; ++d) {
    int r = rotation[d];
    if (r < 0 || r >= D || seen[r]++)
      throw Error("BadMap", "rotation is not a permutation");
  }
  for (int d = 0; d < D; ++d) {
    int p = pairing[d];
    if (p < 0 || p >= D || pairing[p] != d)
      throw Error("BadMap", "pairing is not an involution");
    if (p == d)
      throw Error("FixedPointInPairing",
                  "dart " + std::to_string(d) + " is paired with itself");
  }

  Skeleton s;
  s.darts = D;
  s.rot = rotation;
  s.pr = pairing;
  s.irot.assign(D, 0);
  for (int d = 0; d < D; ++d) s.irot[rotation[d]] = d;

  orbits(s.rot, s.vert, s.vcycle);
  for (const auto& cyc : s.vcycle)
    if (cyc.size() != 3)
      throw Error("WrongValency", "vertex of valency " +
                                      std::to_string(cyc.size()) +
                                      "; generic skeletons are trivalent");

  std::vector<int> reach(D, 0);
  std::vector<int> stack{0};
  reach[0] = 1;
  while (!stack.empty()) {
    int d = stack.back();
    stack.pop_back();
    for (int nb : {s.rot[d], s.pr[d]})
      if (!reach[nb]) {
        reach[nb] = 1;
        stack.push_back(nb);
      }
  }
  for (int d = 0; d < D; ++d)
    if (!reach[d]) throw Error("Disconnected", "skeleton is not connected");

  std::vector<int> phi(D);
  for (int d = 0; d < D; ++d) phi[d] = s.rot[s.pr[d]];
  orbits(phi, s.face, s.fcycle);

  int euler = s.nv() - D / 2 + s.nf();
  if (euler != 2)
    throw Error("WrongGenus", "Euler characteristic " +
                                  std::to_string(euler) + ", expected 2");
  return s;
}

std::vector<int> face_sizes(const Skeleton& s) {
  std::vector<int> out(s.nf());
  for (int f = 0; f < s.nf(); ++f) out[f] = s.m_of(f);
  return out;
}

TypeSpec uniform_typespec(const Skeleton& s) {
  TypeSpec t;
  t.reserve(s.nf());
  for (int f = 0; f < s.nf(); ++f) t.push_back({f, s.m_of(f), 0});
  return t;
}

std::vector<Issue> validate_typespec(const Skeleton& s, const TypeSpec& t) {
  std::vector<Issue> issues;
  std::vector<int> seen(s.nf(), 0);
  long long total = 0;
  for (const RegionType& r : t) {
    if (r.face < 0 || r.face >= s.nf()) {
      issues.push_back({"BadRegionValue",
                        "region id " + std::to_string(r.face) + " out of range"});
      continue;
    }
    if (seen[r.face]++)
      issues.push_back({"BadRegionValue",
                        "region " + std::to_string(r.face) + " listed twice"});
    if (r.m != s.m_of(r.face))
      issues.push_back({"BadRegionValue",
                        "region " + std::to_string(r.face) + " is a " +
                            std::to_string(s.m_of(r.face)) + "-gon, entry says " +
                            std::to_string(r.m)});
    if (r.s < 0)
      issues.push_back({"BadRegionValue",
                        "region " + std::to_string(r.face) +
                            " has negative transform count"});
    total += ts_value(r);
  }
  for (int f = 0; f < s.nf(); ++f)
    if (!seen[f])
      issues.push_back({"BadRegionValue",
                        "region " + std::to_string(f) + " has no entry"});
  if (total % 6 != 0)
    issues.push_back({"BadSum", "ts-values sum to " + std::to_string(total) +
                                    ", not a multiple of 6"});
  return issues;
}

int k_index(const Skeleton& s, const TypeSpec& t) {
  long long total = 0;
  for (const RegionType& r : t) total += ts_value(r);
  (void)s;
  if (total % 6 != 0)
    throw Error("NonIntegralK", "ts-values sum to " + std::to_string(total));
  return static_cast<int>(total / 6);
}

std::vector<int> decorated_dart_attrs(const DecoratedSkeleton& d) {
  std::vector<int> fattr = face_attr_table(d);
  std::vector<int> attr(d.sk.darts);
  for (int e = 0; e < d.sk.darts; ++e) attr[e] = fattr[d.sk.face[e]];
  return attr;
}

Code canonical_code(const Skeleton& s) { return min_code(s.rot, s.pr, {}); }

Code canonical_code(const DecoratedSkeleton& d) {
  return min_code(d.sk.rot, d.sk.pr, decorated_dart_attrs(d));
}

Code mirror_code(const DecoratedSkeleton& d) {
  std::vector<int> fattr = face_attr_table(d);
  std::vector<int> attr(d.sk.darts);
  for (int e = 0; e < d.sk.darts; ++e) attr[e] = fattr[d.sk.face[d.sk.pr[e]]];
  return min_code(d.sk.irot, d.sk.pr, attr);
}

bool is_mirror_symmetric(const DecoratedSkeleton& d) {
  return canonical_code(d) == mirror_code(d);
}

std::vector<std::vector<int>> automorphisms(const Skeleton& s,
                                            const std::vector<int>& dart_attr) {
  std::vector<Code> codes(s.darts);
  std::vector<std::vector<int>> orders(s.darts);
  int best = 0;
  for (int d = 0; d < s.darts; ++d) {
    codes[d] = bfs_code(s.rot, s.pr, dart_attr, d, &orders[d]);
    if (codes[d] < codes[best]) best = d;
  }
  std::vector<std::vector<int>> auts;
  for (int d = 0; d < s.darts; ++d) {
    if (codes[d] != codes[best]) continue;
    std::vector<int> p(s.darts);
    for (int i = 0; i < s.darts; ++i) p[orders[best][i]] = orders[d][i];
    auts.push_back(std::move(p));
  }
  return auts;
}

std::vector<int> edge_orbit_reps(const Skeleton& s,
                                 const std::vector<int>& dart_attr) {
  auto auts = automorphisms(s, dart_attr);
  auto edge_of = [&](int d) { return std::min(d, s.pr[d]); };
  std::set<int> remaining;
  for (int d = 0; d < s.darts; ++d) remaining.insert(edge_of(d));
  std::vector<int> reps;
  while (!remaining.empty()) {
    int e = *remaining.begin();
    reps.push_back(e);
    std::vector<int> stack{e};
    remaining.erase(e);
    while (!stack.empty()) {
      int d = stack.back();
      stack.pop_back();
      for (const auto& p : auts)
        for (int img : {edge_of(p[d]), edge_of(p[s.pr[d]])})
          if (remaining.count(img)) {
            remaining.erase(img);
            stack.push_back(img);
          }
    }
  }
  return reps;
}

namespace {

struct Enumerator {
  int n;
  std::vector<int> rotation, pairing;
  std::set<Code> seen;
  std::vector<Skeleton> classes;

  explicit Enumerator(int vertices) : n(vertices) {
    rotation.resize(3 * n);
    for (int v = 0; v < n; ++v) {
      rotation[3 * v] = 3 * v + 1;
      rotation[3 * v + 1] = 3 * v + 2;
      rotation[3 * v + 2] = 3 * v;
    }
    pairing.assign(3 * n, -1);
  }

  void run() { rec(0); }

  void rec(int maxv) {
    int limit = 3 * (maxv + 1);
    int d = -1;
    for (int i = 0; i < limit; ++i)
      if (pairing[i] < 0) {
        d = i;
        break;
      }
    if (d < 0) {
      if (maxv + 1 == n) finalize();
      return;
    }
    for (int d2 = d + 1; d2 < limit; ++d2) {
      if (pairing[d2] >= 0) continue;
      pairing[d] = d2;
      pairing[d2] = d;
      rec(maxv);
      pairing[d] = pairing[d2] = -1;
    }
    if (maxv + 1 < n) {
      int d2 = limit;
      pairing[d] = d2;
      pairing[d2] = d;
      rec(maxv + 1);
      pairing[d] = pairing[d2] = -1;
    }
  }

  void finalize() {
    // genus-zero check before the expensive canonical form
    int D = 3 * n;
    std::vector<int> fid;
    std::vector<std::vector<int>> fcyc;
    std::vector<int> phi(D);
    for (int i = 0; i < D; ++i) phi[i] = rotation[pairing[i]];
    orbits(phi, fid, fcyc);
    if (static_cast<int>(fcyc.size()) != 2 + n / 2) return;
    Code c = min_code(rotation, pairing, {});
    if (seen.insert(c).second) classes.push_back(build_skeleton(rotation, pairing));
  }
};

}  // namespace

std::vector<DecoratedSkeleton> enumerate_cubic_skeletons(int n,
                                                         const EnumOptions& opt) {
  if (n > opt.bound)
    throw Error("BoundExceeded", "vertex count " + std::to_string(n) +
                                     " above bound " + std::to_string(opt.bound));
  std::vector<DecoratedSkeleton> out;
  if (n <= 0 || n % 2 != 0) return out;

  Enumerator en(n);
  en.run();

  std::vector<Skeleton> classes = std::move(en.classes);
  if (opt.irreducible_only) {
    std::vector<Skeleton> keep;
    for (Skeleton& s : classes)
      if (splitting_markings(s, uniform_typespec(s)).empty())
        keep.push_back(std::move(s));
    classes = std::move(keep);
  }

  for (Skeleton& s : classes) {
    if (opt.distinguished_m == 0) {
      DecoratedSkeleton d{s, uniform_typespec(s), -1, -1, ""};
      out.push_back(std::move(d));
      continue;
    }
    auto auts = automorphisms(s);
    std::set<int> remaining;
    for (int f = 0; f < s.nf(); ++f)
      if (s.m_of(f) == opt.distinguished_m) remaining.insert(f);
    while (!remaining.empty()) {
      int f = *remaining.begin();
      std::vector<int> stack{f};
      remaining.erase(f);
      while (!stack.empty()) {
        int g = stack.back();
        stack.pop_back();
        for (const auto& p : auts) {
          int img = s.face[p[s.fcycle[g][0]]];
          if (remaining.count(img)) {
            remaining.erase(img);
            stack.push_back(img);
          }
        }
      }
      out.push_back({s, uniform_typespec(s), -1, f, ""});
    }
  }

  std::sort(out.begin(), out.end(),
            [](const DecoratedSkeleton& a, const DecoratedSkeleton& b) {
              return canonical_code(a) < canonical_code(b);
            });
  return out;
}

InsertionResult insert_bigon(const Skeleton& s, int edge_dart) {
  if (edge_dart < 0 || edge_dart >= s.darts)
    throw Error("BadMap", "no such dart");
  int e = edge_dart, eb = s.pr[e], D = s.darts;
  std::vector<int> rot2 = s.rot, pr2 = s.pr;
  rot2.resize(D + 6);
  pr2.resize(D + 6);
  rot2[D] = D + 1;
  rot2[D + 1] = D + 2;
  rot2[D + 2] = D;
  rot2[D + 3] = D + 4;
  rot2[D + 4] = D + 5;
  rot2[D + 5] = D + 3;
  pr2[e] = D;
  pr2[D] = e;
  pr2[eb] = D + 3;
  pr2[D + 3] = eb;
  pr2[D + 1] = D + 5;
  pr2[D + 5] = D + 1;
  pr2[D + 2] = D + 4;
  pr2[D + 4] = D + 2;
  InsertionResult r;
  r.sk = build_skeleton(rot2, pr2);
  r.ri_face = r.sk.face[D + 2];
  return r;
}

InsertionResult insert_bibigon(const Skeleton& s, int edge_dart,
                               int orientation) {
  if (orientation != 0 && orientation != 1)
    throw Error("BadMap", "orientation must be 0 or 1");
  int D = s.darts;
  InsertionResult first = insert_bigon(s, edge_dart);
  InsertionResult second =
      insert_bigon(first.sk, orientation == 0 ? D + 1 : D + 2);
  second.rii_face = second.sk.face[D + 2];
  return second;
}

Skeleton remove_bigon(const Skeleton& s, int bigon_face) {
  if (bigon_face < 0 || bigon_face >= s.nf() || s.m_of(bigon_face) != 2)
    throw Error("BadMap", "not a bigonal region");
  int x = s.fcycle[bigon_face][0], y = s.fcycle[bigon_face][1];
  int A = s.vert[x], B = s.vert[y];
  if (A == B) throw Error("BadMap", "degenerate bigon");
  auto outside = [&](int v) {
    for (int d : s.vcycle[v]) {
      int w = s.vert[s.pr[d]];
      if (w != A && w != B) return d;
    }
    throw Error("BadMap", "bigon is not an insertion");
  };
  int stem_a = outside(A), stem_b = outside(B);
  int e = s.pr[stem_a], eb = s.pr[stem_b];

  std::vector<int> drop(s.darts, 0);
  for (int d : s.vcycle[A]) drop[d] = 1;
  for (int d : s.vcycle[B]) drop[d] = 1;
  std::vector<int> newid(s.darts, -1);
  int next = 0;
  for (int d = 0; d < s.darts; ++d)
    if (!drop[d]) newid[d] = next++;
  std::vector<int> rot2(next), pr2(next);
  for (int d = 0; d < s.darts; ++d) {
    if (drop[d]) continue;
    rot2[newid[d]] = newid[s.rot[d]];
    int p = (d == e) ? eb : (d == eb) ? e : s.pr[d];
    pr2[newid[d]] = newid[p];
  }
  return build_skeleton(rot2, pr2);
}

int dart_index(const Skeleton& s, const Marking& mk, int d) {
  int v = s.vert[d];
  const auto& cyc = s.vcycle[v];
  int pd = -1, pe = -1;
  for (int i = 0; i < 3; ++i) {
    if (cyc[i] == d) pd = i;
    if (cyc[i] == mk[v]) pe = i;
  }
  if (pd < 0 || pe < 0) throw Error("BadMap", "marking dart mismatch");
  return 1 + (pd - pe + 3) % 3;
}

int marked_dart(const Skeleton& s, const Marking& mk, int v, int idx) {
  int d = mk[v];
  for (int i = 1; i < idx; ++i) d = s.rot[d];
  return d;
}

int angle_face(const Skeleton& s, const Marking& mk, int v, AngleKind a) {
  // the sector swept from e_i counterclockwise to e_{i+1} is the face orbit
  // through e_{i+1}
  int idx = a == AngleKind::A12 ? 2 : a == AngleKind::A23 ? 3 : 1;
  return s.face[marked_dart(s, mk, v, idx)];
}

std::vector<Marking> splitting_markings(const Skeleton& s, const TypeSpec& t) {
  int V = s.nv();
  std::vector<int> ts(s.nf(), 0);
  for (const RegionType& r : t)
    if (r.face >= 0 && r.face < s.nf()) ts[r.face] = ts_value(r);

  std::vector<Marking> out;
  std::vector<int> choice(V, 0);
  Marking mk(V);
  while (true) {
    for (int v = 0; v < V; ++v) mk[v] = s.vcycle[v][choice[v]];
    bool ok = true;
    for (int d = 0; d < s.darts && ok; ++d) {
      if (d > s.pr[d]) continue;
      int i = dart_index(s, mk, d), j = dart_index(s, mk, s.pr[d]);
      ok = (i == 1 && j == 1) || (i == 2 && j == 3) || (i == 3 && j == 2);
    }
    for (int v = 0; v < V && ok; ++v) {
      int f12 = angle_face(s, mk, v, AngleKind::A12);
      int f31 = angle_face(s, mk, v, AngleKind::A31);
      ok = ts[f12] % 2 == 0 && ts[f31] % 2 == 0;
    }
    if (ok) out.push_back(mk);
    int v = 0;
    while (v < V && ++choice[v] == 3) choice[v++] = 0;
    if (v == V) break;
  }
  return out;
}

std::vector<FiberClass> region_fibers(const Skeleton& s, const TypeSpec& t) {
  std::vector<FiberClass> out(s.nf());
  for (int f = 0; f < s.nf(); ++f) {
    const RegionType& r = region_entry(s, t, f);
    if (r.s == 0)
      out[f] = r.m == 1 ? FiberClass::simple(FiberKind::A0s)
                        : FiberClass::A(r.m - 1);
    else if (r.s == 1)
      out[f] = FiberClass::Dq(r.m + 4);
    else
      out[f] = FiberClass::Jrp(r.s, r.m);
  }
  return out;
}

namespace {

bool sing_before(const SingLabel& a, const SingLabel& b) {
  int ka = a.kind == 'D' ? 0 : a.kind == 'E' ? 1 : 2;
  int kb = b.kind == 'D' ? 0 : b.kind == 'E' ? 1 : 2;
  if (ka != kb) return ka < kb;
  return a.index > b.index;
}

}  // namespace

std::vector<SingLabel> singularity_set(const DecoratedSkeleton& d,
                                       SextCase c) {
  const Skeleton& s = d.sk;
  if (d.RI < 0 || d.RII < 0 || d.RI == d.RII)
    throw Error("InvalidCase", "both distinguished regions are required");
  if (s.m_of(d.RI) != 2)
    throw Error("InvalidCase", "R_I must be a bigon");
  int k = k_index(s, d.ts);
  if (c == SextCase::D7 && k != 3)
    throw Error("InvalidCase", "degree-7 case needs k = 3");
  if (c == SextCase::D5) {
    if (k != 4) throw Error("InvalidCase", "degree-5 case needs k = 4");
    if (s.m_of(d.RII) != 4)
      throw Error("InvalidCase", "R_II must be a quadrilateral");
  }
  std::vector<SingLabel> out;
  for (int f = 0; f < s.nf(); ++f) {
    const RegionType& r = region_entry(s, d.ts, f);
    if (f == d.RI || f == d.RII) {
      if (r.s != 0)
        throw Error("InvalidCase", "distinguished regions must be plain");
      continue;
    }
    if (r.s == 0) {
      if (r.m >= 2) out.push_back({'A', r.m - 1});
    } else if (r.s == 1) {
      out.push_back({'D', r.m + 4});
    } else {
      throw Error("NonSimple", "region with more than one transform");
    }
  }
  out.push_back(c == SextCase::D7 ? SingLabel{'D', s.m_of(d.RII) + 6}
                                  : SingLabel{'D', 5});
  std::sort(out.begin(), out.end(), sing_before);
  return out;
}

std::string print_singularities(const std::vector<SingLabel>& set) {
  std::string out;
  for (std::size_t i = 0; i < set.size();) {
    std::size_t j = i;
    while (j < set.size() && set[j] == set[i]) ++j;
    if (!out.empty()) out += "+";
    if (j - i > 1) out += std::to_string(j - i);
    out += set[i].kind;
    out += std::to_string(set[i].index);
    i = j;
  }
  return out;
}

std::vector<SingLabel> parse_singularities(const std::string& text) {
  std::vector<SingLabel> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, '+')) {
    std::size_t i = 0;
    int count = 0;
    while (i < tok.size() && isdigit(static_cast<unsigned char>(tok[i])))
      count = 10 * count + (tok[i++] - '0');
    if (count == 0) count = 1;
    if (i >= tok.size() || (tok[i] != 'A' && tok[i] != 'D' && tok[i] != 'E'))
      throw Error("Syntax", "bad singularity token: " + tok);
    char kind = tok[i++];
    if (i >= tok.size()) throw Error("Syntax", "bad singularity token: " + tok);
    int index = std::stoi(tok.substr(i));
    for (int c = 0; c < count; ++c) out.push_back({kind, index});
  }
  std::sort(out.begin(), out.end(), sing_before);
  return out;
}

MilnorReport milnor_and_maximality(int k, const std::vector<FiberClass>& fs) {
  MilnorReport rep;
  for (const FiberClass& f : fs) {
    rep.mu += milnor(f);
    if (f.kind == FiberKind::A0ss || f.kind == FiberKind::A1s ||
        f.kind == FiberKind::A2s)
      ++rep.unstable;
  }
  rep.maximal = rep.mu == 5 * k - 2 - rep.unstable;
  return rep;
}

MilnorReport milnor_and_maximality(const Skeleton& s, const TypeSpec& t) {
  return milnor_and_maximality(k_index(s, t), region_fibers(s, t));
}

int region_distance(const Skeleton& s, int f1, int f2) {
  std::vector<int> dist(s.nv(), -1);
  std::queue<int> q;
  for (int d : s.fcycle[f1])
    if (dist[s.vert[d]] < 0) {
      dist[s.vert[d]] = 0;
      q.push(s.vert[d]);
    }
  std::set<int> goal;
  for (int d : s.fcycle[f2]) goal.insert(s.vert[d]);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    if (goal.count(v)) return dist[v];
    for (int d : s.vcycle[v]) {
      int w = s.vert[s.pr[d]];
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        q.push(w);
      }
    }
  }
  throw Error("BadMap", "regions in different components");
}

std::string decorated_to_json(const DecoratedSkeleton& d) {
  nlohmann::json j;
  j["darts"] = d.sk.darts;
  j["rotation"] = d.sk.rot;
  j["pairing"] = d.sk.pr;
  nlohmann::json tsj = nlohmann::json::array();
  for (const RegionType& r : d.ts)
    tsj.push_back({{"face", r.face}, {"m", r.m}, {"s", r.s}});
  j["typespec"] = tsj;
  if (d.RI >= 0 || d.RII >= 0)
    j["distinguished"] = {{"RI", d.RI}, {"RII", d.RII}};
  if (!d.label.empty()) j["label"] = d.label;
  return j.dump(2);
}

DecoratedSkeleton decorated_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error("Syntax", e.what());
  }
  DecoratedSkeleton d;
  try {
    std::vector<int> rotation = j.at("rotation").get<std::vector<int>>();
    std::vector<int> pairing = j.at("pairing").get<std::vector<int>>();
    if (j.contains("darts") &&
        j.at("darts").get<int>() != static_cast<int>(rotation.size()))
      throw Error("Syntax", "dart count disagrees with rotation");
    d.sk = build_skeleton(rotation, pairing);
    if (j.contains("typespec")) {
      for (const auto& e : j.at("typespec"))
        d.ts.push_back({e.at("face").get<int>(), e.at("m").get<int>(),
                        e.at("s").get<int>()});
    } else {
      d.ts = uniform_typespec(d.sk);
    }
    if (j.contains("distinguished")) {
      d.RI = j.at("distinguished").at("RI").get<int>();
      d.RII = j.at("distinguished").at("RII").get<int>();
    }
    if (j.contains("label")) d.label = j.at("label").get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw Error("Syntax", e.what());
  }
  return d;
}

}  // namespace trigpi1
