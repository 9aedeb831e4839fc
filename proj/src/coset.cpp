// Coset enumeration and subgroup presentations.
//
// The enumerator is Felsch-style.  Every definition goes through a deduction
// stack; for each new table edge we scan all cyclic rotations of all
// relators and their inverses that begin with the edge's letter, so a
// completed table is automatically closed under the relators.  Coincidences
// are resolved with a union queue that keeps the smaller coset number,
// re-installing the dead coset's edges at the surviving representatives.
// The finished table is compacted and standardized by a breadth-first
// renumbering from coset 0, which makes the output depend only on the
// group-with-subgroup, not on the enumeration history.
//
// normal_closure_presentation enumerates the quotient by the closure (its
// regular table is the coset table of the closure in the group), then
// applies Reidemeister-Schreier: Schreier generators live on non-tree edges
// of a breadth-first spanning tree and every relator is rewritten at every
// coset.  A presentation whose relators are literally the commutators of
// its generators is handled directly through the exponent lattice instead,
// since the closure need not have finite index in that case.

#include <cstdlib>
#include <map>
#include <queue>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "trigpi1/fpgroup.hpp"

namespace trigpi1 {

long long effective_coset_limit(long long requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("TRIGPI1_MAX_COSETS")) {
    char* end = nullptr;
    long long v = std::strtoll(env, &end, 10);
    if (end != env && v > 0) return v;
  }
  return 1000000;
}

namespace {

int col_of(int letter) {
  return letter > 0 ? 2 * (letter - 1) : 2 * (-letter - 1) + 1;
}

struct Felsch {
  int ng = 0;
  int ncols = 0;
  long long limit = 0;
  std::vector<std::vector<int>> table;  // -1 = undefined
  std::vector<int> up;                  // union-find, min survives
  long long alive = 0;
  std::vector<std::pair<int, int>> deductions;
  std::vector<std::vector<std::vector<int>>> by_first;  // rotations per column

  explicit Felsch(int gens, long long lim) : ng(gens), ncols(2 * gens), limit(lim) {
    table.emplace_back(ncols, -1);
    up.push_back(0);
    alive = 1;
  }

  int rep(int c) {
    while (up[c] != c) {
      up[c] = up[up[c]];
      c = up[c];
    }
    return c;
  }

  void prepare_relators(const std::vector<Word>& relators) {
    by_first.assign(std::max(ncols, 1), {});
    std::set<std::vector<int>> seen;
    for (const Word& r0 : relators) {
      Word r = r0.cyclically_reduced();
      if (r.trivial()) continue;
      for (const Word& base : {r, r.inverse()}) {
        std::vector<int> ls = base.letters();
        const std::size_t n = ls.size();
        for (std::size_t rot = 0; rot < n; ++rot) {
          std::vector<int> cyc(ls.begin() + rot, ls.end());
          cyc.insert(cyc.end(), ls.begin(), ls.begin() + rot);
          if (seen.insert(cyc).second) by_first[col_of(cyc[0])].push_back(cyc);
        }
      }
    }
  }

  int define(int c, int col) {
    if (static_cast<long long>(table.size()) >= limit)
      throw Error("Overflow", "coset limit of " + std::to_string(limit) +
                                  " reached");
    int n = static_cast<int>(table.size());
    table.emplace_back(ncols, -1);
    up.push_back(n);
    ++alive;
    table[c][col] = n;
    table[n][col ^ 1] = c;
    deductions.push_back({c, col});
    return n;
  }

  void merge(int a, int b, std::queue<int>& q) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    up[b] = a;
    --alive;
    q.push(b);
  }

  void coincidence(int a, int b) {
    std::queue<int> q;
    merge(a, b, q);
    while (!q.empty()) {
      int d = q.front();
      q.pop();
      for (int col = 0; col < ncols; ++col) {
        int e = table[d][col];
        if (e < 0) continue;
        table[e][col ^ 1] = -1;  // drop the backpointer into the dead coset
        int mu = rep(d), nu = rep(e);
        int ex = table[mu][col];
        if (ex >= 0) {
          merge(nu, ex, q);
        } else {
          int ey = table[nu][col ^ 1];
          if (ey >= 0) {
            merge(mu, ey, q);
          } else {
            table[mu][col] = nu;
            table[nu][col ^ 1] = mu;
            deductions.push_back({mu, col});
          }
        }
      }
    }
  }

  // scan relator rotation w from coset c; closes, deduces, or gives up
  void scan(int c, const std::vector<int>& w) {
    int f = c, b = c;
    std::size_t i = 0, j = w.size();
    while (i < j) {
      int t = table[f][col_of(w[i])];
      if (t < 0) break;
      f = t;
      ++i;
    }
    if (i == j) {
      if (f != b) coincidence(f, b);
      return;
    }
    while (j > i) {
      int t = table[b][col_of(w[j - 1]) ^ 1];
      if (t < 0) break;
      b = t;
      --j;
    }
    if (j == i) {
      coincidence(f, b);
    } else if (j == i + 1) {
      int cl = col_of(w[i]);
      table[f][cl] = b;
      table[b][cl ^ 1] = f;
      deductions.push_back({f, cl});
    }
  }

  void process_deductions() {
    while (!deductions.empty()) {
      auto [c, col] = deductions.back();
      deductions.pop_back();
      if (rep(c) != c || table[c][col] < 0) continue;  // stale
      for (const auto& w : by_first[col]) {
        scan(rep(c), w);
        if (table[rep(c)][col] < 0) break;  // edge moved during coincidences
      }
    }
  }

  // make the trace of w at coset 0 close, defining cosets as needed
  void force_word(const Word& word) {
    const std::vector<int> w = word.letters();
    if (w.empty()) return;
    while (true) {
      int f = 0, b = 0;
      std::size_t i = 0, j = w.size();
      while (i < j) {
        int t = table[f][col_of(w[i])];
        if (t < 0) break;
        f = t;
        ++i;
      }
      if (i == j) {
        if (f != b) {
          coincidence(f, b);
          process_deductions();
        }
        return;
      }
      while (j > i) {
        int t = table[b][col_of(w[j - 1]) ^ 1];
        if (t < 0) break;
        b = t;
        --j;
      }
      if (j == i) {
        coincidence(f, b);
      } else if (j == i + 1) {
        int cl = col_of(w[i]);
        table[f][cl] = b;
        table[b][cl ^ 1] = f;
        deductions.push_back({f, cl});
      } else {
        define(f, col_of(w[i]));
      }
      process_deductions();
    }
  }

  void run(const Presentation& p, const std::vector<Word>& subgroup) {
    prepare_relators(p.relators);
    for (const Word& w : subgroup) force_word(w);
    process_deductions();
    for (int c = 0; c < static_cast<int>(table.size()); ++c) {
      if (rep(c) != c) continue;
      for (int col = 0; col < ncols; ++col) {
        if (rep(c) != c) break;
        if (table[c][col] >= 0) continue;
        define(c, col);
        process_deductions();
      }
    }
  }

  // breadth-first renumbering of the live cosets
  CosetTable standardized() {
    CosetTable out;
    out.gens = ng;
    std::vector<int> number(table.size(), -1);
    std::vector<int> order;
    number[0] = 0;
    order.push_back(0);
    for (std::size_t head = 0; head < order.size(); ++head) {
      int c = order[head];
      for (int col = 0; col < ncols; ++col) {
        int d = table[c][col];
        if (d < 0) continue;
        d = rep(d);
        if (number[d] < 0) {
          number[d] = static_cast<int>(order.size());
          order.push_back(d);
        }
      }
    }
    out.rows.assign(order.size(), std::vector<int>(ncols, -1));
    out.closed = true;
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (int col = 0; col < ncols; ++col) {
        int d = table[order[i]][col];
        if (d < 0) {
          out.closed = false;
          continue;
        }
        out.rows[i][col] = number[rep(d)];
      }
    }
    return out;
  }
};

}  // namespace

EnumerationResult todd_coxeter(const Presentation& p,
                               const std::vector<Word>& subgroup,
                               long long limit) {
  for (const Word& w : p.relators)
    if (w.max_generator() > static_cast<int>(p.gens.size()))
      throw Error("Validation", "relator uses an unknown generator");
  for (const Word& w : subgroup)
    if (w.max_generator() > static_cast<int>(p.gens.size()))
      throw Error("Validation", "subgroup word uses an unknown generator");
  Felsch f(static_cast<int>(p.gens.size()), effective_coset_limit(limit));
  f.run(p, subgroup);
  EnumerationResult res;
  res.table = f.standardized();
  res.index = res.table.cosets();
  return res;
}

PermGroup regular_representation(const CosetTable& t) {
  if (!t.closed) throw Error("NotClosed", "coset table is not closed");
  PermGroup g;
  g.degree = t.cosets();
  for (int k = 0; k < t.gens; ++k) {
    std::vector<int> perm(g.degree);
    for (int c = 0; c < g.degree; ++c) perm[c] = t.rows[c][2 * k];
    g.gens.push_back(std::move(perm));
  }
  return g;
}

// ---------------------------------------------------------------------------
// Reidemeister-Schreier.

namespace {

// relators are exactly the commutators of the generators, covering all pairs
bool literally_free_abelian(const Presentation& p) {
  const int n = static_cast<int>(p.gens.size());
  if (p.relators.empty()) return n <= 1;
  std::set<std::pair<int, int>> pairs;
  for (const Word& r0 : p.relators) {
    Word r = r0.cyclically_reduced();
    const auto& ls = r.letters();
    if (ls.size() != 4) return false;
    if (ls[0] != -ls[2] || ls[1] != -ls[3]) return false;
    int a = std::abs(ls[0]), b = std::abs(ls[1]);
    if (a == b) return false;
    pairs.insert({std::min(a, b), std::max(a, b)});
  }
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      if (!pairs.count({a, b})) return false;
  return true;
}

Presentation free_abelian_closure(const Presentation& p,
                                  const std::vector<Word>& words) {
  // subgroup of a free abelian group: rank from the exponent lattice
  Presentation lattice{p.gens, words};
  AbelianInvariants inv = abelian_invariants(lattice);
  int zeros = 0;
  for (long long d : inv)
    if (d == 0) ++zeros;
  int rank = static_cast<int>(p.gens.size()) - zeros;
  Presentation out;
  if (rank == 0) {
    out.gens = {"y1"};
    Word w;
    w.push(1);
    out.relators.push_back(w);
    return out;
  }
  for (int i = 1; i <= rank; ++i) out.gens.push_back("y" + std::to_string(i));
  for (int a = 1; a <= rank; ++a)
    for (int b = a + 1; b <= rank; ++b) {
      Word w;
      w.push(a);
      w.push(b);
      w.push(-a);
      w.push(-b);
      out.relators.push_back(w);
    }
  return out;
}

}  // namespace

Presentation normal_closure_presentation(const Presentation& p,
                                         const std::vector<Word>& words,
                                         long long limit) {
  if (literally_free_abelian(p)) return free_abelian_closure(p, words);

  EnumerationResult quot = todd_coxeter(add_relators(p, words), {}, limit);
  const CosetTable& t = quot.table;
  const int n = t.cosets();
  const int ng = t.gens;

  // breadth-first spanning tree; tree edges carry the identity
  std::vector<std::vector<bool>> tree(n, std::vector<bool>(2 * ng, false));
  {
    std::vector<bool> seen(n, false);
    std::queue<int> q;
    seen[0] = true;
    q.push(0);
    while (!q.empty()) {
      int c = q.front();
      q.pop();
      for (int col = 0; col < 2 * ng; ++col) {
        int d = t.rows[c][col];
        if (d < 0 || seen[d]) continue;
        seen[d] = true;
        tree[c][col] = true;
        tree[d][col ^ 1] = true;
        q.push(d);
      }
    }
  }

  // one Schreier generator per non-tree edge, indexed on its positive side
  std::map<std::pair<int, int>, int> sgen;  // (coset, gen) -> index
  for (int c = 0; c < n; ++c)
    for (int k = 0; k < ng; ++k) {
      if (tree[c][2 * k]) continue;
      int idx = static_cast<int>(sgen.size()) + 1;
      sgen[{c, k + 1}] = idx;
    }

  auto rewrite = [&](int start, const Word& r) {
    Word out;
    int c = start;
    for (int l : r.letters()) {
      if (l > 0) {
        if (!tree[c][2 * (l - 1)]) out.push(sgen.at({c, l}));
        c = t.rows[c][2 * (l - 1)];
      } else {
        int d = t.rows[c][2 * (-l - 1) + 1];
        if (!tree[d][2 * (-l - 1)]) out.push(-sgen.at({d, -l}));
        c = d;
      }
    }
    return out;
  };

  Presentation sub;
  for (int i = 1; i <= static_cast<int>(sgen.size()); ++i)
    sub.gens.push_back("y" + std::to_string(i));
  for (int c = 0; c < n; ++c)
    for (const Word& r : p.relators) {
      Word w = rewrite(c, r);
      if (!w.trivial()) sub.relators.push_back(w);
    }
  return tietze_simplify(sub);
}

}  // namespace trigpi1
