// Permutation groups via deterministic Schreier-Sims stabilizer chains.
//
// Strong generators are kept in one list, each tagged with the first base
// point it moves; level i of the chain uses every strong generator whose
// tag is at least i.  Levels are verified bottom-up: a Schreier generator
// that fails to strip to the identity is added as a new strong generator
// and the deeper levels are re-verified before the current level restarts.
// Transversals are stored as full permutations, so the degree is capped
// and very large regular representations are rejected; those cases are
// handled through coset tables instead.

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "trigpi1/fpgroup.hpp"

namespace trigpi1 {

namespace {

using Perm = std::vector<int>;

Perm compose(const Perm& a, const Perm& b) {  // apply b, then a
  Perm c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[b[i]];
  return c;
}

Perm inverse_of(const Perm& a) {
  Perm b(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) b[a[i]] = static_cast<int>(i);
  return b;
}

bool is_identity(const Perm& a) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != static_cast<int>(i)) return false;
  return true;
}

int first_moved(const Perm& a) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != static_cast<int>(i)) return static_cast<int>(i);
  return -1;
}

constexpr int kMaxChainDegree = 10000;

struct Chain {
  int degree = 0;
  std::vector<int> base;
  std::vector<Perm> strong;
  std::vector<int> level_of;  // first base index (0-based) the gen moves

  struct Level {
    std::vector<int> orbit;
    std::vector<int> pos;    // point -> orbit index or -1
    std::vector<Perm> umap;  // transversal, umap[k](base) = orbit[k]
  };
  std::vector<Level> levels;

  explicit Chain(int n) : degree(n) {}

  int tag_of(const Perm& g) {
    for (std::size_t i = 0; i < base.size(); ++i)
      if (g[base[i]] != base[i]) return static_cast<int>(i);
    int b = first_moved(g);
    base.push_back(b);
    levels.emplace_back();
    return static_cast<int>(base.size()) - 1;
  }

  void add_strong(const Perm& g) {
    strong.push_back(g);
    level_of.push_back(tag_of(g));
  }

  std::vector<int> level_gens(int i) const {
    std::vector<int> out;
    for (std::size_t k = 0; k < strong.size(); ++k)
      if (level_of[k] >= i) out.push_back(static_cast<int>(k));
    return out;
  }

  void rebuild_orbit(int i) {
    Level& L = levels[i];
    auto gi = level_gens(i);
    std::vector<Perm> edge;
    for (int k : gi) edge.push_back(strong[k]);
    for (int k : gi) edge.push_back(inverse_of(strong[k]));
    L.orbit.assign(1, base[i]);
    L.pos.assign(degree, -1);
    L.pos[base[i]] = 0;
    Perm id(degree);
    for (int x = 0; x < degree; ++x) id[x] = x;
    L.umap.assign(1, id);
    for (std::size_t head = 0; head < L.orbit.size(); ++head) {
      for (const Perm& e : edge) {
        int q = e[L.orbit[head]];
        if (L.pos[q] >= 0) continue;
        L.pos[q] = static_cast<int>(L.orbit.size());
        L.orbit.push_back(q);
        L.umap.push_back(compose(e, L.umap[head]));
      }
    }
  }

  // strip through levels from..end; returns residue and stuck level
  std::pair<Perm, int> strip(Perm g, int from) const {
    for (int i = from; i < static_cast<int>(levels.size()); ++i) {
      int im = g[base[i]];
      if (levels[i].pos[im] < 0) return {std::move(g), i};
      g = compose(inverse_of(levels[i].umap[levels[i].pos[im]]), g);
    }
    return {std::move(g), static_cast<int>(levels.size())};
  }

  void complete_level(int i) {
    while (true) {
      rebuild_orbit(i);
      Level& L = levels[i];
      auto gi = level_gens(i);
      bool added = false;
      for (std::size_t oi = 0; oi < L.orbit.size() && !added; ++oi) {
        for (int k : gi) {
          const Perm& x = strong[k];
          int im = x[L.orbit[oi]];
          Perm sg =
              compose(inverse_of(L.umap[L.pos[im]]), compose(x, L.umap[oi]));
          auto [h, j] = strip(std::move(sg), i + 1);
          if (is_identity(h)) continue;
          add_strong(h);
          for (int l = static_cast<int>(levels.size()) - 1; l >= i + 1; --l)
            complete_level(l);
          added = true;
          break;
        }
      }
      if (!added) return;
    }
  }

  void build(const std::vector<Perm>& gens) {
    for (const Perm& g : gens)
      if (!is_identity(g)) add_strong(g);
    for (int i = static_cast<int>(levels.size()) - 1; i >= 0; --i)
      complete_level(i);
  }

  long long order() const {
    long long o = 1;
    for (const Level& L : levels) o *= static_cast<long long>(L.orbit.size());
    return o;
  }

  bool contains(const Perm& g) const {
    auto [h, j] = strip(g, 0);
    (void)j;
    return is_identity(h);
  }
};

Chain make_chain(const PermGroup& g) {
  if (g.degree > kMaxChainDegree)
    throw Error("Overflow",
                "degree too large for stabilizer chains; use coset methods");
  for (const auto& p : g.gens)
    if (static_cast<int>(p.size()) != g.degree)
      throw Error("Validation", "permutation has the wrong degree");
  Chain c(g.degree);
  c.build(g.gens);
  return c;
}

}  // namespace

long long group_order(const PermGroup& g) { return make_chain(g).order(); }

PermGroup derived_subgroup(const PermGroup& g) {
  PermGroup d;
  d.degree = g.degree;
  std::vector<Perm> seeds;
  for (std::size_t a = 0; a < g.gens.size(); ++a)
    for (std::size_t b = a + 1; b < g.gens.size(); ++b) {
      Perm c = compose(inverse_of(g.gens[a]),
                       compose(inverse_of(g.gens[b]),
                               compose(g.gens[a], g.gens[b])));
      if (!is_identity(c)) seeds.push_back(c);
    }
  std::vector<Perm> closure;
  Chain chain(g.degree);
  chain.build({});
  auto absorb = [&](const Perm& p) {
    if (chain.contains(p)) return;
    closure.push_back(p);
    chain = Chain(g.degree);
    chain.build(closure);
  };
  for (const Perm& s : seeds) absorb(s);
  for (std::size_t i = 0; i < closure.size(); ++i) {
    for (const Perm& x : g.gens) {
      Perm c = compose(inverse_of(x), compose(closure[i], x));
      absorb(c);
    }
  }
  d.gens = closure;
  return d;
}

std::vector<long long> derived_series(const PermGroup& g) {
  std::vector<long long> quotients;
  PermGroup cur = g;
  long long order = group_order(cur);
  while (order > 1) {
    PermGroup next = derived_subgroup(cur);
    long long sub = group_order(next);
    quotients.push_back(order / sub);
    if (sub == order) break;  // perfect tail, recorded as 1
    cur = std::move(next);
    order = sub;
  }
  return quotients;
}

}  // namespace trigpi1
