// Conservative Tietze simplification.
//
// Three moves, each preserving the isomorphism class: replacing a relator
// by a cyclic rotation or inverse (used to canonicalize and deduplicate),
// shortening one relator against more than half of another, and
// eliminating a generator that occurs exactly once in some relator, when
// the substitution does not increase the total relator length.  Moves are
// applied in a fixed deterministic order until none applies, so the result
// is stable under re-simplification.

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "trigpi1/fpgroup.hpp"

namespace trigpi1 {

namespace {

std::vector<int> canonical_cyclic(const Word& w) {
  Word c = w.cyclically_reduced();
  std::vector<int> ls = c.letters();
  if (ls.empty()) return ls;
  std::vector<int> best;
  for (const Word& side : {c, c.inverse()}) {
    std::vector<int> s = side.letters();
    const std::size_t n = s.size();
    for (std::size_t rot = 0; rot < n; ++rot) {
      std::vector<int> cand(s.begin() + rot, s.end());
      cand.insert(cand.end(), s.begin(), s.begin() + rot);
      if (best.empty() || cand < best) best = cand;
    }
  }
  return best;
}

Word word_of(const std::vector<int>& ls) {
  Word w;
  for (int l : ls) w.push(l);
  return w;
}

std::size_t total_length(const std::vector<Word>& rs) {
  std::size_t t = 0;
  for (const Word& r : rs) t += r.length();
  return t;
}

// substitute generator g (positive letter) by rep wherever it occurs
Word substitute(const Word& w, int g, const Word& rep) {
  Word out;
  for (int l : w.letters()) {
    if (l == g)
      out.append(rep);
    else if (l == -g)
      out.append(rep.inverse());
    else
      out.push(l);
  }
  return out;
}

Word renumber_down(const Word& w, int removed) {
  Word out;
  for (int l : w.letters()) {
    int a = std::abs(l);
    int b = a > removed ? a - 1 : a;
    out.push(l > 0 ? b : -b);
  }
  return out;
}

struct State {
  std::vector<std::string> gens;
  std::vector<Word> relators;

  void canonicalize() {
    std::set<std::vector<int>> seen;
    std::vector<Word> out;
    for (const Word& r : relators) {
      std::vector<int> c = canonical_cyclic(r);
      if (c.empty()) continue;
      if (seen.insert(c).second) out.push_back(word_of(c));
    }
    relators = std::move(out);
  }

  // use more than half of relator i to shorten relator j (cyclically)
  bool shorten_pass() {
    for (std::size_t i = 0; i < relators.size(); ++i) {
      const std::size_t li = relators[i].length();
      if (li < 2) continue;
      const std::size_t h = li / 2 + 1;
      std::vector<std::vector<int>> pieces;
      for (const Word& side : {relators[i], relators[i].inverse()}) {
        std::vector<int> s = side.letters();
        for (std::size_t rot = 0; rot < s.size(); ++rot) {
          std::vector<int> cyc(s.begin() + rot, s.end());
          cyc.insert(cyc.end(), s.begin(), s.begin() + rot);
          pieces.push_back(cyc);
        }
      }
      for (std::size_t j = 0; j < relators.size(); ++j) {
        if (j == i || relators[j].length() < h) continue;
        std::vector<int> t = relators[j].letters();
        const std::size_t n = t.size();
        for (const auto& u : pieces) {
          for (std::size_t pos = 0; pos < n; ++pos) {
            bool match = true;
            for (std::size_t k = 0; k < h && match; ++k)
              if (t[(pos + k) % n] != u[k]) match = false;
            if (!match) continue;
            // rotate j to start at pos, replace the matched piece by the
            // inverse of the remainder of u
            Word repl;
            for (std::size_t k = u.size(); k > h; --k) repl.push(-u[k - 1]);
            for (std::size_t k = h; k < n; ++k) repl.push(t[(pos + k) % n]);
            if (repl.cyclically_reduced().length() >= n) continue;
            relators[j] = repl;
            return true;
          }
        }
      }
    }
    return false;
  }

  bool eliminate_pass() {
    const std::size_t cur = total_length(relators);
    long long best_total = -1;
    std::size_t best_r = 0;
    int best_g = 0;
    Word best_rep;
    for (std::size_t ri = 0; ri < relators.size(); ++ri) {
      for (int g = 1; g <= static_cast<int>(gens.size()); ++g) {
        int count = 0;
        std::size_t at = 0;
        const auto& ls = relators[ri].letters();
        for (std::size_t k = 0; k < ls.size(); ++k)
          if (std::abs(ls[k]) == g) {
            ++count;
            at = k;
          }
        if (count != 1) continue;
        // rotate to start at `at`: the relator reads x w with x = +-g,
        // so g = w^-1 when x is g and g = w when x is g^-1
        Word rep;
        const std::size_t n = ls.size();
        if (ls[at] > 0)
          for (std::size_t k = n - 1; k >= 1; --k) rep.push(-ls[(at + k) % n]);
        else
          for (std::size_t k = 1; k <= n - 1; ++k) rep.push(ls[(at + k) % n]);
        long long total = 0;
        for (std::size_t rj = 0; rj < relators.size(); ++rj) {
          if (rj == ri) continue;
          total += static_cast<long long>(
              substitute(relators[rj], g, rep).length());
        }
        if (total > static_cast<long long>(cur)) continue;
        if (best_total < 0 || total < best_total ||
            (total == best_total &&
             (relators[ri].length() < relators[best_r].length() ||
              (relators[ri].length() == relators[best_r].length() &&
               g < best_g)))) {
          best_total = total;
          best_r = ri;
          best_g = g;
          best_rep = rep;
        }
      }
    }
    if (best_total < 0) return false;
    std::vector<Word> out;
    for (std::size_t rj = 0; rj < relators.size(); ++rj) {
      if (rj == best_r) continue;
      out.push_back(
          renumber_down(substitute(relators[rj], best_g, best_rep), best_g));
    }
    relators = std::move(out);
    gens.erase(gens.begin() + (best_g - 1));
    return true;
  }
};

}  // namespace

Presentation tietze_simplify(const Presentation& p) {
  State st{p.gens, p.relators};
  st.canonicalize();
  bool changed = true;
  while (changed) {
    changed = false;
    while (st.shorten_pass()) {
      st.canonicalize();
      changed = true;
    }
    if (st.eliminate_pass()) {
      st.canonicalize();
      changed = true;
    }
  }
  std::sort(st.relators.begin(), st.relators.end(),
            [](const Word& a, const Word& b) {
              if (a.length() != b.length()) return a.length() < b.length();
              return a < b;
            });
  Presentation out;
  out.gens = st.gens;
  out.relators = st.relators;
  return out;
}

}  // namespace trigpi1
