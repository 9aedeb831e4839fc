// Presentation parsing and printing, abelianization via Smith normal form
// over arbitrary-precision integers, identification of small groups from
// their order and invariants, and a sound rewrite-search prover for
// membership of a word in the normal closure of a fact list.

#include "trigpi1/fpgroup.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <sstream>

namespace trigpi1 {

namespace {

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

}  // namespace

Presentation parse_presentation(const std::string& text) {
  Presentation p;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool have_gens = false;
  while (std::getline(in, line)) {
    ++lineno;
    std::string trimmed = line;
    auto a = trimmed.find_first_not_of(" \t\r");
    if (a == std::string::npos) continue;
    auto b = trimmed.find_last_not_of(" \t\r");
    trimmed = trimmed.substr(a, b - a + 1);
    if (trimmed.empty() || trimmed[0] == '#') continue;
    if (!have_gens) {
      if (trimmed.rfind("gens:", 0) != 0)
        throw Error("Syntax", "line " + std::to_string(lineno) +
                                  ": expected 'gens:' header");
      p.gens = split_ws(trimmed.substr(5));
      if (p.gens.empty())
        throw Error("Syntax",
                    "line " + std::to_string(lineno) + ": no generators");
      std::set<std::string> seen;
      for (const auto& g : p.gens) {
        if (g == "1" || !seen.insert(g).second)
          throw Error("Syntax", "line " + std::to_string(lineno) +
                                    ": bad generator name '" + g + "'");
      }
      have_gens = true;
      continue;
    }
    try {
      p.relators.push_back(parse_word(trimmed, p.gens));
    } catch (const Error& e) {
      throw Error("Syntax",
                  "line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (!have_gens) throw Error("Syntax", "missing 'gens:' header");
  return p;
}

std::string print_presentation(const Presentation& p) {
  std::ostringstream out;
  out << "gens:";
  for (const auto& g : p.gens) out << ' ' << g;
  out << '\n';
  for (const auto& r : p.relators) out << print_word(r, p.gens) << '\n';
  return out.str();
}

Presentation add_relators(const Presentation& p,
                          const std::vector<Word>& words) {
  Presentation q = p;
  for (const auto& w : words) {
    for (int l : w.letters())
      if (std::abs(l) > static_cast<int>(p.gens.size()))
        throw Error("Validation", "relator uses an unknown generator");
    q.relators.push_back(w);
  }
  return q;
}

// ---------------------------------------------------------------------------
// Smith normal form.  Row and column operations over mpz; the divisibility
// chain is enforced afterwards by pairwise gcd/lcm passes.

AbelianInvariants abelian_invariants(const Presentation& p) {
  const int n = static_cast<int>(p.gens.size());
  const int m = static_cast<int>(p.relators.size());
  std::vector<std::vector<mpz_class>> M(m, std::vector<mpz_class>(n, 0));
  for (int i = 0; i < m; ++i)
    for (int g = 1; g <= n; ++g)
      M[i][g - 1] = p.relators[i].exponent_sum(g);

  int t = 0;
  const int steps = std::min(m, n);
  while (t < steps) {
    // pivot: smallest nonzero absolute value in the remaining block
    int pi = -1, pj = -1;
    mpz_class best = 0;
    for (int i = t; i < m; ++i)
      for (int j = t; j < n; ++j) {
        if (M[i][j] == 0) continue;
        mpz_class a = abs(M[i][j]);
        if (pi < 0 || a < best) {
          best = a;
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;
    std::swap(M[t], M[pi]);
    for (int i = 0; i < m; ++i) std::swap(M[i][t], M[i][pj]);

    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (int i = t + 1; i < m; ++i) {
        if (M[i][t] == 0) continue;
        mpz_class q = M[i][t] / M[t][t];
        for (int j = t; j < n; ++j) M[i][j] -= q * M[t][j];
        if (M[i][t] != 0) {  // remainder became the smaller pivot
          std::swap(M[t], M[i]);
          dirty = true;
        }
      }
      for (int j = t + 1; j < n; ++j) {
        if (M[t][j] == 0) continue;
        mpz_class q = M[t][j] / M[t][t];
        for (int i = 0; i < m; ++i) M[i][j] -= q * M[i][t];
        if (M[t][j] != 0) {
          for (int i = 0; i < m; ++i) std::swap(M[i][t], M[i][j]);
          dirty = true;
        }
      }
    }
    // pivot must divide the rest of the block for the chain to come out
    bool redo = false;
    for (int i = t + 1; i < m && !redo; ++i)
      for (int j = t + 1; j < n && !redo; ++j)
        if (M[i][j] % M[t][t] != 0) {
          for (int jj = t; jj < n; ++jj) M[t][jj] += M[i][jj];
          redo = true;
        }
    if (!redo) ++t;
  }

  std::vector<mpz_class> diag;
  for (int i = 0; i < t; ++i) diag.push_back(abs(M[i][i]));
  for (auto& d : diag)
    if (d < 0) d = -d;
  // normalize the chain d1 | d2 | ...
  for (bool moved = true; moved;) {
    moved = false;
    for (std::size_t i = 0; i + 1 < diag.size(); ++i) {
      if (diag[i + 1] % diag[i] == 0) continue;
      mpz_class g = gcd(diag[i], diag[i + 1]);
      mpz_class l = diag[i] / g * diag[i + 1];
      diag[i] = g;
      diag[i + 1] = l;
      moved = true;
    }
  }

  AbelianInvariants inv;
  for (const auto& d : diag) {
    if (d == 1) continue;
    if (!d.fits_slong_p())
      throw Error("Overflow", "abelian invariant exceeds 64 bits");
    inv.push_back(d.get_si());
  }
  for (int i = t; i < n; ++i) inv.push_back(0);
  return inv;
}

// ---------------------------------------------------------------------------
// Identification of small groups.

namespace {

// breadth-first representative words for a closed table, row 0 outward
std::vector<std::vector<int>> coset_words(const CosetTable& t) {
  const int n = t.cosets();
  std::vector<std::vector<int>> word(n);
  std::vector<bool> seen(n, false);
  std::queue<int> q;
  seen[0] = true;
  q.push(0);
  while (!q.empty()) {
    int c = q.front();
    q.pop();
    for (int col = 0; col < 2 * t.gens; ++col) {
      int d = t.rows[c][col];
      if (d < 0 || seen[d]) continue;
      seen[d] = true;
      word[d] = word[c];
      word[d].push_back(col % 2 == 0 ? col / 2 + 1 : -(col / 2 + 1));
      q.push(d);
    }
  }
  return word;
}

int trace_word(const CosetTable& t, int c, const std::vector<int>& w) {
  for (int l : w) c = t.rows[c][l > 0 ? 2 * (l - 1) : 2 * (-l - 1) + 1];
  return c;
}

// order of the element represented by coset c in a regular table
long long element_order(const CosetTable& t, const std::vector<int>& w) {
  long long k = 1;
  int p = trace_word(t, 0, w);
  while (p != 0) {
    p = trace_word(t, p, w);
    ++k;
  }
  return k;
}

}  // namespace

SmallGroup identify_small(const Presentation& p, long long limit) {
  SmallGroup out;
  out.abelian = abelian_invariants(p);
  EnumerationResult res = todd_coxeter(p, {}, limit);
  out.order = res.index;
  if (out.order == 1) {
    out.kind = "trivial";
    return out;
  }
  mpz_class prod = 1;
  bool infinite_ab = false;
  for (long long d : out.abelian) {
    if (d == 0) infinite_ab = true;
    prod *= static_cast<long>(d);
  }
  if (!infinite_ab && prod == static_cast<long>(out.order)) {
    // the surjection onto the abelianization is an isomorphism
    if (out.abelian.size() == 1)
      out.kind = "cyclic";
    else {
      bool elem = true;
      for (long long d : out.abelian)
        if (d != out.abelian[0]) elem = false;
      long long q = out.abelian[0];
      bool prime = q >= 2;
      for (long long f = 2; f * f <= q; ++f)
        if (q % f == 0) prime = false;
      out.kind = (elem && prime) ? "elementary abelian" : "abelian";
    }
    return out;
  }
  if (out.abelian.empty()) {
    out.kind = "perfect";
    return out;
  }
  if (out.order == 8 && out.abelian == AbelianInvariants{2, 2}) {
    auto words = coset_words(res.table);
    int involutions = 0;
    for (int c = 1; c < res.table.cosets(); ++c)
      if (element_order(res.table, words[c]) == 2) ++involutions;
    if (involutions == 1) {
      out.kind = "Q8";
      return out;
    }
  }
  out.kind = "unrecognized";
  return out;
}

// ---------------------------------------------------------------------------
// Membership prover.  Rules s -> t^-1 come from splitting cyclic rotations
// of the facts; shortest-first search with free reduction after each
// replacement.  Finding the empty word is a proof; exhausting the caps is
// merely inconclusive.

namespace {

struct WordOrder {
  bool operator()(const Word& a, const Word& b) const {
    if (a.length() != b.length()) return a.length() > b.length();
    return b < a;  // priority_queue pops the smallest this way
  }
};

Word splice(const Word& w, std::size_t pos, std::size_t cut,
            const std::vector<int>& rhs) {
  Word out;
  const auto& ls = w.letters();
  for (std::size_t i = 0; i < pos; ++i) out.push(ls[i]);
  for (int l : rhs) out.push(l);
  for (std::size_t i = pos + cut; i < ls.size(); ++i) out.push(ls[i]);
  return out;
}

}  // namespace

bool is_consequence(const std::vector<Word>& facts, const Word& goal,
                    const ProverOptions& opts) {
  if (goal.trivial()) return true;
  std::set<std::pair<std::vector<int>, std::vector<int>>> rule_set;
  for (const Word& f : facts) {
    for (const Word& base : {f, f.inverse()}) {
      std::vector<int> ls = base.letters();
      const std::size_t n = ls.size();
      if (n == 0) continue;
      for (std::size_t rot = 0; rot < n; ++rot) {
        std::vector<int> cyc(ls.begin() + rot, ls.end());
        cyc.insert(cyc.end(), ls.begin(), ls.begin() + rot);
        for (std::size_t cut = 1; cut <= n; ++cut) {
          std::vector<int> lhs(cyc.begin(), cyc.begin() + cut);
          std::vector<int> rhs;
          for (std::size_t i = n; i > cut; --i) rhs.push_back(-cyc[i - 1]);
          rule_set.insert({lhs, rhs});
        }
      }
    }
  }
  std::vector<std::pair<std::vector<int>, std::vector<int>>> rules(
      rule_set.begin(), rule_set.end());

  std::priority_queue<Word, std::vector<Word>, WordOrder> frontier;
  std::set<Word> visited;
  frontier.push(goal);
  visited.insert(goal);
  std::size_t expanded = 0;
  while (!frontier.empty() && expanded < opts.max_nodes) {
    Word w = frontier.top();
    frontier.pop();
    ++expanded;
    if (w.trivial()) return true;
    const auto& ls = w.letters();
    for (const auto& [lhs, rhs] : rules) {
      if (lhs.size() > ls.size()) continue;
      for (std::size_t pos = 0; pos + lhs.size() <= ls.size(); ++pos) {
        if (!std::equal(lhs.begin(), lhs.end(), ls.begin() + pos)) continue;
        Word next = splice(w, pos, lhs.size(), rhs);
        if (next.trivial()) return true;
        if (next.length() > opts.max_length) continue;
        if (visited.insert(next).second) frontier.push(next);
      }
    }
  }
  return false;
}

}  // namespace trigpi1
