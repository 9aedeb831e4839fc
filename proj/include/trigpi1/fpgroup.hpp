// Finitely presented groups: abelian invariants, coset enumeration,
// subgroup presentations, simplification, identification of small groups.
//
// Conventions.  A Presentation lists generator names and freely reduced
// relator words over them (letter +g / -g refers to gens[g-1]).  Coset
// enumeration is Felsch-style: definitions are processed through a deduction
// stack, scanning every cyclic rotation of every relator through each new
// table edge, with coincidences handled by a union queue.  The returned
// table is standardized (breadth-first renumbering), so equal inputs give
// byte-identical tables regardless of the enumeration history.
//
// Subgroup presentations follow Reidemeister-Schreier: the table of the
// normal closure N of a word set is the regular table of the quotient by N,
// Schreier generators are taken off a breadth-first spanning tree, and the
// relator rewrites at every coset are simplified afterwards.
//
// todd_coxeter never asserts infiniteness: running out of room raises
// Overflow.  The coset limit defaults to 1,000,000 and can be overridden
// with the TRIGPI1_MAX_COSETS environment variable (a limit argument of 0
// means "use that default").

#pragma once

#include <string>
#include <vector>

#include "trigpi1/word.hpp"

namespace trigpi1 {

struct Presentation {
  std::vector<std::string> gens;
  std::vector<Word> relators;
};

// File format: header line `gens: a1 a2 a3 ...`, then one relator word per
// line in the shared word syntax; blank lines and lines starting with '#'
// are skipped.  Errors carry the 1-based line number.
Presentation parse_presentation(const std::string& text);
std::string print_presentation(const Presentation& p);

// invariant factors d1 | d2 | ... of the abelianization; 0 denotes a free
// factor; trivial group gives the empty list
using AbelianInvariants = std::vector<long long>;
AbelianInvariants abelian_invariants(const Presentation& p);

// columns alternate g, g^-1 for each generator; row 0 is the subgroup coset
struct CosetTable {
  int gens = 0;
  std::vector<std::vector<int>> rows;  // rows[c][2*(g-1) + (inv?1:0)]
  bool closed = false;
  int cosets() const { return static_cast<int>(rows.size()); }
};

struct EnumerationResult {
  long long index = 0;  // subgroup index; group order for the trivial subgroup
  CosetTable table;
};

long long effective_coset_limit(long long requested);  // 0 -> env or default

EnumerationResult todd_coxeter(const Presentation& p,
                               const std::vector<Word>& subgroup,
                               long long limit = 0);

struct PermGroup {
  int degree = 0;
  std::vector<std::vector<int>> gens;  // each a permutation of 0..degree-1
};

// generators acting on cosets by right multiplication; requires a closed
// table over the trivial subgroup (errors: NotClosed)
PermGroup regular_representation(const CosetTable& t);

long long group_order(const PermGroup& g);  // deterministic stabilizer chain
PermGroup derived_subgroup(const PermGroup& g);

// successive |G_i / G_{i+1}| down the derived series until the group is
// trivial or stops shrinking (a perfect tail contributes a final 1)
std::vector<long long> derived_series(const PermGroup& g);

// Reidemeister-Schreier presentation of the normal closure of `words`,
// simplified; requires the closure to have finite index.  When the
// presentation is literally free abelian (its relators are exactly the
// generator commutators), the closure is the subgroup the words generate
// and is presented directly from the exponent lattice.
Presentation normal_closure_presentation(const Presentation& p,
                                         const std::vector<Word>& words,
                                         long long limit = 0);

// conservative simplification: cyclic reduction, duplicate removal,
// single-occurrence generator elimination, relator-against-relator
// shortening; idempotent; never changes the isomorphism class
Presentation tietze_simplify(const Presentation& p);

Presentation add_relators(const Presentation& p, const std::vector<Word>& words);

// kind is one of: trivial, cyclic, elementary abelian, abelian, Q8,
// perfect, unrecognized (raw order and invariants are always filled in)
struct SmallGroup {
  std::string kind;
  long long order = 0;
  AbelianInvariants abelian;
};
SmallGroup identify_small(const Presentation& p, long long limit = 0);

// Sound search for "goal lies in the normal closure of facts": rewrite
// rules s -> t^-1 are read off every split of every cyclic rotation of
// every fact and its inverse, and a shortest-first search tries to reduce
// goal to the empty word.  `true` is a proof; `false` only means no proof
// was found within the caps.
struct ProverOptions {
  std::size_t max_length = 64;
  std::size_t max_nodes = 200000;
};
bool is_consequence(const std::vector<Word>& facts, const Word& goal,
                    const ProverOptions& opts = {});

}  // namespace trigpi1
