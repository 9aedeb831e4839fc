// Genus-zero cubic maps (generic skeletons of trigonal curves): rotation
// systems, face walks, type specifications, canonical forms, enumeration,
// bigonal insertions, splitting markings, and singularity bookkeeping for
// the associated plane sextics.
//
// Conventions fixed here and relied on elsewhere:
//   - rot[d] is the next dart counterclockwise around the vertex of d;
//   - the face permutation is phi(d) = rot[pr[d]]; face(d) is the phi-orbit
//     through d and an m-gonal region is an orbit of size m;
//   - a marking at a trivalent vertex picks the dart e1; e2 = rot(e1) and
//     e3 = rot(e2); the angle between e_i and e_{i+1} lies in the face of
//     e_{i+1}, so angles 12, 23, 31 sit in face(e2), face(e3), face(e1);
//   - the mirror image keeps the pairing, inverts the rotation, and a face
//     attribute is carried to the mirror through face(pr[d]).
// The ts-value of a region is m + 6s; their sum over all regions is 6k.

#pragma once

#include <string>
#include <vector>

#include "trigpi1/fiber.hpp"

namespace trigpi1 {

struct Skeleton {
  int darts = 0;
  std::vector<int> rot;   // counterclockwise next dart at the same vertex
  std::vector<int> pr;    // fixed-point-free edge pairing
  std::vector<int> irot;  // inverse of rot
  std::vector<int> vert;  // dart -> vertex id
  std::vector<int> face;  // dart -> face id
  std::vector<std::vector<int>> vcycle;  // vertex -> rot cycle from least dart
  std::vector<std::vector<int>> fcycle;  // face -> phi cycle from least dart

  int phi(int d) const { return rot[pr[d]]; }
  int nv() const { return static_cast<int>(vcycle.size()); }
  int nf() const { return static_cast<int>(fcycle.size()); }
  int m_of(int f) const { return static_cast<int>(fcycle[f].size()); }
};

// Validates involution freeness, trivalency, connectivity, and genus zero.
// Errors: FixedPointInPairing, WrongValency, Disconnected, WrongGenus,
// BadMap (malformed permutation input).
Skeleton build_skeleton(const std::vector<int>& rotation,
                        const std::vector<int>& pairing);

// face sizes indexed by face id
std::vector<int> face_sizes(const Skeleton& s);

// Region decoration: s elementary transformations on an m-gonal region.
struct RegionType {
  int face = 0;
  int m = 0;
  int s = 0;
};
using TypeSpec = std::vector<RegionType>;  // one entry per face, in face order

inline int ts_value(const RegionType& r) { return r.m + 6 * r.s; }

TypeSpec uniform_typespec(const Skeleton& s);

struct Issue {
  std::string kind;
  std::string message;
};
// empty result means valid; kinds BadRegionValue, BadSum
std::vector<Issue> validate_typespec(const Skeleton& s, const TypeSpec& t);

// k with sum of ts-values = 6k; generic form k = V/2 + sum of s.
// Error: NonIntegralK.
int k_index(const Skeleton& s, const TypeSpec& t);

struct DecoratedSkeleton {
  Skeleton sk;
  TypeSpec ts;
  int RI = -1;   // distinguished bigon, -1 when not chosen yet
  int RII = -1;  // second distinguished region
  std::string label;
};

// Canonical forms.  Codes are equal exactly for orientation-preserving
// isomorphisms matching the per-dart attributes.
using Code = std::string;
Code canonical_code(const Skeleton& s);
Code canonical_code(const DecoratedSkeleton& d);
Code mirror_code(const DecoratedSkeleton& d);
bool is_mirror_symmetric(const DecoratedSkeleton& d);

// attribute per dart encoding (s of its face, R_I flag, R_II flag)
std::vector<int> decorated_dart_attrs(const DecoratedSkeleton& d);

// all orientation-preserving automorphisms fixing dart_attr, as dart
// permutations; empty attrs means unrestricted
std::vector<std::vector<int>> automorphisms(
    const Skeleton& s, const std::vector<int>& dart_attr = {});

// one dart per orbit of edges under automorphisms fixing dart_attr
std::vector<int> edge_orbit_reps(const Skeleton& s,
                                 const std::vector<int>& dart_attr = {});

struct EnumOptions {
  bool irreducible_only = false;
  int distinguished_m = 0;  // 0 = none; else decorate R_II with an m-gon
  int bound = 8;
};

// Connected genus-zero cubic maps on n vertices up to orientation-preserving
// isomorphism; with distinguished_m set, one class per (skeleton, R_II
// orbit) pair.  Error: BoundExceeded.
std::vector<DecoratedSkeleton> enumerate_cubic_skeletons(
    int n, const EnumOptions& opt = {});

struct InsertionResult {
  Skeleton sk;
  int ri_face = -1;   // the freshly created bigon
  int rii_face = -1;  // the quadrilateral, bibigonal case only
};
// Splice a bigonal (two new vertices) or bibigonal (four) insertion into the
// edge of edge_dart; orientation 0/1 picks the side carrying the outer bigon.
InsertionResult insert_bigon(const Skeleton& s, int edge_dart);
InsertionResult insert_bibigon(const Skeleton& s, int edge_dart,
                               int orientation);
// inverse of insert_bigon up to relabeling
Skeleton remove_bigon(const Skeleton& s, int bigon_face);

// marking[v] = the dart carrying index 1 at vertex v
using Marking = std::vector<int>;

int dart_index(const Skeleton& s, const Marking& mk, int d);          // 1..3
int marked_dart(const Skeleton& s, const Marking& mk, int v, int idx);
int angle_face(const Skeleton& s, const Marking& mk, int v, AngleKind a);

// All markings whose edges are of the types [1,1], [2,3], [3,2] and whose
// regions seen through angles 12 or 31 carry even fiber multiplicity; a
// nonempty answer detects a reducible curve.
std::vector<Marking> splitting_markings(const Skeleton& s, const TypeSpec& t);

// one singular fiber per region: A0* (s=0 monogon), A_{m-1} (s=0), D_{m+4}
// (s=1), J_{s,m} (s>=2); indexed by face id
std::vector<FiberClass> region_fibers(const Skeleton& s, const TypeSpec& t);

struct SingLabel {
  char kind = 'A';
  int index = 0;
  bool operator==(const SingLabel&) const = default;
};

enum class SextCase { D7, D5 };

// Singularities of the plane sextic built on the decoration: R_II gives
// D_{m+6} (case D7) or D_5 (case D5, quadrilateral R_II); other regions give
// A_{m-1} (s=0, m>=2) or D_{m+4} (s=1); monogons and R_I give nothing.
// Sorted D-part first, descending.  Errors: InvalidCase, NonSimple.
std::vector<SingLabel> singularity_set(const DecoratedSkeleton& d,
                                       SextCase c);

std::string print_singularities(const std::vector<SingLabel>& set);
std::vector<SingLabel> parse_singularities(const std::string& text);

struct MilnorReport {
  int mu = 0;
  bool maximal = false;
  int unstable = 0;
};
// total Milnor number vs the bound 5k - 2 - #unstable
MilnorReport milnor_and_maximality(int k, const std::vector<FiberClass>& fs);
MilnorReport milnor_and_maximality(const Skeleton& s, const TypeSpec& t);

// least vertex-graph distance between boundary vertices of two regions
int region_distance(const Skeleton& s, int f1, int f2);

std::string decorated_to_json(const DecoratedSkeleton& d);
DecoratedSkeleton decorated_from_json(const std::string& text);

}  // namespace trigpi1
