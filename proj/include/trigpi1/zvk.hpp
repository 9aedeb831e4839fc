// Assembly of fundamental-group presentations from marked-skeleton
// scenarios by the slope-twisted van Kampen method.
//
// A scenario lists the singular fibers of a curve in a fixed order.  Each
// entry carries the translation path from the base vertex (steps listed
// factor-first, as in translation_path), the angle at the terminal vertex
// through which the fiber is seen, the fiber itself (a proper class or an
// improper descriptor with its local slope), and whether the fiber is
// patched.  Transport conjugates the local monodromy by the path
// translation and pushes the local slope through it; assembly then emits,
// per patched fiber, the three twisted relators m(a_j) k a_j^-1 k^-1, per
// unpatched fiber a fresh generator g_i with relators g_i^-1 a_j g_i =
// m(a_j), and finally the relation at infinity r^-k k_r ... k_1.
//
// Scenarios built from the paper trail of displayed relation schemas carry
// template relators instead; assembly then returns those words verbatim
// over a1, a2, a3.  Scenario files are canonical JSON and re-serialization
// of a parsed file is the canonical form byte for byte.

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "trigpi1/fiber.hpp"
#include "trigpi1/fpgroup.hpp"
#include "trigpi1/skeleton.hpp"

namespace trigpi1 {

struct FiberEntry {
  std::vector<std::pair<int, int>> path;  // far-end step first
  AngleKind angle = AngleKind::A12;
  bool improper = false;
  FiberClass cls;     // proper case
  InfinityClass inf;  // improper case
  bool patched = true;
};

struct ScenarioBase {
  int vertex = 0;
  std::vector<int> marking;  // chosen first dart per vertex
};

struct Scenario {
  std::string name;
  int k = 0;
  std::optional<DecoratedSkeleton> skeleton;
  std::optional<ScenarioBase> base;
  std::vector<FiberEntry> fibers;
  std::optional<std::vector<Word>> template_relators;
};

// canonical JSON; parse errors carry line and column, fiber and template
// token errors name the offending entry
Scenario parse_scenario(const std::string& text);
std::string print_scenario(const Scenario& sc);

// local data of one entry before transport (errors: MissingSide when the
// entry's angle does not match the improper fiber's side)
LocalData local_data_for(const FiberEntry& e);

struct TransportResult {
  Assignment monodromy;
  Word slope;
};
TransportResult transport(const LocalData& local, const Braid& path);

Presentation assemble(const Scenario& sc);

// drop the three braid relators of the patched fiber at `index` (0-based),
// keeping its slope in the relation at infinity (errors: BadIndex)
Presentation assemble_omitting(const Scenario& sc, int index);

}  // namespace trigpi1
