// Scenario files, monodromy transport, and presentation assembly.
//
// Transport calibration: translation_path(steps) returns the braid T whose
// action writes the far-end basis in base words, so a fiber with local
// monodromy m and local slope s contributes the global pair
// (T m T^-1, act(T, s)).  The relation at infinity multiplies the slopes
// in reverse fiber order after r^-k, and unpatched fibers contribute their
// fresh generator in place of the slope.

#include "trigpi1/zvk.hpp"

#include <json.hpp>

#include <set>
#include <sstream>

namespace trigpi1 {

namespace {

using nlohmann::json;

[[noreturn]] void syntax_at(const std::string& text, std::size_t byte,
                            const std::string& what) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  throw Error("Syntax", "line " + std::to_string(line) + ", column " +
                            std::to_string(col) + ": " + what);
}

int angle_code(AngleKind a) {
  switch (a) {
    case AngleKind::A12: return 12;
    case AngleKind::A23: return 23;
    default: return 31;
  }
}

AngleKind angle_from_code(int c, const std::string& where) {
  if (c == 12) return AngleKind::A12;
  if (c == 23) return AngleKind::A23;
  if (c == 31) return AngleKind::A31;
  throw Error("Validation", where + ": angle must be 12, 23, or 31");
}

FiberEntry entry_from_json(const json& j, const std::string& where) {
  FiberEntry e;
  if (!j.is_object()) throw Error("Validation", where + ": not an object");
  if (j.contains("path")) {
    for (const auto& st : j.at("path")) {
      if (!st.is_array() || st.size() != 2)
        throw Error("Validation", where + ": path steps are [i, j] pairs");
      int a = st[0].get<int>(), b = st[1].get<int>();
      if (a < 1 || a > 3 || b < 1 || b > 3)
        throw Error("Validation", where + ": step indices lie in 1..3");
      e.path.emplace_back(a, b);
    }
  }
  e.angle = angle_from_code(j.value("angle", 12), where);
  const bool has_class = j.contains("class");
  const bool has_inf = j.contains("infinity");
  if (has_class == has_inf)
    throw Error("Validation",
                where + ": exactly one of 'class' and 'infinity' required");
  try {
    if (has_class) {
      e.improper = false;
      e.cls = parse_fiber(j.at("class").get<std::string>());
    } else {
      e.improper = true;
      e.inf = parse_infinity(j.at("infinity").get<std::string>());
    }
  } catch (const Error& err) {
    throw Error("Syntax", where + ": " + err.what());
  }
  e.patched = j.value("patched", true);
  return e;
}

json entry_to_json(const FiberEntry& e) {
  json j;
  json path = json::array();
  for (const auto& [a, b] : e.path) path.push_back({a, b});
  j["path"] = path;
  j["angle"] = angle_code(e.angle);
  if (e.improper)
    j["infinity"] = print_infinity(e.inf);
  else
    j["class"] = print_fiber(e.cls);
  j["patched"] = e.patched;
  return j;
}

}  // namespace

Scenario parse_scenario(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    syntax_at(text, e.byte, e.what());
  }
  if (!j.is_object()) throw Error("Syntax", "scenario is not a JSON object");
  Scenario sc;
  try {
    sc.name = j.value("name", std::string());
    if (!j.contains("k")) throw Error("Validation", "missing field 'k'");
    sc.k = j.at("k").get<int>();
    if (sc.k < 1) throw Error("Validation", "k must be positive");
    if (j.contains("skeleton"))
      sc.skeleton = decorated_from_json(j.at("skeleton").dump());
    if (j.contains("base")) {
      if (!sc.skeleton)
        throw Error("Validation", "base data requires a skeleton");
      ScenarioBase b;
      b.vertex = j.at("base").at("vertex").get<int>();
      b.marking = j.at("base").value("marking", std::vector<int>());
      const Skeleton& sk = sc.skeleton->sk;
      if (b.vertex < 0 || b.vertex >= sk.nv())
        throw Error("Validation", "base vertex out of range");
      if (!b.marking.empty()) {
        if (static_cast<int>(b.marking.size()) != sk.nv())
          throw Error("Validation", "marking needs one dart per vertex");
        for (int v = 0; v < sk.nv(); ++v)
          if (b.marking[v] < 0 || b.marking[v] >= sk.darts ||
              sk.vert[b.marking[v]] != v)
            throw Error("Validation", "marking dart not at its vertex");
      }
      sc.base = b;
    }
    if (j.contains("fibers")) {
      int i = 0;
      for (const auto& fj : j.at("fibers")) {
        sc.fibers.push_back(
            entry_from_json(fj, "fibers[" + std::to_string(i) + "]"));
        ++i;
      }
    }
    if (j.contains("template")) {
      std::vector<Word> rels;
      int i = 0;
      for (const auto& rj : j.at("template").at("relators")) {
        try {
          rels.push_back(parse_word(rj.get<std::string>(), standard_gens()));
        } catch (const Error& err) {
          throw Error("Syntax", "template.relators[" + std::to_string(i) +
                                    "]: " + err.what());
        }
        ++i;
      }
      sc.template_relators = std::move(rels);
    }
  } catch (const json::exception& e) {
    throw Error("Syntax", e.what());
  }
  if (sc.skeleton) {
    int ki = k_index(sc.skeleton->sk, sc.skeleton->ts);
    if (ki != sc.k)
      throw Error("Validation", "k = " + std::to_string(sc.k) +
                                    " but the skeleton gives " +
                                    std::to_string(ki));
  }
  if (!sc.skeleton && !sc.template_relators)
    throw Error("Validation", "scenario needs a skeleton or template relators");
  std::set<std::pair<std::vector<std::pair<int, int>>, int>> seen;
  for (const FiberEntry& e : sc.fibers)
    if (!seen.insert({e.path, angle_code(e.angle)}).second)
      throw Error("Validation", "two entries share a path and angle");
  return sc;
}

std::string print_scenario(const Scenario& sc) {
  json j;
  j["name"] = sc.name;
  j["k"] = sc.k;
  if (sc.skeleton) j["skeleton"] = json::parse(decorated_to_json(*sc.skeleton));
  if (sc.base) {
    j["base"] = {{"vertex", sc.base->vertex}};
    if (!sc.base->marking.empty()) j["base"]["marking"] = sc.base->marking;
  }
  json fibers = json::array();
  for (const FiberEntry& e : sc.fibers) fibers.push_back(entry_to_json(e));
  j["fibers"] = fibers;
  if (sc.template_relators) {
    json rels = json::array();
    for (const Word& w : *sc.template_relators)
      rels.push_back(print_word(w, standard_gens()));
    j["template"] = {{"relators", rels}};
  }
  return j.dump(2) + "\n";
}

LocalData local_data_for(const FiberEntry& e) {
  if (!e.improper) {
    LocalData d;
    int i = e.angle == AngleKind::A12 ? 1 : e.angle == AngleKind::A23 ? 2 : 3;
    d.monodromy = local_monodromy(i, e.cls);
    Assignment m = assignment_of(d.monodromy);
    for (int g = 1; g <= 3; ++g)
      d.relators.push_back(m.apply(Word::gen(g)) * Word::gen(g).inverse());
    return d;
  }
  int side = e.angle == AngleKind::A12 ? 1 : e.angle == AngleKind::A23 ? 2 : 0;
  if (side == 0 || e.inf.side != side)
    throw Error("MissingSide",
                "improper fiber's side does not match the entry angle");
  return local_slope(e.inf);
}

TransportResult transport(const LocalData& local, const Braid& path) {
  TransportResult out;
  out.monodromy = assignment_of(path * local.monodromy * path.inverse());
  out.slope = act(path, local.slope);
  return out;
}

namespace {

Presentation assemble_impl(const Scenario& sc, int omit) {
  if (sc.template_relators) {
    if (omit >= 0) throw Error("BadIndex", "template scenarios have no fibers");
    for (const Word& w : *sc.template_relators)
      if (w.max_generator() > 3)
        throw Error("BadTemplate", "template relator uses unknown generators");
    Presentation p;
    p.gens = standard_gens();
    p.relators = *sc.template_relators;
    return p;
  }
  if (omit >= 0) {
    if (omit >= static_cast<int>(sc.fibers.size()))
      throw Error("BadIndex", "no fiber at index " + std::to_string(omit));
    if (!sc.fibers[omit].patched)
      throw Error("BadIndex", "omitted fiber must be patched");
  }
  Presentation p;
  p.gens = standard_gens();
  std::vector<Word> slopes;
  int fresh = 0;
  for (std::size_t i = 0; i < sc.fibers.size(); ++i) {
    const FiberEntry& e = sc.fibers[i];
    TransportResult tr =
        transport(local_data_for(e), translation_path(e.path));
    if (e.patched) {
      slopes.push_back(tr.slope);
      if (static_cast<int>(i) == omit) continue;
      for (int g = 1; g <= 3; ++g) {
        Word rel = tr.monodromy.apply(Word::gen(g)) * tr.slope *
                   Word::gen(g).inverse() * tr.slope.inverse();
        if (!rel.trivial()) p.relators.push_back(rel);
      }
    } else {
      ++fresh;
      p.gens.push_back("g" + std::to_string(fresh));
      int gi = static_cast<int>(p.gens.size());
      slopes.push_back(Word::gen(gi));
      for (int g = 1; g <= 3; ++g) {
        Word rel = Word::gen(gi).inverse() * Word::gen(g) * Word::gen(gi) *
                   tr.monodromy.apply(Word::gen(g)).inverse();
        if (!rel.trivial()) p.relators.push_back(rel);
      }
    }
  }
  Word inf = rho_word().pow(-sc.k);
  for (std::size_t i = slopes.size(); i > 0; --i) inf.append(slopes[i - 1]);
  p.relators.push_back(inf);
  return p;
}

}  // namespace

Presentation assemble(const Scenario& sc) { return assemble_impl(sc, -1); }

Presentation assemble_omitting(const Scenario& sc, int index) {
  if (index < 0) throw Error("BadIndex", "index must be nonnegative");
  return assemble_impl(sc, index);
}

}  // namespace trigpi1
