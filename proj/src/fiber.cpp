#include "trigpi1/fiber.hpp"

#include <sstream>

namespace trigpi1 {

FiberClass FiberClass::A(int p) {
  if (p < 1) throw Error("BadParameters", "A_p needs p >= 1");
  return {FiberKind::A, p, 0};
}
FiberClass FiberClass::Dq(int q) {
  if (q < 4) throw Error("BadParameters", "D_q needs q >= 4");
  return {FiberKind::D, q, 0};
}
FiberClass FiberClass::En(int n) {
  if (n < 6 || n % 6 > 2) throw Error("BadParameters", "E_n needs n = 6r, 6r+1 or 6r+2");
  return {FiberKind::E, n, 0};
}
FiberClass FiberClass::Jrp(int r, int p) {
  if (r < 2 || p < 0) throw Error("BadParameters", "J_{r,p} needs r >= 2, p >= 0");
  return {FiberKind::J, p, r};
}
FiberClass FiberClass::simple(FiberKind k) { return {k, 0, 0}; }

int multiplicity(const FiberClass& f) {
  switch (f.kind) {
    case FiberKind::A0: return 0;
    case FiberKind::A0s: return 1;
    case FiberKind::A0ss: return 2;
    case FiberKind::A1s: return 3;
    case FiberKind::A2s: return 4;
    case FiberKind::A: return f.p + 1;
    case FiberKind::D: return f.p + 2;
    case FiberKind::E: return f.p + 2;
    case FiberKind::J: return f.p + 6 * f.r;
  }
  throw Error("BadParameters", "unknown fiber kind");
}

int milnor(const FiberClass& f) {
  switch (f.kind) {
    case FiberKind::A0:
    case FiberKind::A0s:
    case FiberKind::A0ss: return 0;
    case FiberKind::A1s: return 1;
    case FiberKind::A2s: return 2;
    case FiberKind::A: return f.p;
    case FiberKind::D: return f.p;
    case FiberKind::E:
      if (f.p > 8) throw Error("NonSimple", "E_n with n > 8");
      return f.p;
    case FiberKind::J: throw Error("NonSimple", "J-type fiber");
  }
  throw Error("BadParameters", "unknown fiber kind");
}

FiberClass elementary_transform(const FiberClass& f) {
  switch (f.kind) {
    case FiberKind::A0: return FiberClass::Dq(4);
    case FiberKind::A0s: return FiberClass::Dq(5);
    case FiberKind::A0ss: return FiberClass::En(6);
    case FiberKind::A1s: return FiberClass::En(7);
    case FiberKind::A2s: return FiberClass::En(8);
    case FiberKind::A: return FiberClass::Dq(f.p + 5);
    case FiberKind::D: return FiberClass::Jrp(2, f.p - 4);
    case FiberKind::E: return FiberClass::En(f.p + 6);
    case FiberKind::J: return FiberClass::Jrp(f.r + 1, f.p);
  }
  throw Error("BadParameters", "unknown fiber kind");
}

FiberClass parse_fiber(const std::string& token) {
  if (token == "A0") return FiberClass::simple(FiberKind::A0);
  if (token == "A0s") return FiberClass::simple(FiberKind::A0s);
  if (token == "A0ss") return FiberClass::simple(FiberKind::A0ss);
  if (token == "A1s") return FiberClass::simple(FiberKind::A1s);
  if (token == "A2s") return FiberClass::simple(FiberKind::A2s);
  auto number = [&](const std::string& s) {
    try {
      std::size_t used = 0;
      int v = std::stoi(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return v;
    } catch (const std::exception&) {
      throw Error("Syntax", "bad fiber token '" + token + "'");
    }
  };
  if (token.size() > 1 && token[0] == 'A') return FiberClass::A(number(token.substr(1)));
  if (token.size() > 1 && token[0] == 'D') return FiberClass::Dq(number(token.substr(1)));
  if (token.size() > 1 && token[0] == 'E') return FiberClass::En(number(token.substr(1)));
  if (token.size() > 1 && token[0] == 'J') {
    auto comma = token.find(',');
    if (comma == std::string::npos) throw Error("Syntax", "bad fiber token '" + token + "'");
    return FiberClass::Jrp(number(token.substr(1, comma - 1)), number(token.substr(comma + 1)));
  }
  throw Error("Syntax", "bad fiber token '" + token + "'");
}

std::string print_fiber(const FiberClass& f) {
  std::ostringstream out;
  switch (f.kind) {
    case FiberKind::A0: return "A0";
    case FiberKind::A0s: return "A0s";
    case FiberKind::A0ss: return "A0ss";
    case FiberKind::A1s: return "A1s";
    case FiberKind::A2s: return "A2s";
    case FiberKind::A: out << 'A' << f.p; break;
    case FiberKind::D: out << 'D' << f.p; break;
    case FiberKind::E: out << 'E' << f.p; break;
    case FiberKind::J: out << 'J' << f.r << ',' << f.p; break;
  }
  return out.str();
}

Braid local_monodromy(int i, const FiberClass& f) {
  if (i < 1 || i > 3) throw Error("BadParameters", "angle index must be 1..3");
  Braid full = (Braid::sigma(1) * Braid::sigma(2)).pow(3);
  switch (f.kind) {
    case FiberKind::A0: return Braid();
    case FiberKind::A0s: return Braid::sigma(i);
    case FiberKind::A: return Braid::sigma(i, f.p + 1);
    case FiberKind::D: return full * Braid::sigma(i, f.p - 4);
    case FiberKind::J: return full.pow(f.r) * Braid::sigma(i, f.p);
    default: throw Error("UnsupportedFiber", print_fiber(f));
  }
}

InfinityClass InfinityClass::proper(int p, int side) { return {InfKind::Proper, p, 0, side, nullptr}; }
InfinityClass InfinityClass::smooth(int p, int q, int side) { return {InfKind::Smooth, p, q, side, nullptr}; }
InfinityClass InfinityClass::dbl(int p, int q, int side) { return {InfKind::Double, p, q, side, nullptr}; }
InfinityClass InfinityClass::twobranch(int p, int q, int side) { return {InfKind::TwoBranch, p, q, side, nullptr}; }
InfinityClass InfinityClass::oddtan(int p, int side) { return {InfKind::OddTan, p, 0, side, nullptr}; }
InfinityClass InfinityClass::triple(InfinityClass inner) {
  InfinityClass c;
  c.kind = InfKind::Triple;
  c.side = inner.side;
  c.inner = std::make_shared<InfinityClass>(std::move(inner));
  return c;
}

namespace {

Word gen_pair(int side) {  // a_i a_{i+1} for the side's angle
  return side == 1 ? Word({1, 2}) : Word({2, 3});
}

}  // namespace

LocalData local_slope(const InfinityClass& c) {
  if (c.kind == InfKind::Triple) {
    if (!c.inner) throw Error("BadParameters", "triple with no inner class");
    return local_slope(*c.inner);
  }
  if (c.side != 1 && c.side != 2) throw Error("BadParameters", "side must be 12 or 23");
  int i = c.side;
  LocalData d;
  switch (c.kind) {
    case InfKind::Proper:
      if (c.p < 0) throw Error("BadParameters", "proper(p) needs p >= 0");
      d.monodromy = Braid::sigma(i, c.p + 1);
      break;
    case InfKind::Smooth:
      if (c.p < -1 || c.q < 1) throw Error("BadParameters", "smooth(p,q) needs p >= -1, q >= 1");
      d.monodromy = Braid::sigma(i, c.p + 2 * c.q + 1);
      d.slope = gen_pair(i).pow(c.q);
      break;
    case InfKind::Double:
      if (c.q < 1 || 2 * c.q > c.p + 1)
        throw Error("BadParameters", "double(p,q) needs 1 <= q <= (p+1)/2");
      d.monodromy = Braid::sigma(i, c.p - 2 * c.q + 1);
      d.slope = Word::gen(i == 1 ? 3 : 1).pow(c.q);
      break;
    case InfKind::TwoBranch:
      if (c.p < 1 || c.q < 1) throw Error("BadParameters", "twobranch(p,q) needs p, q >= 1");
      d.monodromy = Braid::sigma(i, 2 * c.q);
      d.slope = gen_pair(i).pow(c.q) * Word::gen(i).pow(c.p);
      break;
    case InfKind::OddTan:
      if (c.p < 0) throw Error("BadParameters", "oddtan(p) needs p >= 0");
      if (i != 1) throw Error("BadParameters", "oddtan is defined at angle 12");
      d.monodromy = Braid::sigma(1) * Braid::sigma(2) * Braid::sigma(1);
      d.slope = Word::gen(1) * Word::gen(2).pow(c.p + 1);
      break;
    case InfKind::Triple:
      break;  // handled above
  }
  for (int j = 1; j <= 3; ++j) {
    Word rel = act(d.monodromy, Word::gen(j));
    rel.append(d.slope);
    rel.append(Word::gen(j).inverse());
    rel.append(d.slope.inverse());
    if (!rel.trivial()) d.relators.push_back(rel);
  }
  return d;
}

InfinityClass parse_infinity(const std::string& token) {
  std::string body = token;
  int side = 0;
  auto at = token.rfind('@');
  if (at != std::string::npos) {
    std::string s = token.substr(at + 1);
    if (s == "12")
      side = 1;
    else if (s == "23")
      side = 2;
    else
      throw Error("Syntax", "bad side suffix in '" + token + "'");
    body = token.substr(0, at);
  }
  auto open = body.find('(');
  if (open == std::string::npos || body.back() != ')')
    throw Error("Syntax", "bad infinity token '" + token + "'");
  std::string name = body.substr(0, open);
  std::string args = body.substr(open + 1, body.size() - open - 2);
  if (name == "triple") {
    InfinityClass inner = parse_infinity(args + (side == 2 ? "@23" : "@12"));
    return InfinityClass::triple(inner);
  }
  std::vector<int> vals;
  std::istringstream in(args);
  std::string piece;
  while (std::getline(in, piece, ',')) {
    try {
      std::size_t used = 0;
      vals.push_back(std::stoi(piece, &used));
      if (used != piece.size()) throw std::invalid_argument(piece);
    } catch (const std::exception&) {
      throw Error("Syntax", "bad parameter in '" + token + "'");
    }
  }
  if (side == 0) side = 1;
  if (name == "proper" && vals.size() == 1) return InfinityClass::proper(vals[0], side);
  if (name == "smooth" && vals.size() == 2) return InfinityClass::smooth(vals[0], vals[1], side);
  if (name == "double" && vals.size() == 2) return InfinityClass::dbl(vals[0], vals[1], side);
  if (name == "twobranch" && vals.size() == 2) return InfinityClass::twobranch(vals[0], vals[1], side);
  if (name == "oddtan" && vals.size() == 1) return InfinityClass::oddtan(vals[0], side);
  throw Error("Syntax", "bad infinity token '" + token + "'");
}

std::string print_infinity(const InfinityClass& c) {
  std::ostringstream out;
  switch (c.kind) {
    case InfKind::Proper: out << "proper(" << c.p << ')'; break;
    case InfKind::Smooth: out << "smooth(" << c.p << ',' << c.q << ')'; break;
    case InfKind::Double: out << "double(" << c.p << ',' << c.q << ')'; break;
    case InfKind::TwoBranch: out << "twobranch(" << c.p << ',' << c.q << ')'; break;
    case InfKind::OddTan: out << "oddtan(" << c.p << ')'; break;
    case InfKind::Triple: {
      std::string in = print_infinity(*c.inner);
      out << "triple(" << in.substr(0, in.rfind('@')) << ')';
      break;
    }
  }
  out << (c.side == 2 ? "@23" : "@12");
  return out.str();
}

Word bracket_relator(const Word& a, const Word& b, int m) {
  if (m < 0) throw Error("BadParameters", "bracket index must be >= 0");
  int k = m / 2;
  Word ab = a * b, ba = b * a;
  Word left = ab.pow(k), right = ba.pow(k);
  if (m % 2 == 1) {
    left.append(a);
    right.append(b);
  }
  return left * right.inverse();
}

Word region_relator(AngleKind angle, int p) {
  if (p < 1) throw Error("BadParameters", "region relator needs p >= 1");
  switch (angle) {
    case AngleKind::A12: return bracket_relator(Word::gen(1), Word::gen(2), p);
    case AngleKind::A23: return bracket_relator(Word::gen(2), Word::gen(3), p);
    case AngleKind::A31: return bracket_relator(Word::gen(1), delta_word(), p);
  }
  throw Error("BadParameters", "unknown angle");
}

}  // namespace trigpi1
