// The stock lattice atlas and the lattice file format.

#include <map>
#include <sstream>

#include "orthokit/lattice.hpp"

namespace orthokit {

namespace {

constexpr const char* kO6 = R"(lattice O6
elements: 0 x y y' x' 1
ortho: x:x' y:y'
covers: 0<x x<y y<1 0<y' y'<x' x'<1
)";

constexpr const char* kMO2 = R"(lattice MO2
elements: 0 p p' q q' 1
ortho: p:p' q:q'
covers: 0<p 0<p' 0<q 0<q' p<1 p'<1 q<1 q'<1
)";

// The drawing fixes all covers except the upper cover of v and the lower
// cover of v'; the unique ortho-symmetric completion adds v<1 and 0<v'.
constexpr const char* kM12 = R"(lattice M12
elements: 0 x w z' v' y y' v z w' x' 1
ortho: x:x' w:w' z:z' v:v' y:y'
covers: 0<x 0<w 0<z' 0<v' x<y x<v x<w' w<z w<x' z'<w' z'<y' y<z y'<x' v'<x' v<1 z<1 w'<1 x'<1
)";

constexpr const char* kF9G = R"(lattice F9G
elements: 0 x y z' z y' x' 1
ortho: x:x' y:y' z:z'
covers: 0<x 0<y 0<z' x<z y<z z'<y' z'<x' z<1 y'<1 x'<1
)";

constexpr const char* kF3B = R"(lattice F3B
elements: 0 x w z' y y' z w' x' 1
ortho: x:x' w:w' z:z' y:y'
covers: 0<x 0<w 0<z' x<y x<w' w<z w<x' z'<w' z'<y' y<z y'<x' z<1 w'<1 x'<1
)";

// Boolean 2^k: elements are bitmasks, labels the binary strings (MSB first),
// bounds relabeled 0 and 1.
FiniteOrthoLattice boolean_cube(int bits, std::string name) {
  const int n = 1 << bits;
  FiniteOrthoLattice::Tables t;
  t.name = std::move(name);
  for (int m = 0; m < n; ++m) {
    if (m == 0) t.labels.emplace_back("0");
    else if (m == n - 1) t.labels.emplace_back("1");
    else {
      std::string s(static_cast<std::size_t>(bits), '0');
      for (int k = 0; k < bits; ++k)
        if (m >> (bits - 1 - k) & 1) s[static_cast<std::size_t>(k)] = '1';
      t.labels.push_back(std::move(s));
    }
  }
  const std::size_t nn = static_cast<std::size_t>(n);
  t.leq.resize(nn * nn);
  t.join.resize(nn * nn);
  t.meet.resize(nn * nn);
  t.ortho.resize(nn);
  for (int a = 0; a < n; ++a) {
    t.ortho[static_cast<std::size_t>(a)] = (n - 1) ^ a;
    for (int b = 0; b < n; ++b) {
      std::size_t k = static_cast<std::size_t>(a) * n + b;
      t.leq[k] = (a & b) == a ? 1 : 0;
      t.join[k] = a | b;
      t.meet[k] = a & b;
    }
  }
  return FiniteOrthoLattice::from_tables(std::move(t));
}

std::map<std::string, FiniteOrthoLattice> build_atlas() {
  std::map<std::string, FiniteOrthoLattice> atlas;
  atlas.emplace("2", boolean_cube(1, "2"));
  atlas.emplace("2^2", boolean_cube(2, "2^2"));
  atlas.emplace("2^4", boolean_cube(4, "2^4"));
  atlas.emplace("MO2", build_lattice(parse_lattice_spec(kMO2)));
  atlas.emplace("O6", build_lattice(parse_lattice_spec(kO6)));
  atlas.emplace("M12", build_lattice(parse_lattice_spec(kM12)));
  atlas.emplace("F9G", build_lattice(parse_lattice_spec(kF9G)));
  atlas.emplace("F3B", build_lattice(parse_lattice_spec(kF3B)));
  atlas.emplace("F2", product(atlas.at("2^4"), atlas.at("MO2"), "F2"));
  return atlas;
}

const std::map<std::string, FiniteOrthoLattice>& atlas() {
  static const std::map<std::string, FiniteOrthoLattice> a = build_atlas();
  return a;
}

}  // namespace

const FiniteOrthoLattice& stock(std::string_view name) {
  const auto& a = atlas();
  auto it = a.find(std::string(name));
  if (it == a.end())
    throw LatticeError("unknown stock lattice '" + std::string(name) +
                       "' (known: 2 2^2 2^4 MO2 O6 M12 F9G F3B F2)");
  return it->second;
}

const std::vector<std::string>& stock_names() {
  static const std::vector<std::string> names = {"2",  "2^2", "2^4", "MO2", "O6",
                                                 "M12", "F9G", "F3B", "F2"};
  return names;
}

LatticeSpec parse_lattice_spec(std::string_view text) {
  LatticeSpec spec;
  std::istringstream in{std::string(text)};
  std::string line;
  bool saw_header = false;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;
    auto rest = [&] {
      std::vector<std::string> words;
      std::string w;
      while (ls >> w) words.push_back(w);
      return words;
    };
    if (head == "lattice") {
      if (!(ls >> spec.name) || spec.name.empty())
        throw LatticeError("line " + std::to_string(lineno) + ": lattice needs a name");
      saw_header = true;
    } else if (head == "elements:") {
      spec.elements = rest();
    } else if (head == "ortho:") {
      for (const std::string& w : rest()) {
        auto colon = w.find(':');
        if (colon == std::string::npos || colon == 0 || colon + 1 == w.size())
          throw LatticeError("line " + std::to_string(lineno) + ": bad ortho pair '" + w + "'");
        spec.ortho.emplace_back(w.substr(0, colon), w.substr(colon + 1));
      }
    } else if (head == "covers:") {
      for (const std::string& w : rest()) {
        auto lt = w.find('<');
        if (lt == std::string::npos || lt == 0 || lt + 1 == w.size())
          throw LatticeError("line " + std::to_string(lineno) + ": bad cover '" + w + "'");
        spec.covers.emplace_back(w.substr(0, lt), w.substr(lt + 1));
      }
    } else {
      throw LatticeError("line " + std::to_string(lineno) + ": unknown directive '" + head + "'");
    }
  }
  if (!saw_header) throw LatticeError("missing 'lattice <name>' header");
  if (spec.elements.empty()) throw LatticeError("missing 'elements:' line");
  return spec;
}

std::string serialize(const FiniteOrthoLattice& l) {
  std::string out = "lattice " + l.name() + "\nelements:";
  for (const auto& lab : l.labels()) out += " " + lab;
  out += "\northo:";
  for (int a = 0; a < l.size(); ++a) {
    int b = l.ortho(a);
    if (a < b && a != l.bottom() && a != l.top())
      out += " " + l.label(a) + ":" + l.label(b);
  }
  out += "\ncovers:";
  for (auto [p, q] : l.cover_pairs()) out += " " + l.label(p) + "<" + l.label(q);
  out += "\n";
  return out;
}

std::string to_dot(const FiniteOrthoLattice& l) {
  std::string out = "graph \"" + l.name() + "\" {\n  rankdir=BT;\n  node [shape=plaintext];\n";
  for (int e = 0; e < l.size(); ++e)
    out += "  n" + std::to_string(e) + " [label=\"" + l.label(e) + "\"];\n";
  for (auto [p, q] : l.cover_pairs())
    out += "  n" + std::to_string(p) + " -- n" + std::to_string(q) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace orthokit
