#include "orthokit/lattice.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace orthokit {

int FiniteOrthoLattice::element(std::string_view label) const {
  for (int e = 0; e < n_; ++e)
    if (labels_[static_cast<std::size_t>(e)] == label) return e;
  return -1;
}

bool FiniteOrthoLattice::covers(int p, int q) const {
  if (p == q || !leq(p, q)) return false;
  for (int r = 0; r < n_; ++r)
    if (r != p && r != q && leq(p, r) && leq(r, q)) return false;
  return true;
}

std::vector<std::pair<int, int>> FiniteOrthoLattice::cover_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int p = 0; p < n_; ++p)
    for (int q = 0; q < n_; ++q)
      if (covers(p, q)) out.emplace_back(p, q);
  return out;
}

FiniteOrthoLattice FiniteOrthoLattice::rename(std::string new_name) const {
  FiniteOrthoLattice l = *this;
  l.name_ = std::move(new_name);
  return l;
}

namespace {

bool valid_label(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '\'')
      return false;
  return true;
}

[[noreturn]] void fail(const std::string& msg) { throw LatticeError(msg); }

}  // namespace

FiniteOrthoLattice FiniteOrthoLattice::from_tables(Tables t) {
  const int n = static_cast<int>(t.labels.size());
  if (n < 2) fail("not a lattice: needs at least 2 elements");
  if (n > kMaxLatticeSize)
    fail("lattice too large: " + std::to_string(n) + " elements exceeds the " +
         std::to_string(kMaxLatticeSize) + " cap");
  const std::size_t nn = static_cast<std::size_t>(n);
  if (t.leq.size() != nn * nn || t.join.size() != nn * nn || t.meet.size() != nn * nn ||
      t.ortho.size() != nn)
    fail("table sizes inconsistent with element count");

  std::set<std::string> seen;
  for (const auto& lab : t.labels) {
    if (!valid_label(lab)) fail("invalid element label '" + lab + "'");
    if (!seen.insert(lab).second) fail("duplicate element label '" + lab + "'");
  }

  auto leq = [&](int a, int b) { return t.leq[static_cast<std::size_t>(a) * n + b] != 0; };
  auto lab = [&](int a) { return t.labels[static_cast<std::size_t>(a)]; };

  // Partial order.
  for (int a = 0; a < n; ++a) {
    if (!leq(a, a)) fail("order not reflexive at " + lab(a));
    for (int b = 0; b < n; ++b) {
      if (a != b && leq(a, b) && leq(b, a))
        fail("order not antisymmetric on (" + lab(a) + ", " + lab(b) + ")");
      for (int c = 0; c < n; ++c)
        if (leq(a, b) && leq(b, c) && !leq(a, c))
          fail("order not transitive via (" + lab(a) + ", " + lab(b) + ", " + lab(c) + ")");
    }
  }

  // Bounds, labeled 0 and 1.
  int bottom = -1, top = -1;
  for (int a = 0; a < n; ++a) {
    bool is_bot = true, is_top = true;
    for (int b = 0; b < n; ++b) {
      is_bot = is_bot && leq(a, b);
      is_top = is_top && leq(b, a);
    }
    if (is_bot) bottom = a;
    if (is_top) top = a;
  }
  if (bottom < 0 || top < 0) fail("not a lattice: missing global bottom or top");
  if (lab(bottom) != "0") fail("bottom element must be labeled 0, got " + lab(bottom));
  if (lab(top) != "1") fail("top element must be labeled 1, got " + lab(top));

  // join/meet agree with the order as unique lub/glb.
  const bool full = n <= 1024;  // cubic pass; products of validated lattices skip it above
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      int j = t.join[static_cast<std::size_t>(a) * n + b];
      int m = t.meet[static_cast<std::size_t>(a) * n + b];
      if (j < 0 || j >= n || m < 0 || m >= n) fail("join/meet table entry out of range");
      if (!leq(a, j) || !leq(b, j))
        fail("not a lattice: join(" + lab(a) + ", " + lab(b) + ") is not an upper bound");
      if (!leq(m, a) || !leq(m, b))
        fail("not a lattice: meet(" + lab(a) + ", " + lab(b) + ") is not a lower bound");
      if (full) {
        for (int c = 0; c < n; ++c) {
          if (leq(a, c) && leq(b, c) && !leq(j, c))
            fail("not a lattice: (" + lab(a) + ", " + lab(b) + ") has no least upper bound");
          if (leq(c, a) && leq(c, b) && !leq(c, m))
            fail("not a lattice: (" + lab(a) + ", " + lab(b) + ") has no greatest lower bound");
        }
      }
    }
  }

  // Orthocomplementation: involutive, order-reversing, complement-forming,
  // and De Morgan (L6).
  for (int a = 0; a < n; ++a) {
    int oa = t.ortho[static_cast<std::size_t>(a)];
    if (oa < 0 || oa >= n) fail("ortho invalid: entry out of range at " + lab(a));
    if (t.ortho[static_cast<std::size_t>(oa)] != a)
      fail("ortho invalid: not involutive at " + lab(a));
    if (t.join[static_cast<std::size_t>(a) * n + oa] != top)
      fail("ortho invalid: " + lab(a) + " | " + lab(oa) + " = " +
           lab(t.join[static_cast<std::size_t>(a) * n + oa]) + ", not 1");
    if (t.meet[static_cast<std::size_t>(a) * n + oa] != bottom)
      fail("ortho invalid: " + lab(a) + " & " + lab(oa) + " = " +
           lab(t.meet[static_cast<std::size_t>(a) * n + oa]) + ", not 0");
    for (int b = 0; b < n; ++b) {
      int ob = t.ortho[static_cast<std::size_t>(b)];
      if (leq(a, b) && !leq(ob, oa))
        fail("ortho invalid: not order-reversing on (" + lab(a) + ", " + lab(b) + ")");
      int demorgan = t.ortho[static_cast<std::size_t>(
          t.join[static_cast<std::size_t>(oa) * n + ob])];
      if (t.meet[static_cast<std::size_t>(a) * n + b] != demorgan)
        fail("ortho invalid: De Morgan fails on (" + lab(a) + ", " + lab(b) + ")");
    }
  }

  FiniteOrthoLattice l;
  l.name_ = std::move(t.name);
  l.labels_ = std::move(t.labels);
  l.n_ = n;
  l.leq_ = std::move(t.leq);
  l.join_ = std::move(t.join);
  l.meet_ = std::move(t.meet);
  l.ortho_ = std::move(t.ortho);
  l.bottom_ = bottom;
  l.top_ = top;
  return l;
}

FiniteOrthoLattice build_lattice(const LatticeSpec& spec) {
  const int n = static_cast<int>(spec.elements.size());
  if (n < 2) fail("not a lattice: needs at least 2 elements");
  if (n > kMaxLatticeSize)
    fail("lattice too large: " + std::to_string(n) + " elements exceeds the " +
         std::to_string(kMaxLatticeSize) + " cap");

  std::map<std::string, int> idx;
  for (int e = 0; e < n; ++e) {
    const std::string& lab = spec.elements[static_cast<std::size_t>(e)];
    if (!valid_label(lab)) fail("invalid element label '" + lab + "'");
    if (!idx.emplace(lab, e).second) fail("duplicate element label '" + lab + "'");
  }
  if (!idx.count("0") || !idx.count("1")) fail("elements must include the bounds 0 and 1");

  auto at = [&](const std::string& lab) {
    auto it = idx.find(lab);
    if (it == idx.end()) fail("unknown element '" + lab + "'");
    return it->second;
  };

  const std::size_t nn = static_cast<std::size_t>(n);
  std::vector<std::vector<int>> up(nn);
  for (const auto& [p, q] : spec.covers) {
    if (p == q) fail("cover " + p + "<" + q + " is reflexive");
    up[static_cast<std::size_t>(at(p))].push_back(at(q));
  }

  // leq = reflexive-transitive closure of the covers; cycles surface as
  // antisymmetry failures in validation.
  std::vector<std::uint8_t> leq(nn * nn, 0);
  for (int a = 0; a < n; ++a) {
    std::vector<int> stack{a};
    std::vector<std::uint8_t> seen(nn, 0);
    seen[static_cast<std::size_t>(a)] = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      leq[static_cast<std::size_t>(a) * n + u] = 1;
      for (int v : up[static_cast<std::size_t>(u)])
        if (!seen[static_cast<std::size_t>(v)]) {
          seen[static_cast<std::size_t>(v)] = 1;
          stack.push_back(v);
        }
    }
    if (!leq[static_cast<std::size_t>(a) * n + a]) fail("cover relation has a cycle");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b && leq[static_cast<std::size_t>(a) * n + b] &&
          leq[static_cast<std::size_t>(b) * n + a])
        fail("cover relation has a cycle through " + spec.elements[static_cast<std::size_t>(a)]);

  // join/meet from the order.
  std::vector<std::int32_t> join(nn * nn, -1), meet(nn * nn, -1);
  auto le = [&](int a, int b) { return leq[static_cast<std::size_t>(a) * n + b] != 0; };
  std::vector<int> cand;
  for (int a = 0; a < n; ++a) {
    for (int b = a; b < n; ++b) {
      cand.clear();
      for (int c = 0; c < n; ++c)
        if (le(a, c) && le(b, c)) cand.push_back(c);
      int lub = -1;
      for (int c : cand) {
        bool least = true;
        for (int d : cand)
          if (!le(c, d)) { least = false; break; }
        if (least) { lub = c; break; }
      }
      if (lub < 0)
        fail("not a lattice: (" + spec.elements[static_cast<std::size_t>(a)] + ", " +
             spec.elements[static_cast<std::size_t>(b)] + ") has no least upper bound");
      cand.clear();
      for (int c = 0; c < n; ++c)
        if (le(c, a) && le(c, b)) cand.push_back(c);
      int glb = -1;
      for (int c : cand) {
        bool greatest = true;
        for (int d : cand)
          if (!le(d, c)) { greatest = false; break; }
        if (greatest) { glb = c; break; }
      }
      if (glb < 0)
        fail("not a lattice: (" + spec.elements[static_cast<std::size_t>(a)] + ", " +
             spec.elements[static_cast<std::size_t>(b)] + ") has no greatest lower bound");
      join[static_cast<std::size_t>(a) * n + b] = join[static_cast<std::size_t>(b) * n + a] = lub;
      meet[static_cast<std::size_t>(a) * n + b] = meet[static_cast<std::size_t>(b) * n + a] = glb;
    }
  }

  std::vector<std::int32_t> ortho(nn, -1);
  auto set_ortho = [&](int a, int b) {
    if ((ortho[static_cast<std::size_t>(a)] != -1 && ortho[static_cast<std::size_t>(a)] != b) ||
        (ortho[static_cast<std::size_t>(b)] != -1 && ortho[static_cast<std::size_t>(b)] != a))
      fail("ortho invalid: conflicting pairs at " + spec.elements[static_cast<std::size_t>(a)]);
    ortho[static_cast<std::size_t>(a)] = b;
    ortho[static_cast<std::size_t>(b)] = a;
  };
  set_ortho(at("0"), at("1"));
  for (const auto& [p, q] : spec.ortho) set_ortho(at(p), at(q));
  for (int a = 0; a < n; ++a)
    if (ortho[static_cast<std::size_t>(a)] < 0)
      fail("ortho invalid: no complement assigned to " +
           spec.elements[static_cast<std::size_t>(a)]);

  FiniteOrthoLattice::Tables t;
  t.name = spec.name;
  t.labels = spec.elements;
  t.leq = std::move(leq);
  t.join = std::move(join);
  t.meet = std::move(meet);
  t.ortho = std::move(ortho);
  return FiniteOrthoLattice::from_tables(std::move(t));
}

FiniteOrthoLattice product(const FiniteOrthoLattice& l1, const FiniteOrthoLattice& l2,
                           std::string name) {
  const int n1 = l1.size(), n2 = l2.size();
  if (n1 < 2 || n2 < 2) fail("product factors need at least 2 elements");
  if (n1 > kMaxLatticeSize / n2)
    fail("lattice too large: " + std::to_string(n1) + "*" + std::to_string(n2) +
         " elements exceeds the " + std::to_string(kMaxLatticeSize) + " cap");
  const int n = n1 * n2;
  const std::size_t nn = static_cast<std::size_t>(n);

  FiniteOrthoLattice::Tables t;
  t.name = name.empty() ? l1.name() + "x" + l2.name() : std::move(name);
  t.labels.reserve(nn);
  for (int i = 0; i < n1; ++i)
    for (int j = 0; j < n2; ++j) {
      if (i == l1.bottom() && j == l2.bottom()) t.labels.push_back("0");
      else if (i == l1.top() && j == l2.top()) t.labels.push_back("1");
      else t.labels.push_back(l1.label(i) + "_" + l2.label(j));
    }
  t.leq.resize(nn * nn);
  t.join.resize(nn * nn);
  t.meet.resize(nn * nn);
  t.ortho.resize(nn);
  for (int a = 0; a < n; ++a) {
    int ai = a / n2, aj = a % n2;
    t.ortho[static_cast<std::size_t>(a)] = l1.ortho(ai) * n2 + l2.ortho(aj);
    for (int b = 0; b < n; ++b) {
      int bi = b / n2, bj = b % n2;
      std::size_t k = static_cast<std::size_t>(a) * n + b;
      t.leq[k] = l1.leq(ai, bi) && l2.leq(aj, bj) ? 1 : 0;
      t.join[k] = l1.join(ai, bi) * n2 + l2.join(aj, bj);
      t.meet[k] = l1.meet(ai, bi) * n2 + l2.meet(aj, bj);
    }
  }
  return FiniteOrthoLattice::from_tables(std::move(t));
}

// ── isomorphism ──────────────────────────────────────────────────────────
//
// Colors are refined iteratively from order/ortho invariants; the search then
// backtracks over color-compatible assignments.

namespace {

std::vector<long> refine_colors(const FiniteOrthoLattice& l) {
  const int n = l.size();
  std::vector<long> color(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) {
    long down = 0, up = 0;
    for (int b = 0; b < n; ++b) {
      if (l.leq(b, a)) ++down;
      if (l.leq(a, b)) ++up;
    }
    color[static_cast<std::size_t>(a)] = down * 10000 + up;
  }
  for (int round = 0; round < n; ++round) {
    // signature: own color, sorted colors below, color of the complement
    std::vector<std::pair<std::vector<long>, int>> sigs(static_cast<std::size_t>(n));
    for (int a = 0; a < n; ++a) {
      std::vector<long> s;
      s.push_back(color[static_cast<std::size_t>(a)]);
      s.push_back(color[static_cast<std::size_t>(l.ortho(a))] + 1000000);
      std::vector<long> below;
      for (int b = 0; b < n; ++b)
        if (b != a && l.leq(b, a)) below.push_back(color[static_cast<std::size_t>(b)]);
      std::sort(below.begin(), below.end());
      s.insert(s.end(), below.begin(), below.end());
      sigs[static_cast<std::size_t>(a)] = {std::move(s), a};
    }
    std::vector<std::pair<std::vector<long>, int>> sorted = sigs;
    std::sort(sorted.begin(), sorted.end());
    std::vector<long> next(static_cast<std::size_t>(n));
    long c = 0;
    for (std::size_t k = 0; k < sorted.size(); ++k) {
      if (k > 0 && sorted[k].first != sorted[k - 1].first) ++c;
      next[static_cast<std::size_t>(sorted[k].second)] = c;
    }
    if (next == color) break;
    color = std::move(next);
  }
  return color;
}

bool extend_iso(const FiniteOrthoLattice& l1, const FiniteOrthoLattice& l2,
                const std::vector<long>& c1, const std::vector<long>& c2,
                std::vector<int>& map, std::vector<std::uint8_t>& used, int a) {
  const int n = l1.size();
  if (a == n) return true;
  for (int b = 0; b < n; ++b) {
    if (used[static_cast<std::size_t>(b)]) continue;
    if (c1[static_cast<std::size_t>(a)] != c2[static_cast<std::size_t>(b)]) continue;
    bool ok = true;
    for (int p = 0; p < a && ok; ++p) {
      int q = map[static_cast<std::size_t>(p)];
      ok = l1.leq(a, p) == l2.leq(b, q) && l1.leq(p, a) == l2.leq(q, b);
      if (ok && l1.ortho(a) == p) ok = l2.ortho(b) == q;
      if (ok && l1.ortho(p) == a) ok = l2.ortho(q) == b;
    }
    if (!ok) continue;
    map[static_cast<std::size_t>(a)] = b;
    used[static_cast<std::size_t>(b)] = 1;
    if (extend_iso(l1, l2, c1, c2, map, used, a + 1)) return true;
    used[static_cast<std::size_t>(b)] = 0;
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> isomorphism(const FiniteOrthoLattice& l1,
                                            const FiniteOrthoLattice& l2) {
  if (l1.size() != l2.size()) return std::nullopt;
  const int n = l1.size();
  std::vector<long> c1 = refine_colors(l1), c2 = refine_colors(l2);
  std::vector<long> s1 = c1, s2 = c2;
  std::sort(s1.begin(), s1.end());
  std::sort(s2.begin(), s2.end());
  if (s1 != s2) return std::nullopt;
  std::vector<int> map(static_cast<std::size_t>(n), -1);
  std::vector<std::uint8_t> used(static_cast<std::size_t>(n), 0);
  if (extend_iso(l1, l2, c1, c2, map, used, 0)) return map;
  return std::nullopt;
}

bool isomorphic(const FiniteOrthoLattice& l1, const FiniteOrthoLattice& l2) {
  return isomorphism(l1, l2).has_value();
}

std::string canonical_key(const FiniteOrthoLattice& l) {
  // Every OL isomorphism maps complement pairs to complement pairs, so the
  // lexicographically least leq matrix over all pair arrangements (order of
  // pairs, orientation within each pair; element order 0, m1, m1', ..., 1)
  // is a complete invariant.  k pairs cost k! * 2^k renderings.
  const int n = l.size();
  if (n > 18) throw LatticeError("canonical_key supports lattices up to 18 elements");
  std::vector<std::pair<int, int>> pairs;
  std::vector<std::uint8_t> seen(static_cast<std::size_t>(n), 0);
  for (int a = 0; a < n; ++a) {
    if (a == l.bottom() || a == l.top() || seen[static_cast<std::size_t>(a)]) continue;
    seen[static_cast<std::size_t>(a)] = 1;
    seen[static_cast<std::size_t>(l.ortho(a))] = 1;
    pairs.emplace_back(a, l.ortho(a));
  }
  const int k = static_cast<int>(pairs.size());
  std::vector<int> perm(static_cast<std::size_t>(k));
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  std::vector<int> ord;
  std::string key;
  do {
    for (unsigned flips = 0; flips < (1u << k); ++flips) {
      ord.clear();
      ord.push_back(l.bottom());
      for (int t = 0; t < k; ++t) {
        auto [u, v] = pairs[static_cast<std::size_t>(perm[static_cast<std::size_t>(t)])];
        if (flips >> t & 1) std::swap(u, v);
        ord.push_back(u);
        ord.push_back(v);
      }
      ord.push_back(l.top());
      key.clear();
      for (int a : ord)
        for (int b : ord) key += l.leq(a, b) ? '1' : '0';
      if (best.empty() || key < best) best = key;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::to_string(n) + ":" + best;
}

}  // namespace orthokit
