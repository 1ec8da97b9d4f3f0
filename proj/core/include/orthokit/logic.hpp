// orthokit/logic.hpp — Hilbert-style proof checking for the quantum
// propositional system QL (axioms QL1-QL6, rules QLR1-QLR5) and the classical
// system CL (axioms CL1-CL4, modus ponens CLR1), plus the structural morphism
// from formulas into lattice terms.
//
// Wff surface syntax mirrors the term grammar with uppercase variables and
// prefix ~ for negation.
//
// Derivation script format (line-oriented, '#' starts a comment):
//
//   system QL i=5            (or: system CL)
//   premise <wff>            (repeatable; premises are numbered 1, 2, ...)
//   1 <wff> axiom QL1 A:=<wff> B:=<wff>
//   2 <wff> premise 1
//   3 <wff> rule QLR2 1 2
//   4 <wff> rule QLR3 fwd 3  (bidirectional rules take fwd or rev)
//
// Rule sources are previous line numbers.  Lines are numbered consecutively
// from 1 and every line must verify; the last line is the derived formula.

#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "orthokit/checker.hpp"
#include "orthokit/term.hpp"

namespace orthokit {

enum class WffKind : std::uint8_t { Var, Neg, Or, And, Impl, BiImpl, Ident };

struct Wff;
using WffPtr = std::shared_ptr<const Wff>;

struct Wff {
  WffKind kind;
  int index = -1;    // 0..5 for Impl/BiImpl/Ident
  std::string name;  // Var only
  WffPtr left;       // unary child for Neg
  WffPtr right;

  static WffPtr var(std::string name);
  static WffPtr neg(WffPtr child);
  static WffPtr disj(WffPtr l, WffPtr r);
  static WffPtr conj(WffPtr l, WffPtr r);
  static WffPtr impl(int index, WffPtr l, WffPtr r);
  static WffPtr biimpl(int index, WffPtr l, WffPtr r);
  static WffPtr ident(int index, WffPtr l, WffPtr r);
};

bool wff_equal(const Wff& a, const Wff& b);
inline bool wff_equal(const WffPtr& a, const WffPtr& b) { return wff_equal(*a, *b); }

WffPtr parse_wff(std::string_view text);
std::string print_wff(const Wff& w);
inline std::string print_wff(const WffPtr& w) { return print_wff(*w); }

WffPtr substitute(const WffPtr& w, const std::map<std::string, WffPtr>& bindings);

/// Structural map into the term language: ~ -> ', | -> |, & -> &, ->i/<->i/==i
/// kept with their indices; propositional variables become lattice variables
/// of the same name.
TermPtr map_to_lattice(const Wff& w);
inline TermPtr map_to_lattice(const WffPtr& w) { return map_to_lattice(*w); }

enum class System : std::uint8_t { QL, CL };

struct Justification {
  enum class Kind : std::uint8_t { Axiom, Premise, Rule };
  enum class Direction : std::uint8_t { None, Fwd, Rev };

  Kind kind = Kind::Axiom;
  std::string name;                     // axiom or rule name
  std::map<std::string, WffPtr> subst;  // axiom instances
  int premise = 0;                      // 1-based premise index
  Direction direction = Direction::None;
  std::vector<int> sources;             // rule source line numbers
};

struct DerivationLine {
  int number = 0;
  WffPtr formula;
  Justification just;
};

struct Derivation {
  System system = System::QL;
  int ident_index = 5;  // the fixed i of a QL derivation
  std::vector<WffPtr> premises;
  std::vector<DerivationLine> lines;
};

Derivation parse_derivation(std::string_view text);

struct VerifyResult {
  bool accepted = false;
  int bad_line = 0;    // first failing line when rejected
  std::string reason;
};

VerifyResult verify_derivation(const Derivation& d);

/// Axiom schemata over the letters A, B, C.
WffPtr ql_axiom(std::string_view name, int ident_index);  // QL1..QL6
WffPtr cl_axiom(std::string_view name);                   // CL1..CL4
/// The CL theorem CL5: A|(B&C) ==i (A|B)&(A|C).
WffPtr cl5(int ident_index);

/// checkEquation(l, map_to_lattice(w) = 1) for each formula.
std::vector<CheckReport> soundness_check(const std::vector<WffPtr>& wffs,
                                         const FiniteOrthoLattice& l,
                                         const CheckOptions& options = {});

}  // namespace orthokit
