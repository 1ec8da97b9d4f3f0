// orthokit/term.hpp — the lattice term language.
//
// Terms are immutable trees over the signature {0, 1, ', |, &, ->i, <->i, ==i}
// with named variables.  The derived connectives ->i, <->i and ==i (i = 0..5)
// are kept as first-class nodes so reports can show them as written; expand()
// rewrites a term into the primitive signature {0, 1, ', |, &}.
//
// ASCII surface syntax (one grammar shared by the CLI and all file formats):
//
//   term   := impl ( "==" digit impl )*          (left-assoc)
//   impl   := join ( ("->" | "<->") digit join )*  (left-assoc)
//   join   := meet ( "|" meet )*
//   meet   := atom ( "&" atom )*
//   atom   := ident | "0" | "1" | "(" term ")" | atom "'"
//   digit  := "0".."5"
//
// Precedence, tightest first: '  &  |  ->i/<->i  ==i.
// An equation is "t1 = t2" or a bare "t" meaning t = 1; a quasi-equation is
// "e1 , e2 , ... => e".

#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace orthokit {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " (at offset " + std::to_string(position) + ")"),
        pos_(position) {}
  std::size_t position() const noexcept { return pos_; }

 private:
  std::size_t pos_;
};

enum class TermKind : std::uint8_t { Var, Zero, One, Comp, Join, Meet, Impl, BiImpl, Ident };

struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Term {
  TermKind kind;
  int index = -1;     // connective index 0..5, Impl/BiImpl/Ident only
  std::string name;   // Var only
  TermPtr left;       // unary child for Comp
  TermPtr right;

  static TermPtr var(std::string name);
  static TermPtr zero();
  static TermPtr one();
  static TermPtr comp(TermPtr child);
  static TermPtr join(TermPtr l, TermPtr r);
  static TermPtr meet(TermPtr l, TermPtr r);
  static TermPtr impl(int index, TermPtr l, TermPtr r);
  static TermPtr biimpl(int index, TermPtr l, TermPtr r);
  static TermPtr ident(int index, TermPtr l, TermPtr r);
};

bool term_equal(const Term& a, const Term& b);
inline bool term_equal(const TermPtr& a, const TermPtr& b) { return term_equal(*a, *b); }

/// Variable names of t, lexically sorted.
std::set<std::string> variables(const Term& t);

TermPtr parse_term(std::string_view text);
std::string print_term(const Term& t);
inline std::string print_term(const TermPtr& t) { return print_term(*t); }

/// Rewrites every derived connective into the primitive signature.
/// The result contains only Var/Zero/One/Comp/Join/Meet nodes and evaluates
/// identically under every valuation of every ortholattice.
TermPtr expand(const TermPtr& t);

/// Simultaneous substitution; variables absent from the bindings are kept.
TermPtr substitute(const TermPtr& t, const std::map<std::string, TermPtr>& bindings);

struct Equation {
  TermPtr lhs;
  TermPtr rhs;
  bool unit = false;  // written as the bare "t" shorthand for t = 1
};

struct QuasiEquation {
  std::vector<Equation> hypotheses;  // may be empty
  Equation conclusion;
};

Equation parse_equation(std::string_view text);
QuasiEquation parse_quasi(std::string_view text);
std::string print_equation(const Equation& e);
std::string print_quasi(const QuasiEquation& q);

std::set<std::string> variables(const Equation& e);
std::set<std::string> variables(const QuasiEquation& q);

}  // namespace orthokit
