// orthokit/checker.hpp — exhaustive valuation semantics over finite
// ortholattices: term evaluation, equation and quasi-equation checking,
// hierarchy classification and the O6-filtered congruence condition.
//
// Valuations are enumerated deterministically: variables lexically sorted,
// the first variable varying slowest, elements in lattice order.  The first
// countermodel in that order is the one reported, independent of the number
// of worker threads.

#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "orthokit/lattice.hpp"
#include "orthokit/term.hpp"

namespace orthokit {

struct CheckOptions {
  std::uint64_t budget = 10'000'000;  // max valuations per check
  int jobs = 1;                       // worker threads for the valuation scan
};

class BudgetError : public std::runtime_error {
 public:
  BudgetError(std::uint64_t required, std::uint64_t budget)
      : std::runtime_error("valuation budget exceeded: check requires " +
                           std::to_string(required) + " valuations, budget is " +
                           std::to_string(budget)),
        required_(required) {}
  std::uint64_t required() const noexcept { return required_; }

 private:
  std::uint64_t required_;
};

/// Total map from a term's variables to elements of one lattice.
struct Valuation {
  const FiniteOrthoLattice* lattice = nullptr;
  std::map<std::string, int> values;
};

struct Countermodel {
  std::string lattice;
  std::vector<std::pair<std::string, std::string>> valuation;  // var = element label
  std::string lhs_value;
  std::string rhs_value;
};

struct CheckReport {
  bool holds = false;
  std::optional<Countermodel> countermodel;
  std::uint64_t examined = 0;
};

/// Structural evaluation of expand(t) through the lattice tables.
/// Throws std::invalid_argument on a variable missing from the valuation.
int eval(const FiniteOrthoLattice& l, const std::map<std::string, int>& valuation,
         const Term& t);
int eval(const Valuation& v, const Term& t);

/// Holds iff the equation is satisfied under every valuation; otherwise the
/// first countermodel in enumeration order.  Throws BudgetError when
/// |l|^#vars exceeds options.budget.
CheckReport check_equation(const FiniteOrthoLattice& l, const Equation& e,
                           const CheckOptions& options = {});

/// Holds iff every valuation satisfying all hypotheses satisfies the
/// conclusion.
CheckReport check_quasi(const FiniteOrthoLattice& l, const QuasiEquation& q,
                        const CheckOptions& options = {});

/// Holds iff every valuation mapping all premises to 1 maps A and B to equal
/// elements (the semantic half of the paper's filtered congruence).
CheckReport congruence_sem_check(const TermPtr& a, const TermPtr& b,
                                 const std::vector<TermPtr>& premises,
                                 const FiniteOrthoLattice& l,
                                 const CheckOptions& options = {});

/// Membership of one lattice in the equational classes OL/WOML/OML/WDL/DL,
/// with a countermodel attached to every failing flag.
struct ClassFlags {
  bool ol = false;
  bool woml = false;  // L8
  bool oml = false;   // orthomodularity
  bool wdl = false;   // L8 and L10 for every i
  bool dl = false;    // L9
  CheckReport l8;
  CheckReport om;
  CheckReport l9;
  std::array<CheckReport, 6> l10;
};

ClassFlags classify(const FiniteOrthoLattice& l, const CheckOptions& options = {});

/// "VERDICT <holds|fails> LATTICE <name> [WITNESS var=elem ...]"
std::string machine_line(const CheckReport& report, const FiniteOrthoLattice& l);

}  // namespace orthokit
