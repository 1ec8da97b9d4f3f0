// orthokit/beran.hpp — the 96-element free orthomodular lattice on two
// generators (F2 = 2^4 x MO2) and the canonical-form machinery built on it:
// any term in at most two variables reduces to one of 96 classes, and two
// 2-variable terms are equal in every OML iff they reduce to the same class.

#pragma once

#include <array>
#include <string>

#include "orthokit/checker.hpp"
#include "orthokit/lattice.hpp"
#include "orthokit/term.hpp"

namespace orthokit {

/// One of the 96 classes of 2-variable OML terms.  Ids are a fixed bijection
/// onto F2 elements: Boolean component as a 4-bit integer first, then MO2
/// component in order 0, p, p', q, q', 1 — id = 6*bits + mo2 + 1.
struct BeranClass {
  int id = 0;         // 1..96
  int element = -1;   // F2 element index (= id - 1)
  std::string label;  // registered representative term, empty if none

  /// Registered label, or the F2 element label "bbbb_m".
  std::string describe() const;

  friend bool operator==(const BeranClass& x, const BeranClass& y) {
    return x.element == y.element;
  }
};

class FreeOml2 {
 public:
  /// Built once on first use, then immutable and shared.
  static const FreeOml2& instance();

  const FiniteOrthoLattice& lattice() const noexcept { return *f2_; }
  int generator_a() const noexcept { return gen_a_; }
  int generator_b() const noexcept { return gen_b_; }

  BeranClass class_of(int element) const;

  /// Evaluates expand(t) at (gA, gB): the lexically first variable of t maps
  /// to gA, the second to gB.  By freeness canon(t1) == canon(t2) iff t1 = t2
  /// holds in every OML.  Throws std::invalid_argument on a third variable.
  BeranClass canon(const Term& t) const;
  BeranClass canon(const TermPtr& t) const { return canon(*t); }

  bool equal_oml(const Term& t1, const Term& t2) const;
  bool equal_oml(const TermPtr& t1, const TermPtr& t2) const {
    return equal_oml(*t1, *t2);
  }

  /// Entry (i,j) = canon((a ->i b) & (b ->j a)).
  std::array<std::array<BeranClass, 6>, 6> table1() const;

  /// The identity index k with canon(a ==k b) == c, or -1.
  int ident_index_of(const BeranClass& c) const;

 private:
  FreeOml2();

  const FiniteOrthoLattice* f2_;
  int gen_a_ = -1;
  int gen_b_ = -1;
  std::array<std::string, 96> class_labels_;
  std::array<int, 6> ident_class_;  // element of canon(a ==k b)
};

/// Eq. (8) verdict for each index i = 0..5 on one lattice.
std::array<CheckReport, 6> eq8_pattern(const FiniteOrthoLattice& l,
                                       const CheckOptions& options = {});

}  // namespace orthokit
