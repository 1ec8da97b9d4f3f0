// orthokit/laws.hpp — the catalog of lattice laws used throughout: the
// ortholattice axioms L1-L6, the class laws L7-L10, the implication /
// identity (quasi-)equations and the OL and WOML lemma batteries.
//
// <= between lattice terms is always encoded as the equation a & b = a.

#pragma once

#include <string>
#include <vector>

#include "orthokit/term.hpp"

namespace orthokit::laws {

/// L1..L9 by number.  L2 is standard associativity; L7 is the orthomodularity
/// equation as printed (a|b = ((a|b)&b')|b).
Equation l(int k);

/// The orthomodularity law in the orientation whose first O6 countermodel is
/// a=x, b=y:  a|(a'&(a|b)) = a|b.   Equivalent to L7 as a lattice condition.
Equation om_law();

/// L10: (a|(b&c)) ==i ((a|b)&(a|c)) = 1,  i = 0..5.
Equation l10(int i);

/// a ->i b = 1  =>  a <= b.   i = 1..5 per the quantum rule; i = 0 is the
/// classical rule (Eq. (2)).
QuasiEquation eq1(int i);

/// a|b from implication alone:
/// a|b = (a->i b) ->i (((a->i b) ->i (b->i a)) ->i a),  i = 1..5.
Equation eq3(int i);

/// a ==i b = 1  =>  a = b.   i=5: Eq. (4); i=0: Eq. (5); i=1..4: Eq. (7).
QuasiEquation ident_collapse(int i);

/// a <->i b = a ==5 b  (an OML identity, i = 1..5).
Equation eq6(int i);

/// Eq. (8):  a ==i b = (a ->i b) & (b ->0 a).
Equation eq8(int i);

/// a ==i b = 1 , b ==i c = 1  =>  a ==i c = 1.
QuasiEquation ident_transitivity(int i);

/// L8.1:  a ==i b = 1  =>  (a|c) ==i (b|c) = 1,  i = 1..5.
QuasiEquation l8_1(int i);
/// L8.2:  a ->1 b = 1  =>  b' ->1 a' = 1.
QuasiEquation l8_2();
/// L8.3:  ((a ->1 b) ->0 b) ==5 (a|b) = 1.
Equation l8_3();

/// a' = a ->i 0, valid in every OL for i = 0..5.
Equation comp_from_impl(int i);

struct NamedLaw {
  std::string name;
  QuasiEquation law;  // plain equations have no hypotheses
};

/// Lemma battery valid in every OL: Eqs. (9)-(16), the (15)/(16) identity
/// chains split into their pairwise links for every index.
std::vector<NamedLaw> ol_battery();

/// Lemma battery valid in every WOML: Eqs. (17)-(22); (18) split into its two
/// directions.
std::vector<NamedLaw> woml_battery();

}  // namespace orthokit::laws
