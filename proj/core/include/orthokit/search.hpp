// orthokit/search.hpp — bounded enumeration of finite ortholattices up to
// isomorphism and countermodel hunting for a target (quasi-)equation.

#pragma once

#include <vector>

#include "orthokit/checker.hpp"
#include "orthokit/lattice.hpp"
#include "orthokit/term.hpp"

namespace orthokit {

inline constexpr int kMaxSearchElements = 12;

struct SearchTask {
  enum class Mode : std::uint8_t { FindFailing, FindSatisfying };

  QuasiEquation target;  // a plain equation has no hypotheses
  Mode mode = Mode::FindFailing;
  int max_elements = 10;  // <= kMaxSearchElements
  int limit = 5;          // max results; 0 = unlimited
};

/// All ortholattices with exactly n elements, one per isomorphism class,
/// sorted by canonical form and named "ol<n>_<k>".  Empty for odd n (every
/// ortholattice pairs its elements with their complements).  Throws
/// std::out_of_range outside 2 <= n <= 12.
std::vector<FiniteOrthoLattice> enumerate_ortholattices(int n);

struct HuntResult {
  FiniteOrthoLattice lattice;
  CheckReport report;
};

/// Scans enumerate_ortholattices(2..max_elements) in size order and returns
/// the lattices where the target fails (or holds, per mode), each with its
/// witness report.
std::vector<HuntResult> hunt_countermodel(const SearchTask& task,
                                          const CheckOptions& options = {});

}  // namespace orthokit
