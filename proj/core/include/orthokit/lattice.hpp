// orthokit/lattice.hpp — finite ortholattices: representation, validation,
// products, isomorphism, the stock atlas and the lattice file format.
//
// Lattice file format (line-oriented text, '#' starts a comment):
//
//   lattice <name>
//   elements: <label> <label> ...
//   ortho: <a>:<a'> <b>:<b'> ...     (0:1 implied if omitted)
//   covers: <p><<q> <p><<q> ...      (e.g. 0<x x<y)
//
// Labels are runs of [A-Za-z0-9_']; "0" and "1" are reserved for the bounds
// and must be present.

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace orthokit {

class LatticeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Hard cap on lattice size, far above any atlas need.
inline constexpr int kMaxLatticeSize = 4096;

/// Textual input form: elements, Hasse cover pairs and complement pairs.
struct LatticeSpec {
  std::string name;
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> ortho;   // a:a'
  std::vector<std::pair<std::string, std::string>> covers;  // p < q
};

/// A validated finite ortholattice: order, join, meet and complement tables.
/// Instances are immutable after construction and safe to share between
/// concurrent checkers.
class FiniteOrthoLattice {
 public:
  const std::string& name() const noexcept { return name_; }
  int size() const noexcept { return n_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(int e) const { return labels_[static_cast<std::size_t>(e)]; }
  /// Element index for a label, -1 when absent.
  int element(std::string_view label) const;

  bool leq(int a, int b) const { return leq_[static_cast<std::size_t>(a) * n_ + b] != 0; }
  int join(int a, int b) const { return join_[static_cast<std::size_t>(a) * n_ + b]; }
  int meet(int a, int b) const { return meet_[static_cast<std::size_t>(a) * n_ + b]; }
  int ortho(int a) const { return ortho_[static_cast<std::size_t>(a)]; }
  int bottom() const noexcept { return bottom_; }
  int top() const noexcept { return top_; }

  /// True when q is an upper cover of p.
  bool covers(int p, int q) const;
  std::vector<std::pair<int, int>> cover_pairs() const;

  struct Tables {
    std::string name;
    std::vector<std::string> labels;
    std::vector<std::uint8_t> leq;   // n*n row-major
    std::vector<std::int32_t> join;  // n*n
    std::vector<std::int32_t> meet;  // n*n
    std::vector<std::int32_t> ortho;
  };
  /// Validates the tables (order axioms, bounds, lattice property against the
  /// order, ortho involution/order-reversal/complement, De Morgan) and wraps
  /// them.  Throws LatticeError with a witness on any failure.
  static FiniteOrthoLattice from_tables(Tables t);

  FiniteOrthoLattice rename(std::string new_name) const;

 private:
  FiniteOrthoLattice() = default;

  std::string name_;
  std::vector<std::string> labels_;
  int n_ = 0;
  std::vector<std::uint8_t> leq_;
  std::vector<std::int32_t> join_;
  std::vector<std::int32_t> meet_;
  std::vector<std::int32_t> ortho_;
  int bottom_ = -1;
  int top_ = -1;
};

/// Builds and validates a lattice from covers and complement pairs.
/// leq is the reflexive-transitive closure of the covers; join and meet are
/// computed from leq as unique least upper / greatest lower bounds.
/// Throws LatticeError ("not a lattice" / "ortho invalid" with the offending
/// pair) when any invariant fails.
FiniteOrthoLattice build_lattice(const LatticeSpec& spec);

/// Componentwise product; |l1|*|l2| elements, labels "<l1>_<l2>" with the
/// bounds relabeled "0" and "1".
FiniteOrthoLattice product(const FiniteOrthoLattice& l1, const FiniteOrthoLattice& l2,
                           std::string name = "");

/// Order- and ortho-preserving bijection l1 -> l2 when one exists.
std::optional<std::vector<int>> isomorphism(const FiniteOrthoLattice& l1,
                                            const FiniteOrthoLattice& l2);
bool isomorphic(const FiniteOrthoLattice& l1, const FiniteOrthoLattice& l2);

/// Label-independent canonical form; equal keys iff isomorphic.
/// Intended for the small lattices of the enumerator.
std::string canonical_key(const FiniteOrthoLattice& l);

/// The stock atlas: "2", "2^2", "2^4", "MO2", "O6", "M12", "F9G", "F3B", "F2".
/// Built and validated once, then shared.  Throws LatticeError on unknown
/// names.
const FiniteOrthoLattice& stock(std::string_view name);
const std::vector<std::string>& stock_names();

LatticeSpec parse_lattice_spec(std::string_view text);
std::string serialize(const FiniteOrthoLattice& l);
std::string to_dot(const FiniteOrthoLattice& l);

}  // namespace orthokit
