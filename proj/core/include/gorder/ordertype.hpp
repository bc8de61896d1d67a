#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gorder/predicates.hpp"
#include "gorder/rational.hpp"

namespace gorder {

// Ascending index triple (1-based, i < j < k).
struct Triple {
  int i, j, k;
  auto operator<=>(const Triple&) const = default;
  std::string to_string() const;
};

// Orientation signs for every ascending triple over {1..n}. Signs of permuted
// triples follow from permutation parity, so only ascending triples are stored.
class Chirotope {
 public:
  Chirotope(int n, std::vector<Sign> ascending_signs);

  int n() const { return n_; }
  int triple_count() const { return static_cast<int>(signs_.size()); }

  // sign of the ascending triple (i < j < k)
  Sign ascending(int i, int j, int k) const;
  Sign ascending(const Triple& t) const { return ascending(t.i, t.j, t.k); }

  // sign of an arbitrary ordered triple of distinct indices
  Sign oriented(int a, int b, int c) const;

  // cc predicate: true iff (a, b, c) is counterclockwise
  bool cc(int a, int b, int c) const { return oriented(a, b, c) == Sign::CCW; }

  std::vector<Triple> ascending_triples() const;
  std::vector<Triple> ccw_triples() const;

  bool operator==(const Chirotope& o) const = default;

 private:
  int rank(int i, int j, int k) const;
  int n_;
  std::vector<Sign> signs_;
};

// Signs from orient2d on every ascending triple; throws CollinearInput.
Chirotope euclidean_chirotope(const PointList& points);

// The n=9 chirotope of the non-realizable arrangement: exactly 20 ascending
// triples are counterclockwise, every other ascending triple is clockwise.
Chirotope non_pappus_chirotope();

// Ascending triples on which the two chirotopes disagree; SizeMismatch if
// the ground sets differ.
std::vector<Triple> chirotope_diff(const Chirotope& a, const Chirotope& b);

// ---- axiom checking ---------------------------------------------------------

struct AxiomReport {
  // axioms[0..4]: cyclic symmetry, antisymmetry, totality, interiority,
  // transitivity. Each entry lists violating index tuples (empty = pass).
  std::array<std::vector<std::vector<int>>, 5> violations;

  bool axiom_passes(int axiom) const { return violations[axiom].empty(); }
  bool all_pass() const;
};

// Exhaustive check of the five counterclockwise-system axioms: the first
// three over ordered triples, interiority over ordered 4-tuples, and
// transitivity over ordered 5-tuples.
AxiomReport check_cc_axioms(const Chirotope& chi);

// ---- text format ------------------------------------------------------------

// Header "n=<k>", then one line "i j k" per counterclockwise ascending triple
// in lexicographic order; triples absent are clockwise.
std::string chirotope_to_text(const Chirotope& chi);
Chirotope chirotope_from_text(const std::string& text);

}  // namespace gorder
