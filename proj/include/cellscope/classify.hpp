#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "cellscope/cells.hpp"
#include "cellscope/element_set.hpp"
#include "cellscope/parallel.hpp"
#include "cellscope/permutation.hpp"
#include "cellscope/tableau.hpp"

namespace cellscope {

/// How "is a union of left cells" is decided.
enum class CellMethod { approx, rs, local };

std::string_view to_string(CellMethod m);
CellMethod parse_cell_method(std::string_view text);

/// t equals the maximal tableau of its shape and offset.
bool is_maximal_tableau(const SkewTableau& t);

/// I(perm(t)) * w_J is a union of left cells of Sym(n), J = J of t's shape.
bool is_cell_ideal_generating(const SkewTableau& t, const CellPartition& cp);
/// Same predicate decided by the rank-2 locality test, with no partition.
bool is_cell_ideal_generating_local(const SkewTableau& t);

/// {x : w_J <=_L x <=_L w w_J}. Empty unless w is in D_J.
ElementSet weak_interval(const Permutation& w, const GenSet& j);

/// Every basic lambda/mu with n boxes, ordered by (lambda, mu). Basic shapes
/// fit in an n x n box, which bounds the search.
std::vector<SkewShape> basic_skew_shapes(int n);

struct VerificationRecord {
  GenSet j;
  Permutation w;
  bool is_maximal = false;
  bool is_cig = false;
  std::optional<SkewShape> shape;  // shape of the canonical tableau when is_cig
};

struct VerificationReport {
  int n = 0;
  CellMethod method = CellMethod::approx;
  std::vector<VerificationRecord> records;
  std::vector<VerificationRecord> mismatches;
  std::size_t qualifying_pairs = 0;
  std::size_t basic_skew_diagrams = 0;

  bool theorem_holds() const { return mismatches.empty() && qualifying_pairs == basic_skew_diagrams; }
};

/// For every J and every w in D_J, compares "canonical tableau is maximal"
/// with "canonical tableau is cell ideal generating". With the approx method
/// the partition is cross-checked against the RS fibers first, and a
/// disagreement throws cell_disagreement naming a split edge.
VerificationReport verify_main_theorem(int n, CellMethod method = CellMethod::approx,
                                       int cap = kDefaultRankCap, Execution ex = Execution::parallel);

struct PairKey {
  GenSet j;
  Permutation w;
  friend bool operator==(const PairKey&, const PairKey&) = default;
  friend auto operator<=>(const PairKey&, const PairKey&) = default;
};

struct IntervalClassification {
  int n = 0;
  /// Pairs whose interval is a nonempty union of left cells.
  std::vector<PairKey> flagged;
  /// (J of lambda/mu, perm of the maximal tableau) over basic lambda/mu.
  std::vector<PairKey> expected;
  /// Qualifying pairs where x in interval <=> x w_J tau_col standard fails.
  std::size_t bijection_failures = 0;

  bool holds() const { return flagged == expected && bijection_failures == 0; }
};

/// Runs over all n! * 2^(n-1) pairs (w, J).
IntervalClassification interval_classification_check(int n, const CellPartition& cp,
                                                      Execution ex = Execution::parallel);

struct ExceptionalPair {
  SkewTableau t;  // shape (n-1,2)/(1)
  SkewTableau u;  // shape (n-1,n-2)/(n-3)
};

/// The two squashed non-maximal tableaux that fail to be cell ideal
/// generating for every n >= 3.
ExceptionalPair exceptional_tableaux(int n);

struct A5Report {
  std::vector<SkewTableau> listed;    // as printed, with the repeat
  std::vector<SkewTableau> distinct;  // first occurrences
  std::size_t union_size = 0;
  bool is_weak_ideal = false;
  bool is_union_of_cells = false;
  /// Only filled when the union is not an ideal: tableaux whose fiber turns
  /// it into one.
  bool completion_searched = false;
  std::vector<SkewTableau> completions;
};

/// The listed union of Q-symbol fibers in Sym(6).
A5Report a5_ideal_check();
std::vector<SkewTableau> a5_listed_tableaux();

}  // namespace cellscope
