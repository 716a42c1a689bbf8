#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cellscope/element_set.hpp"
#include "cellscope/parallel.hpp"
#include "cellscope/permutation.hpp"
#include "cellscope/tableau.hpp"

namespace cellscope {

/// A partition of Sym(n) into left cells.
///
/// Cell ids are canonical: cell k is the cell whose lexicographically smallest
/// member comes k-th. Two partitions are therefore equal exactly when they
/// compare equal, whichever way they were computed. Lookup is by lex rank.
class CellPartition {
 public:
  /// `label[r]` is any label of the element with lex rank r; elements with the
  /// same label form one cell.
  CellPartition(int n, const std::vector<std::uint64_t>& label);

  int rank() const noexcept { return n_; }
  std::size_t cell_count() const noexcept { return cells_.size(); }
  std::uint32_t cell_id(const Permutation& w) const;
  std::uint32_t cell_id_of_index(std::uint64_t index) const noexcept { return cell_of_[index]; }
  /// Lex ranks of the members of cell k, increasing.
  const std::vector<std::uint64_t>& cell_indices(std::size_t k) const { return cells_.at(k); }
  std::vector<Permutation> cell(std::size_t k) const;

  friend bool operator==(const CellPartition& a, const CellPartition& b) {
    return a.n_ == b.n_ && a.cell_of_ == b.cell_of_;
  }

 private:
  int n_;
  std::vector<std::uint32_t> cell_of_;
  std::vector<std::vector<std::uint64_t>> cells_;
};

/// Insertion tableau P and recording tableau Q of the Robinson-Schensted
/// correspondence.
struct StandardPairing {
  SkewTableau p;
  SkewTableau q;
};

/// Row insertion of w(1), ..., w(n).
StandardPairing rs_insert(const Permutation& w);
/// Compact encoding of Q(w): 4 bits per entry holding its row. Equal keys iff
/// equal Q symbols.
std::uint64_t q_symbol_key(const Permutation& w);

/// Classes of the equivalence generated by x ≈ s x whenever x < s x and
/// L(x) is not contained in L(s x).
CellPartition approx_cells(int n, int cap = kDefaultRankCap, Execution ex = Execution::parallel);
/// Fibers of w -> Q(w).
CellPartition rs_cells(int n, int cap = kDefaultRankCap, Execution ex = Execution::parallel);

/// A generating ≈ edge (x, s x) whose endpoints lie in different cells of
/// `cp`, if any. Used to explain a disagreement between the two cell methods.
std::optional<std::pair<Permutation, Permutation>> find_split_edge(const CellPartition& cp);

/// X is a union of cells of `cp`.
bool is_union_of_left_cells(const ElementSet& x, const CellPartition& cp);

/// Rank-2 locality test: for every adjacent pair {s, t} and every d with
/// s d > d and t d > d, {y in <s,t> : y d in X} must contain t with s t and
/// s with t s.
bool local_union_check(const ElementSet& x);

/// Y (a subset of W_K) is a union of left cells of W_K, tested directly on
/// the ≈ edges inside W_K.
bool is_union_of_parabolic_cells(const ElementSet& y, const GenSet& k);

}  // namespace cellscope
