#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cellscope/permutation.hpp"

namespace cellscope {

/// Weakly decreasing sequence of positive parts. `part(i)` is 1-based and
/// returns 0 past the last part.
class Partition {
 public:
  Partition() = default;
  /// Trailing zeros are dropped; anything else non-partition throws.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
  /// Builds the partition whose conjugate has the given (weakly decreasing)
  /// column heights.
  static Partition from_conjugate(std::span<const int> heights);

  int part(int i) const noexcept {
    return i >= 1 && i <= length() ? parts_[static_cast<std::size_t>(i - 1)] : 0;
  }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  int size() const noexcept;
  bool empty() const noexcept { return parts_.empty(); }
  const std::vector<int>& parts() const noexcept { return parts_; }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// lambda*_j = |{i : lambda_i >= j}|.
Partition conjugate(const Partition& p);

struct Box {
  int row;
  int col;
  friend bool operator==(const Box&, const Box&) = default;
  friend auto operator<=>(const Box&, const Box&) = default;
};

/// lambda/mu with mu contained in lambda. No normalization is ever applied
/// implicitly: empty rows and columns are kept as given.
class SkewShape {
 public:
  SkewShape() = default;
  SkewShape(Partition lambda, Partition mu = {});

  const Partition& lambda() const noexcept { return lambda_; }
  const Partition& mu() const noexcept { return mu_; }
  int size() const noexcept { return lambda_.size() - mu_.size(); }
  /// lambda*_1 rows and lambda_1 columns.
  int rows() const noexcept { return lambda_.length(); }
  int cols() const noexcept { return lambda_.part(1); }
  int row_length(int i) const noexcept { return lambda_.part(i) - mu_.part(i); }
  int column_length(int j) const;
  bool contains(Box b) const noexcept {
    return b.row >= 1 && b.col > mu_.part(b.row) && b.col <= lambda_.part(b.row);
  }
  /// All boxes, sorted by (row, col).
  std::vector<Box> boxes() const;

  friend bool operator==(const SkewShape&, const SkewShape&) = default;
  friend auto operator<=>(const SkewShape&, const SkewShape&) = default;

 private:
  Partition lambda_;
  Partition mu_;
};

/// Every row and every column of the diagram is nonempty.
bool is_basic(const SkewShape& s);
/// Deletes the rows i with lambda_i = mu_i.
SkewShape remove_empty_rows(const SkewShape& s);

struct Entry {
  int row;
  int col;
  int value;
  friend bool operator==(const Entry&, const Entry&) = default;
};

/// Bijection from the boxes of a skew shape onto [m+1, m+n].
class SkewTableau {
 public:
  SkewTableau() = default;
  static SkewTableau from_entries(const SkewShape& shape, int offset,
                                  std::span<const Entry> entries);
  /// Fills boxes in (row, col) order with `values`.
  static SkewTableau from_values(const SkewShape& shape, int offset, std::span<const int> values);
  /// Straight-shape tableau given row by row, offset 0.
  static SkewTableau from_rows(const std::vector<std::vector<int>>& rows);

  const SkewShape& shape() const noexcept { return shape_; }
  int offset() const noexcept { return offset_; }
  int size() const noexcept { return shape_.size(); }
  /// Entry at (row, col), or 0 outside the diagram.
  int at(int row, int col) const noexcept;
  int at(Box b) const noexcept { return at(b.row, b.col); }
  /// The box holding `value` (row(t,a), col(t,a)).
  Box box_of(int value) const;
  /// Entries sorted by (row, col).
  std::vector<Entry> entries() const;
  /// Values listed in (row, col) box order.
  std::vector<int> values() const;

  friend bool operator==(const SkewTableau&, const SkewTableau&) = default;

 private:
  SkewTableau(SkewShape shape, int offset, std::vector<int> grid);

  SkewShape shape_;
  int offset_ = 0;
  std::vector<int> grid_;  // rows() x cols(), 0 outside the diagram
};

bool is_standard(const SkewTableau& t);
bool is_column_standard(const SkewTableau& t);

/// All standard fillings of `s` with target [m+1, m+n], ordered by their
/// value sequence in box order.
std::vector<SkewTableau> enumerate_std(const SkewShape& s, int m = 0, int max_boxes = 12);

/// The row-reading maximal tableau: rows filled left to right, top to bottom.
SkewTableau tau_top(const SkewShape& s, int m = 0);
/// The column-reading tableau: columns filled top to bottom, left to right.
SkewTableau tau_col(const SkewShape& s, int m = 0);

/// (w t)(b) = w(t(b)), with w acting on the window [m+1, m+n] via the shift
/// i -> m + i.
SkewTableau apply(const Permutation& w, const SkewTableau& t);
/// h + t.
SkewTableau shift(const SkewTableau& t, int h);

/// The permutation w (of the window, as an element of Sym(n)) with
/// w * tau_col = t.
Permutation perm_of(const SkewTableau& t);
/// The reading word (rows from last to first) as a permutation.
Permutation word_of(const SkewTableau& t);
/// {s_i : i and i+1 lie in the same column of tau_col}.
GenSet shape_genset(const SkewShape& s);

/// t with every box holding an entry >= k removed.
SkewTableau restrict_below(const SkewTableau& t, int k);
/// t with every box holding an entry <= k removed; the result has offset k.
SkewTableau restrict_above(const SkewTableau& t, int k);

/// Largest amount column j can slide up while the tableau stays standard.
int slide_bound(const SkewTableau& t, int j);
/// Slides every column up as far as possible (the squash normal form).
SkewTableau squash(const SkewTableau& t);
bool is_squashed(const SkewTableau& t);

/// The squashed standard tableau with perm = w and column generators J.
/// Throws not_in_coset_reps unless w is in D_J.
SkewTableau canonical_tableau(const GenSet& j, const Permutation& w);

// Shape grammar: "3,2,2/1,1", the "/mu" part optional.
std::string to_string(const Partition& p);
std::string to_string(const SkewShape& s);
SkewShape parse_shape(std::string_view text);

}  // namespace cellscope
