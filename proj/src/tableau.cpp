#include "cellscope/tableau.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include "cellscope/error.hpp"
#include "cellscope/parabolic.hpp"

namespace cellscope {

// ------------------------------------------------------------- Partition

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1 || (i > 0 && parts_[i] > parts_[i - 1])) {
      throw Error(ErrorKind::invalid_shape, "not a partition: " + to_string(*this));
    }
  }
}

Partition Partition::from_conjugate(std::span<const int> heights) {
  const int rows = heights.empty() ? 0 : *std::max_element(heights.begin(), heights.end());
  std::vector<int> parts(static_cast<std::size_t>(std::max(rows, 0)), 0);
  for (std::size_t j = 0; j < heights.size(); ++j) {
    if (j > 0 && heights[j] > heights[j - 1]) {
      throw Error(ErrorKind::invalid_shape, "column heights are not weakly decreasing");
    }
    for (int i = 0; i < heights[j]; ++i) ++parts[static_cast<std::size_t>(i)];
  }
  return Partition(std::move(parts));
}

int Partition::size() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition conjugate(const Partition& p) {
  std::vector<int> out(static_cast<std::size_t>(p.part(1)), 0);
  for (int part : p.parts()) {
    for (int j = 0; j < part; ++j) ++out[static_cast<std::size_t>(j)];
  }
  return Partition(std::move(out));
}

// ------------------------------------------------------------- SkewShape

SkewShape::SkewShape(Partition lambda, Partition mu) : lambda_(std::move(lambda)), mu_(std::move(mu)) {
  for (int i = 1; i <= std::max(lambda_.length(), mu_.length()); ++i) {
    if (mu_.part(i) > lambda_.part(i)) {
      throw Error(ErrorKind::invalid_shape,
                  "mu not contained in lambda in " + to_string(lambda_) + "/" + to_string(mu_));
    }
  }
}

int SkewShape::column_length(int j) const {
  int c = 0;
  for (int i = 1; i <= rows(); ++i) {
    if (contains({i, j})) ++c;
  }
  return c;
}

std::vector<Box> SkewShape::boxes() const {
  std::vector<Box> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (int i = 1; i <= rows(); ++i) {
    for (int j = mu_.part(i) + 1; j <= lambda_.part(i); ++j) out.push_back({i, j});
  }
  return out;
}

bool is_basic(const SkewShape& s) {
  for (int i = 1; i <= s.rows(); ++i) {
    if (s.row_length(i) == 0) return false;
  }
  for (int j = 1; j <= s.cols(); ++j) {
    if (s.column_length(j) == 0) return false;
  }
  return true;
}

SkewShape remove_empty_rows(const SkewShape& s) {
  std::vector<int> lambda;
  std::vector<int> mu;
  for (int i = 1; i <= s.rows(); ++i) {
    if (s.row_length(i) == 0) continue;
    lambda.push_back(s.lambda().part(i));
    mu.push_back(s.mu().part(i));
  }
  return SkewShape(Partition(lambda), Partition(mu));
}

// ----------------------------------------------------------- SkewTableau

SkewTableau::SkewTableau(SkewShape shape, int offset, std::vector<int> grid)
    : shape_(std::move(shape)), offset_(offset), grid_(std::move(grid)) {}

SkewTableau SkewTableau::from_entries(const SkewShape& shape, int offset,
                                      std::span<const Entry> entries) {
  const int n = shape.size();
  if (offset < 0) throw Error(ErrorKind::out_of_range, "negative tableau offset");
  if (static_cast<int>(entries.size()) != n) {
    throw Error(ErrorKind::invalid_shape, "tableau of shape " + to_string(shape) + " needs " +
                                              std::to_string(n) + " entries, got " +
                                              std::to_string(entries.size()));
  }
  std::vector<int> grid(static_cast<std::size_t>(shape.rows() * shape.cols()), 0);
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  for (const auto& e : entries) {
    if (!shape.contains({e.row, e.col})) {
      throw Error(ErrorKind::invalid_shape, "box (" + std::to_string(e.row) + "," +
                                                std::to_string(e.col) + ") not in shape " +
                                                to_string(shape));
    }
    const int k = e.value - offset - 1;
    if (k < 0 || k >= n || used[static_cast<std::size_t>(k)]) {
      throw Error(ErrorKind::invalid_shape,
                  "entry " + std::to_string(e.value) + " is repeated or outside [" +
                      std::to_string(offset + 1) + "," + std::to_string(offset + n) + "]");
    }
    auto& cell = grid[static_cast<std::size_t>((e.row - 1) * shape.cols() + (e.col - 1))];
    if (cell != 0) throw Error(ErrorKind::invalid_shape, "box filled twice");
    cell = e.value;
    used[static_cast<std::size_t>(k)] = true;
  }
  return SkewTableau(shape, offset, std::move(grid));
}

SkewTableau SkewTableau::from_values(const SkewShape& shape, int offset, std::span<const int> values) {
  const auto boxes = shape.boxes();
  if (values.size() != boxes.size()) {
    throw Error(ErrorKind::invalid_shape, "value count does not match shape " + to_string(shape));
  }
  std::vector<Entry> entries;
  entries.reserve(boxes.size());
  for (std::size_t k = 0; k < boxes.size(); ++k) {
    entries.push_back({boxes[k].row, boxes[k].col, values[k]});
  }
  return from_entries(shape, offset, entries);
}

SkewTableau SkewTableau::from_rows(const std::vector<std::vector<int>>& rows) {
  std::vector<int> lambda;
  std::vector<int> values;
  for (const auto& r : rows) {
    lambda.push_back(static_cast<int>(r.size()));
    values.insert(values.end(), r.begin(), r.end());
  }
  return from_values(SkewShape(Partition(lambda)), 0, values);
}

int SkewTableau::at(int row, int col) const noexcept {
  if (!shape_.contains({row, col})) return 0;
  return grid_[static_cast<std::size_t>((row - 1) * shape_.cols() + (col - 1))];
}

Box SkewTableau::box_of(int value) const {
  for (const auto& b : shape_.boxes()) {
    if (at(b) == value) return b;
  }
  throw Error(ErrorKind::out_of_range, "value " + std::to_string(value) + " not in tableau");
}

std::vector<Entry> SkewTableau::entries() const {
  std::vector<Entry> out;
  for (const auto& b : shape_.boxes()) out.push_back({b.row, b.col, at(b)});
  return out;
}

std::vector<int> SkewTableau::values() const {
  std::vector<int> out;
  for (const auto& b : shape_.boxes()) out.push_back(at(b));
  return out;
}

// ------------------------------------------------------------ predicates

bool is_column_standard(const SkewTableau& t) {
  for (const auto& b : t.shape().boxes()) {
    const int below = t.at(b.row + 1, b.col);
    if (below != 0 && below < t.at(b)) return false;
  }
  return true;
}

bool is_standard(const SkewTableau& t) {
  for (const auto& b : t.shape().boxes()) {
    const int right = t.at(b.row, b.col + 1);
    if (right != 0 && right < t.at(b)) return false;
  }
  return is_column_standard(t);
}

std::vector<SkewTableau> enumerate_std(const SkewShape& s, int m, int max_boxes) {
  const int n = s.size();
  if (n > max_boxes) {
    throw Error(ErrorKind::cap_exceeded, "shape " + to_string(s) + " has " + std::to_string(n) +
                                             " boxes, cap is " + std::to_string(max_boxes));
  }
  const auto boxes = s.boxes();
  std::vector<int> fill(boxes.size(), 0);
  auto index_of = [&](Box b) -> int {
    const auto it = std::lower_bound(boxes.begin(), boxes.end(), b);
    return it != boxes.end() && *it == b ? static_cast<int>(it - boxes.begin()) : -1;
  };
  // Predecessors in the row and column; a box is addable once both are filled.
  std::vector<std::pair<int, int>> preds;
  preds.reserve(boxes.size());
  for (const auto& b : boxes) preds.emplace_back(index_of({b.row, b.col - 1}), index_of({b.row - 1, b.col}));

  std::vector<SkewTableau> out;
  auto place = [&](auto&& self, int value) -> void {
    if (value > m + n) {
      out.push_back(SkewTableau::from_values(s, m, fill));
      return;
    }
    for (std::size_t k = 0; k < boxes.size(); ++k) {
      if (fill[k] != 0) continue;
      const auto [left, up] = preds[k];
      if (left >= 0 && fill[static_cast<std::size_t>(left)] == 0) continue;
      if (up >= 0 && fill[static_cast<std::size_t>(up)] == 0) continue;
      fill[k] = value;
      self(self, value + 1);
      fill[k] = 0;
    }
  };
  place(place, m + 1);
  std::sort(out.begin(), out.end(),
            [](const SkewTableau& a, const SkewTableau& b) { return a.values() < b.values(); });
  return out;
}

// ------------------------------------------------- canonical tableaux

SkewTableau tau_top(const SkewShape& s, int m) {
  std::vector<int> values(static_cast<std::size_t>(s.size()));
  std::iota(values.begin(), values.end(), m + 1);
  return SkewTableau::from_values(s, m, values);
}

SkewTableau tau_col(const SkewShape& s, int m) {
  std::vector<Entry> entries;
  int next = m + 1;
  for (int j = 1; j <= s.cols(); ++j) {
    for (int i = 1; i <= s.rows(); ++i) {
      if (s.contains({i, j})) entries.push_back({i, j, next++});
    }
  }
  return SkewTableau::from_entries(s, m, entries);
}

SkewTableau apply(const Permutation& w, const SkewTableau& t) {
  if (w.rank() != t.size()) {
    throw Error(ErrorKind::rank_mismatch, "permutation of rank " + std::to_string(w.rank()) +
                                              " applied to a tableau with " +
                                              std::to_string(t.size()) + " boxes");
  }
  const int m = t.offset();
  auto entries = t.entries();
  for (auto& e : entries) e.value = m + w(e.value - m);
  return SkewTableau::from_entries(t.shape(), m, entries);
}

SkewTableau shift(const SkewTableau& t, int h) {
  auto entries = t.entries();
  for (auto& e : entries) e.value += h;
  return SkewTableau::from_entries(t.shape(), t.offset() + h, entries);
}

Permutation perm_of(const SkewTableau& t) {
  const int n = t.size();
  const int m = t.offset();
  const SkewTableau base = tau_col(t.shape(), m);
  std::vector<int> img(static_cast<std::size_t>(n), 0);
  for (const auto& b : t.shape().boxes()) {
    img[static_cast<std::size_t>(base.at(b) - m - 1)] = t.at(b) - m;
  }
  return Permutation::from_images(img);
}

Permutation word_of(const SkewTableau& t) {
  if (!is_standard(t)) throw Error(ErrorKind::not_standard, "word_of needs a standard tableau");
  std::vector<int> word;
  const auto& s = t.shape();
  for (int i = s.rows(); i >= 1; --i) {
    for (int j = s.mu().part(i) + 1; j <= s.lambda().part(i); ++j) word.push_back(t.at(i, j) - t.offset());
  }
  return Permutation::from_images(word);
}

GenSet shape_genset(const SkewShape& s) {
  std::uint32_t mask = 0;
  int start = 1;
  for (int j = 1; j <= s.cols(); ++j) {
    const int c = s.column_length(j);
    for (int i = start; i < start + c - 1; ++i) mask |= 1U << i;
    start += c;
  }
  return GenSet(s.size(), mask);
}

// ----------------------------------------------------------- restriction

SkewTableau restrict_below(const SkewTableau& t, int k) {
  const int m = t.offset();
  const int n = t.size();
  if (k <= m || k > m + n + 1) {
    throw Error(ErrorKind::out_of_range, "restrict_below: k=" + std::to_string(k) + " outside [" +
                                             std::to_string(m + 1) + "," +
                                             std::to_string(m + n + 1) + "]");
  }
  if (!is_standard(t)) throw Error(ErrorKind::not_standard, "restrict_below needs a standard tableau");
  const auto& s = t.shape();
  std::vector<int> kappa;
  std::vector<Entry> kept;
  for (int i = 1; i <= s.rows(); ++i) {
    int len = s.mu().part(i);
    for (int j = s.mu().part(i) + 1; j <= s.lambda().part(i); ++j) {
      if (t.at(i, j) < k) {
        ++len;
        kept.push_back({i, j, t.at(i, j)});
      }
    }
    kappa.push_back(len);
  }
  return SkewTableau::from_entries(SkewShape(Partition(kappa), s.mu()), m, kept);
}

SkewTableau restrict_above(const SkewTableau& t, int k) {
  const int m = t.offset();
  const int n = t.size();
  if (k < m || k > m + n) {
    throw Error(ErrorKind::out_of_range, "restrict_above: k=" + std::to_string(k) + " outside [" +
                                             std::to_string(m) + "," + std::to_string(m + n) + "]");
  }
  if (!is_standard(t)) throw Error(ErrorKind::not_standard, "restrict_above needs a standard tableau");
  const auto& s = t.shape();
  std::vector<int> nu;
  std::vector<Entry> kept;
  for (int i = 1; i <= s.rows(); ++i) {
    int len = s.mu().part(i);
    for (int j = s.mu().part(i) + 1; j <= s.lambda().part(i); ++j) {
      if (t.at(i, j) <= k) {
        ++len;
      } else {
        kept.push_back({i, j, t.at(i, j)});
      }
    }
    nu.push_back(len);
  }
  return SkewTableau::from_entries(SkewShape(s.lambda(), Partition(nu)), k, kept);
}

// ------------------------------------------------------------ canonical

SkewTableau canonical_tableau(const GenSet& j, const Permutation& w) {
  if (!in_coset_reps(w, j)) {
    throw Error(ErrorKind::not_in_coset_reps,
                to_string(w) + " is not a minimal coset representative for J={" + to_string(j) + "}");
  }
  // Column c holds the c-th run of points joined by J. Every row has a single
  // box, and the last column sits on top so the column index weakly
  // decreases down the rows.
  const int n = w.rank();
  std::vector<int> heights;
  for (int p = 1; p <= n; ++p) {
    if (p > 1 && j.contains(p - 1)) {
      ++heights.back();
    } else {
      heights.push_back(1);
    }
  }
  std::vector<int> lambda;
  std::vector<int> mu;
  for (auto c = static_cast<int>(heights.size()); c >= 1; --c) {
    for (int r = 0; r < heights[static_cast<std::size_t>(c - 1)]; ++r) {
      lambda.push_back(c);
      mu.push_back(c - 1);
    }
  }
  const SkewShape column_stack{Partition(lambda), Partition(mu)};
  return squash(apply(w, tau_col(column_stack)));
}

// ---------------------------------------------------------- string forms

std::string to_string(const Partition& p) {
  std::ostringstream os;
  for (std::size_t i = 0; i < p.parts().size(); ++i) {
    if (i > 0) os << ',';
    os << p.parts()[i];
  }
  return os.str();
}

std::string to_string(const SkewShape& s) {
  std::string out = to_string(s.lambda());
  if (!s.mu().empty()) out += "/" + to_string(s.mu());
  return out;
}

namespace {

Partition parse_parts(std::string_view text, std::string_view whole) {
  std::vector<int> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string_view token =
        text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    int v = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size() || v < 0) {
      throw Error(ErrorKind::parse, "malformed shape token '" + std::string(token) + "' in '" +
                                        std::string(whole) + "'");
    }
    parts.push_back(v);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Partition(parts);
}

}  // namespace

SkewShape parse_shape(std::string_view text) {
  const std::size_t slash = text.find('/');
  const Partition lambda = parse_parts(text.substr(0, slash), text);
  Partition mu;
  if (slash != std::string_view::npos) mu = parse_parts(text.substr(slash + 1), text);
  return SkewShape(lambda, mu);
}

}  // namespace cellscope
