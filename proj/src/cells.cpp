#include "cellscope/cells.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <unordered_map>

#include "cellscope/error.hpp"
#include "cellscope/parabolic.hpp"
#include "cellscope/union_find.hpp"

namespace cellscope {

// --------------------------------------------------------- CellPartition

CellPartition::CellPartition(int n, const std::vector<std::uint64_t>& label) : n_(n) {
  if (label.size() != factorial(n)) {
    throw Error(ErrorKind::invalid_rank, "cell labelling has the wrong size for Sym(" +
                                             std::to_string(n) + ")");
  }
  cell_of_.resize(label.size());
  std::unordered_map<std::uint64_t, std::uint32_t> ids;
  for (std::uint64_t r = 0; r < label.size(); ++r) {
    auto [it, fresh] = ids.try_emplace(label[r], static_cast<std::uint32_t>(cells_.size()));
    if (fresh) cells_.emplace_back();
    cell_of_[r] = it->second;
    cells_[it->second].push_back(r);
  }
}

std::uint32_t CellPartition::cell_id(const Permutation& w) const {
  if (w.rank() != n_) throw Error(ErrorKind::rank_mismatch, "cell_id: rank mismatch");
  return cell_of_[lex_rank(w)];
}

std::vector<Permutation> CellPartition::cell(std::size_t k) const {
  std::vector<Permutation> out;
  for (auto r : cells_.at(k)) out.push_back(lex_unrank(n_, r));
  return out;
}

// ------------------------------------------------------ Robinson-Schensted

namespace {

struct RowInsertion {
  int rows = 0;
  std::array<int, kMaxRank> row_len{};
  std::array<std::array<int, kMaxRank>, kMaxRank> p{};
  std::array<int, kMaxRank + 1> q_row{};  // q_row[k]: row where box k was created

  void insert(int value, int step) {
    int r = 0;
    while (true) {
      auto& row = p[static_cast<std::size_t>(r)];
      const int len = row_len[static_cast<std::size_t>(r)];
      const auto* pos = std::upper_bound(row.data(), row.data() + len, value);
      if (pos == row.data() + len) {
        row[static_cast<std::size_t>(len)] = value;
        ++row_len[static_cast<std::size_t>(r)];
        rows = std::max(rows, r + 1);
        q_row[static_cast<std::size_t>(step)] = r;
        return;
      }
      const auto at = static_cast<std::size_t>(pos - row.data());
      std::swap(value, row[at]);
      ++r;
    }
  }
};

RowInsertion run_insertion(const Permutation& w) {
  RowInsertion ins;
  for (int i = 1; i <= w.rank(); ++i) ins.insert(w(i), i);
  return ins;
}

}  // namespace

StandardPairing rs_insert(const Permutation& w) {
  const RowInsertion ins = run_insertion(w);
  std::vector<std::vector<int>> p_rows(static_cast<std::size_t>(ins.rows));
  std::vector<std::vector<int>> q_rows(static_cast<std::size_t>(ins.rows));
  for (int r = 0; r < ins.rows; ++r) {
    const auto& row = ins.p[static_cast<std::size_t>(r)];
    p_rows[static_cast<std::size_t>(r)].assign(row.begin(), row.begin() + ins.row_len[static_cast<std::size_t>(r)]);
  }
  for (int k = 1; k <= w.rank(); ++k) q_rows[static_cast<std::size_t>(ins.q_row[static_cast<std::size_t>(k)])].push_back(k);
  return {SkewTableau::from_rows(p_rows), SkewTableau::from_rows(q_rows)};
}

std::uint64_t q_symbol_key(const Permutation& w) {
  const RowInsertion ins = run_insertion(w);
  std::uint64_t key = 0;
  for (int k = 1; k <= w.rank(); ++k) {
    key |= static_cast<std::uint64_t>(ins.q_row[static_cast<std::size_t>(k)]) << (4 * (k - 1));
  }
  return key;
}

// ------------------------------------------------------------ partitions

namespace {

constexpr std::uint64_t kNoEdge = std::numeric_limits<std::uint64_t>::max();

/// x ≈ s_i x is a generating edge: s_i x is longer and L(x) ⊄ L(s_i x).
bool is_generating_edge(const Permutation& x, int i) {
  const GenSet lx = left_descents(x);
  if (lx.contains(i)) return false;
  return !lx.subset_of(left_descents(x.left_simple(i)));
}

}  // namespace

CellPartition approx_cells(int n, int cap, Execution ex) {
  check_rank(n, std::min(cap, kMaxSetRank));
  const std::uint64_t order = factorial(n);
  const auto gens = static_cast<std::size_t>(n - 1);
  // partner[r * gens + (i-1)] is the lex rank of s_i x for a generating edge.
  std::vector<std::uint64_t> partner(order * gens, kNoEdge);
  for_each_index(ex, order, [&](std::size_t r) {
    const Permutation x = lex_unrank(n, r);
    for (int i = 1; i < n; ++i) {
      if (is_generating_edge(x, i)) partner[r * gens + static_cast<std::size_t>(i - 1)] = lex_rank(x.left_simple(i));
    }
  });
  UnionFind uf(order);
  for (std::size_t k = 0; k < partner.size(); ++k) {
    if (partner[k] != kNoEdge) uf.unite(k / gens, partner[k]);
  }
  std::vector<std::uint64_t> label(order);
  for (std::uint64_t r = 0; r < order; ++r) label[r] = uf.find(r);
  return CellPartition(n, label);
}

CellPartition rs_cells(int n, int cap, Execution ex) {
  check_rank(n, std::min(cap, kMaxSetRank));
  const std::uint64_t order = factorial(n);
  std::vector<std::uint64_t> label(order);
  for_each_index(ex, order, [&](std::size_t r) { label[r] = q_symbol_key(lex_unrank(n, r)); });
  return CellPartition(n, label);
}

std::optional<std::pair<Permutation, Permutation>> find_split_edge(const CellPartition& cp) {
  const int n = cp.rank();
  for (std::uint64_t r = 0; r < factorial(n); ++r) {
    const Permutation x = lex_unrank(n, r);
    for (int i = 1; i < n; ++i) {
      if (!is_generating_edge(x, i)) continue;
      const Permutation y = x.left_simple(i);
      if (cp.cell_id_of_index(r) != cp.cell_id(y)) return std::make_pair(x, y);
    }
  }
  return std::nullopt;
}

bool is_union_of_left_cells(const ElementSet& x, const CellPartition& cp) {
  if (x.rank() != cp.rank()) throw Error(ErrorKind::rank_mismatch, "is_union_of_left_cells: rank mismatch");
  for (std::size_t k = 0; k < cp.cell_count(); ++k) {
    const auto& members = cp.cell_indices(k);
    const bool first = x.contains_index(members.front());
    for (auto r : members) {
      if (x.contains_index(r) != first) return false;
    }
  }
  return true;
}

bool local_union_check(const ElementSet& x) {
  const int n = x.rank();
  if (n < 3) return true;
  auto in = [&](const Permutation& w) { return x.contains_index(lex_rank(w)); };
  for (std::uint64_t r = 0; r < factorial(n); ++r) {
    const Permutation d = lex_unrank(n, r);
    const GenSet ld = left_descents(d);
    for (int i = 1; i + 1 < n; ++i) {
      // s = s_i, t = s_{i+1}; d is shortest in its coset <s,t> d.
      if (ld.contains(i) || ld.contains(i + 1)) continue;
      const Permutation td = d.left_simple(i + 1);
      const Permutation sd = d.left_simple(i);
      if (in(td) != in(td.left_simple(i))) return false;
      if (in(sd) != in(sd.left_simple(i + 1))) return false;
    }
  }
  return true;
}

bool is_union_of_parabolic_cells(const ElementSet& y, const GenSet& k) {
  if (y.rank() != k.rank()) throw Error(ErrorKind::rank_mismatch, "is_union_of_parabolic_cells: rank mismatch");
  for (const auto& x : parabolic_elements(k)) {
    for (int i : k.indices()) {
      if (!is_generating_edge(x, i)) continue;
      if (y.contains(x) != y.contains(x.left_simple(i))) return false;
    }
  }
  return true;
}

}  // namespace cellscope
