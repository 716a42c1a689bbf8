#pragma once

// Brute-force reference computations for the tests. Nothing here calls the
// library's own algorithms beyond the basic value types.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "cellscope/permutation.hpp"
#include "cellscope/tableau.hpp"

namespace oracle {

using cellscope::Permutation;

inline std::vector<std::vector<int>> all_images(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

inline std::vector<Permutation> all_perms(int n) {
  std::vector<Permutation> out;
  for (const auto& v : all_images(n)) out.push_back(Permutation::from_images(v));
  return out;
}

inline int inversions(const std::vector<int>& v) {
  int c = 0;
  for (std::size_t a = 0; a < v.size(); ++a)
    for (std::size_t b = a + 1; b < v.size(); ++b) c += v[a] > v[b] ? 1 : 0;
  return c;
}

// Position pairs (p < q) with w(p) > w(q).
inline std::set<std::pair<int, int>> position_inversions(const Permutation& w) {
  std::set<std::pair<int, int>> out;
  const auto img = w.images();
  for (std::size_t p = 0; p < img.size(); ++p)
    for (std::size_t q = p + 1; q < img.size(); ++q)
      if (img[p] > img[q]) out.insert({static_cast<int>(p), static_cast<int>(q)});
  return out;
}

// Left multiplication only relabels values, so the left weak order is
// containment of position-inversion sets.
inline bool weak_leq(const Permutation& y, const Permutation& x) {
  const auto iy = position_inversions(y);
  const auto ix = position_inversions(x);
  return std::includes(ix.begin(), ix.end(), iy.begin(), iy.end());
}

// A reduced word for w by bubble sort: returns i_1..i_k with w = s_{i_1}...s_{i_k}.
inline std::vector<int> reduced_word(const Permutation& w) {
  auto v = w.images();
  std::vector<int> word;
  bool moved = true;
  while (moved) {
    moved = false;
    for (std::size_t p = 0; p + 1 < v.size(); ++p) {
      if (v[p] > v[p + 1]) {
        std::swap(v[p], v[p + 1]);
        word.push_back(static_cast<int>(p) + 1);
        moved = true;
      }
    }
  }
  std::reverse(word.begin(), word.end());
  return word;
}

inline std::vector<int> compose(const std::vector<int>& x, const std::vector<int>& y) {
  std::vector<int> out(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) out[i] = x[static_cast<std::size_t>(y[i] - 1)];
  return out;
}

// Bruhat order by the subword property.
inline bool bruhat_subword(const Permutation& y, const Permutation& x) {
  const auto word = reduced_word(x);
  const int n = x.rank();
  const auto target = y.images();
  for (std::uint32_t mask = 0; mask < (1U << word.size()); ++mask) {
    std::vector<int> acc(static_cast<std::size_t>(n));
    std::iota(acc.begin(), acc.end(), 1);
    for (std::size_t k = 0; k < word.size(); ++k) {
      if (((mask >> k) & 1U) == 0) continue;
      std::vector<int> s(static_cast<std::size_t>(n));
      std::iota(s.begin(), s.end(), 1);
      std::swap(s[static_cast<std::size_t>(word[k] - 1)], s[static_cast<std::size_t>(word[k])]);
      acc = compose(acc, s);
    }
    if (acc == target) return true;
  }
  return false;
}

inline std::vector<Permutation> principal_ideal(const Permutation& w) {
  std::vector<Permutation> out;
  for (const auto& y : all_perms(w.rank()))
    if (weak_leq(y, w)) out.push_back(y);
  return out;
}

// Row-insertion recording tableau, rows of entries.
inline std::vector<std::vector<int>> q_symbol(const Permutation& w) {
  std::vector<std::vector<int>> p, q;
  for (int k = 1; k <= w.rank(); ++k) {
    int x = w(k);
    std::size_t r = 0;
    while (true) {
      if (r == p.size()) {
        p.push_back({x});
        q.push_back({k});
        break;
      }
      auto it = std::upper_bound(p[r].begin(), p[r].end(), x);
      if (it == p[r].end()) {
        p[r].push_back(x);
        q[r].push_back(k);
        break;
      }
      std::swap(*it, x);
      ++r;
    }
  }
  return q;
}

inline std::uint64_t involution_count(int n) {
  std::uint64_t a = 1, b = 1;
  for (int k = 2; k <= n; ++k) {
    const std::uint64_t c = b + static_cast<std::uint64_t>(k - 1) * a;
    a = b;
    b = c;
  }
  return b;
}

// Standardness read straight off a (row, col) -> value map.
inline bool standard_map(const std::map<std::pair<int, int>, int>& f) {
  for (const auto& [box, v] : f) {
    const auto right = f.find({box.first, box.second + 1});
    if (right != f.end() && right->second < v) return false;
    const auto below = f.find({box.first + 1, box.second});
    if (below != f.end() && below->second < v) return false;
  }
  return true;
}

// Number of standard fillings of the shape by trying all n! bijections.
inline std::size_t std_count_bruteforce(const cellscope::SkewShape& s) {
  std::vector<std::pair<int, int>> boxes;
  for (int i = 1; i <= s.lambda().length(); ++i)
    for (int j = s.mu().part(i) + 1; j <= s.lambda().part(i); ++j) boxes.push_back({i, j});
  std::size_t count = 0;
  for (const auto& v : all_images(static_cast<int>(boxes.size()))) {
    std::map<std::pair<int, int>, int> f;
    for (std::size_t k = 0; k < boxes.size(); ++k) f[boxes[k]] = v[k];
    if (standard_map(f)) ++count;
  }
  return count;
}

// Number of standard Young tableaux of straight shape by the hook length formula.
inline std::uint64_t hook_count(const std::vector<int>& lambda) {
  int n = 0;
  for (int p : lambda) n += p;
  std::uint64_t num = 1;
  for (int k = 2; k <= n; ++k) num *= static_cast<std::uint64_t>(k);
  std::uint64_t den = 1;
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    for (int j = 1; j <= lambda[i]; ++j) {
      int below = 0;
      for (std::size_t r = i + 1; r < lambda.size() && lambda[r] >= j; ++r) ++below;
      den *= static_cast<std::uint64_t>(lambda[i] - j + below + 1);
    }
  }
  return num / den;
}

// Counts box sets of size n in an n x n grid that form a basic skew diagram:
// rows 1..R and columns 1..C all occupied and nothing beyond, each row a
// contiguous run, and both run endpoints weakly decreasing down the rows.
inline std::size_t basic_diagram_count(int n) {
  const int side = n;
  std::vector<int> chosen;
  std::size_t count = 0;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(chosen.size()) == n) {
      std::vector<int> lo(static_cast<std::size_t>(side) + 1, side + 1), hi(static_cast<std::size_t>(side) + 1, 0),
          cnt(static_cast<std::size_t>(side) + 1, 0);
      std::vector<bool> col(static_cast<std::size_t>(side) + 1, false);
      int max_row = 0, max_col = 0;
      for (int c : chosen) {
        const int r = c / side + 1, k = c % side + 1;
        const auto ri = static_cast<std::size_t>(r);
        lo[ri] = std::min(lo[ri], k);
        hi[ri] = std::max(hi[ri], k);
        ++cnt[ri];
        col[static_cast<std::size_t>(k)] = true;
        max_row = std::max(max_row, r);
        max_col = std::max(max_col, k);
      }
      for (int r = 1; r <= max_row; ++r) {
        const auto ri = static_cast<std::size_t>(r);
        if (cnt[ri] == 0 || hi[ri] - lo[ri] + 1 != cnt[ri]) return;
        if (r > 1 && (lo[ri] > lo[ri - 1] || hi[ri] > hi[ri - 1])) return;
      }
      for (int k = 1; k <= max_col; ++k)
        if (!col[static_cast<std::size_t>(k)]) return;
      ++count;
      return;
    }
    for (int c = start; c < side * side; ++c) {
      chosen.push_back(c);
      rec(c + 1);
      chosen.pop_back();
    }
  };
  rec(0);
  return count;
}

// Partitions of exactly `total` with at most `rows` parts, each at most `width`.
inline std::vector<std::vector<int>> partitions(int total, int rows, int width) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left, int cap) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    if (static_cast<int>(cur.size()) == rows) return;
    for (int p = std::min(left, cap); p >= 1; --p) {
      cur.push_back(p);
      rec(left - p, p);
      cur.pop_back();
    }
  };
  rec(total, width);
  return out;
}

// Every skew shape with n boxes whose lambda fits in a `side` x `side` box.
inline std::vector<cellscope::SkewShape> skew_shapes(int n, int side) {
  std::vector<cellscope::SkewShape> out;
  for (int big = n; big <= side * side; ++big) {
    for (const auto& lam : partitions(big, side, side)) {
      for (const auto& mu : partitions(big - n, static_cast<int>(lam.size()), side)) {
        bool inside = true;
        for (std::size_t i = 0; i < mu.size(); ++i) inside = inside && mu[i] <= lam[i];
        if (inside) out.emplace_back(cellscope::Partition(lam), cellscope::Partition(mu));
      }
    }
  }
  return out;
}

}  // namespace oracle
