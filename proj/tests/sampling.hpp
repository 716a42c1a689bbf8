#pragma once

#include <map>
#include <random>

#include "cellscope/tableau.hpp"
#include "oracles.hpp"

namespace sampling {

using cellscope::Box;
using cellscope::Entry;
using cellscope::Partition;
using cellscope::SkewShape;
using cellscope::SkewTableau;

// Random standard filling: repeatedly place the next value in a uniformly
// chosen box whose upper and left neighbours are already filled.
inline SkewTableau random_standard(const SkewShape& s, std::mt19937_64& rng) {
  std::map<std::pair<int, int>, int> filled;
  const auto boxes = s.boxes();
  std::vector<Entry> entries;
  for (int v = 1; v <= s.size(); ++v) {
    std::vector<Box> ready;
    for (const auto& b : boxes) {
      if (filled.count({b.row, b.col}) != 0) continue;
      const bool up = !s.contains({b.row - 1, b.col}) || filled.count({b.row - 1, b.col}) != 0;
      const bool left = !s.contains({b.row, b.col - 1}) || filled.count({b.row, b.col - 1}) != 0;
      if (up && left) ready.push_back(b);
    }
    std::uniform_int_distribution<std::size_t> pick(0, ready.size() - 1);
    const Box b = ready[pick(rng)];
    filled[{b.row, b.col}] = v;
    entries.push_back({b.row, b.col, v});
  }
  return SkewTableau::from_entries(s, 0, entries);
}

inline SkewShape random_shape(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> extra(0, n);
  while (true) {
    const int mu_size = extra(rng);
    const auto lams = oracle::partitions(n + mu_size, n + 1, n + 1);
    std::uniform_int_distribution<std::size_t> pl(0, lams.size() - 1);
    const auto lam = lams[pl(rng)];
    const auto mus = oracle::partitions(mu_size, static_cast<int>(lam.size()), lam.front());
    std::vector<std::vector<int>> inside;
    for (const auto& mu : mus) {
      bool ok = true;
      for (std::size_t i = 0; i < mu.size(); ++i) ok = ok && mu[i] <= lam[i];
      if (ok) inside.push_back(mu);
    }
    if (inside.empty()) continue;
    std::uniform_int_distribution<std::size_t> pm(0, inside.size() - 1);
    return SkewShape(Partition(lam), Partition(inside[pm(rng)]));
  }
}

}  // namespace sampling
