#include "cellscope/parabolic.hpp"

#include <algorithm>
#include <array>

#include "cellscope/error.hpp"

namespace cellscope {

namespace {

void check_genset_rank(const Permutation& w, const GenSet& j) {
  if (w.rank() != j.rank()) {
    throw Error(ErrorKind::rank_mismatch, "generator set of Sym(" + std::to_string(j.rank()) +
                                              ") used with element of Sym(" +
                                              std::to_string(w.rank()) + ")");
  }
}

}  // namespace

Permutation longest_element(const GenSet& j) {
  std::vector<int> img = Permutation::identity(j.rank()).images();
  for (auto [a, b] : j.blocks()) {
    std::reverse(img.begin() + (a - 1), img.begin() + (b + 1));
  }
  return Permutation::from_images(img);
}

bool in_coset_reps(const Permutation& w, const GenSet& j) {
  check_genset_rank(w, j);
  for (int i : j.indices()) {
    if (w(i) > w(i + 1)) return false;
  }
  return true;
}

bool in_inverse_coset_reps(const Permutation& w, const GenSet& k) {
  check_genset_rank(w, k);
  return (left_descents(w).mask() & k.mask()) == 0;
}

bool in_parabolic(const Permutation& w, const GenSet& j) {
  check_genset_rank(w, j);
  // Each point must stay inside its block of consecutive generators.
  std::array<int, kMaxRank + 1> block{};
  int id = 0;
  for (int p = 1; p <= w.rank(); ++p) {
    if (!(p > 1 && j.contains(p - 1))) ++id;
    block[static_cast<std::size_t>(p)] = id;
  }
  for (int p = 1; p <= w.rank(); ++p) {
    if (block[static_cast<std::size_t>(p)] != block[static_cast<std::size_t>(w(p))]) return false;
  }
  return true;
}

ElementSet min_left_coset_reps(const GenSet& j) {
  ElementSet out(j.rank());
  for (const auto& d : enumerate_group(j.rank(), kMaxSetRank)) {
    if (in_coset_reps(d, j)) out.insert(d);
  }
  return out;
}

CosetDecomposition left_decompose(const Permutation& w, const GenSet& k) {
  check_genset_rank(w, k);
  // Left multiplication by W_K permutes values inside each K-block; the
  // shortest coset element lists the values of every block in increasing
  // order of position.
  std::vector<int> img = w.images();
  const int n = w.rank();
  for (auto [a, b] : k.blocks()) {
    int next = a;
    for (int p = 0; p < n; ++p) {
      const int v = img[static_cast<std::size_t>(p)];
      if (v >= a && v <= b + 1) img[static_cast<std::size_t>(p)] = next++;
    }
  }
  Permutation d = Permutation::from_images(img);
  return {w * d.inverse(), d, k};
}

ElementSet double_coset_reps(const GenSet& k, const GenSet& j) {
  if (k.rank() != j.rank()) throw Error(ErrorKind::rank_mismatch, "double_coset_reps: rank mismatch");
  ElementSet out(j.rank());
  for (const auto& d : enumerate_group(j.rank(), kMaxSetRank)) {
    if (in_coset_reps(d, j) && in_inverse_coset_reps(d, k)) out.insert(d);
  }
  return out;
}

std::vector<Permutation> parabolic_elements(const GenSet& j) {
  const int n = j.rank();
  std::vector<Permutation> out{Permutation::identity(n)};
  for (auto [a, b] : j.blocks()) {
    std::vector<int> img = Permutation::identity(n).images();
    std::vector<Permutation> next;
    do {
      const Permutation block = Permutation::from_images(img);
      for (const auto& x : out) next.push_back(x * block);
    } while (std::next_permutation(img.begin() + (a - 1), img.begin() + (b + 1)));
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

GenSet conjugate_intersection(const GenSet& k, const Permutation& d, const GenSet& j) {
  check_genset_rank(d, j);
  // d s_j d^{-1} is the transposition (d(j), d(j+1)); it is simple exactly
  // when those values are adjacent.
  std::uint32_t mask = 0;
  for (int i : j.indices()) {
    const int lo = std::min(d(i), d(i + 1));
    const int hi = std::max(d(i), d(i + 1));
    if (hi == lo + 1 && k.contains(lo)) mask |= 1U << lo;
  }
  return GenSet(k.rank(), mask);
}

}  // namespace cellscope
