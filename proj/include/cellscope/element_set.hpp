#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cellscope/permutation.hpp"

namespace cellscope {

/// Largest rank for which a dense ElementSet (n! bits) is allowed.
inline constexpr int kMaxSetRank = 12;

/// A set of elements of Sym(n), stored as a bitmap indexed by lex rank.
/// Iteration is always in lexicographic order.
class ElementSet {
 public:
  explicit ElementSet(int n);
  ElementSet(int n, std::span<const Permutation> members);

  int rank() const noexcept { return n_; }
  std::size_t size() const noexcept { return count_; }
  bool empty() const noexcept { return count_ == 0; }

  bool insert(const Permutation& w);
  bool contains(const Permutation& w) const;
  bool contains_index(std::uint64_t index) const noexcept {
    return ((bits_[index >> 6] >> (index & 63U)) & 1U) != 0;
  }
  bool insert_index(std::uint64_t index);

  std::vector<Permutation> members() const;
  std::vector<std::uint64_t> indices() const;

  /// {x * g : x in this set}.
  ElementSet right_translate(const Permutation& g) const;

  friend bool operator==(const ElementSet& a, const ElementSet& b) {
    return a.n_ == b.n_ && a.bits_ == b.bits_;
  }

 private:
  void check_member(const Permutation& w) const;

  int n_;
  std::vector<std::uint64_t> bits_;
  std::size_t count_ = 0;
};

/// I(w) = {v : v <=_L w}, by downward closure along left descents.
ElementSet principal_weak_ideal(const Permutation& w);

/// True iff X is downward closed in the left weak order: for every x in X and
/// every left descent s of x, s*x is in X.
bool is_weak_ideal(const ElementSet& x);

}  // namespace cellscope
