#include "cellscope/element_set.hpp"

#include <bit>
#include <vector>

#include "cellscope/error.hpp"

namespace cellscope {

ElementSet::ElementSet(int n) : n_(n) {
  check_rank(n, kMaxSetRank);
  bits_.assign((factorial(n) + 63) / 64, 0);
}

ElementSet::ElementSet(int n, std::span<const Permutation> members) : ElementSet(n) {
  for (const auto& w : members) insert(w);
}

void ElementSet::check_member(const Permutation& w) const {
  if (w.rank() != n_) {
    throw Error(ErrorKind::rank_mismatch, "element of Sym(" + std::to_string(w.rank()) +
                                              ") in a set over Sym(" + std::to_string(n_) + ")");
  }
}

bool ElementSet::insert_index(std::uint64_t index) {
  auto& word = bits_[index >> 6];
  const std::uint64_t bit = std::uint64_t{1} << (index & 63U);
  if ((word & bit) != 0) return false;
  word |= bit;
  ++count_;
  return true;
}

bool ElementSet::insert(const Permutation& w) {
  check_member(w);
  return insert_index(lex_rank(w));
}

bool ElementSet::contains(const Permutation& w) const {
  check_member(w);
  return contains_index(lex_rank(w));
}

std::vector<std::uint64_t> ElementSet::indices() const {
  std::vector<std::uint64_t> out;
  out.reserve(count_);
  for (std::size_t k = 0; k < bits_.size(); ++k) {
    std::uint64_t word = bits_[k];
    while (word != 0) {
      const int b = std::countr_zero(word);
      out.push_back(k * 64 + static_cast<std::uint64_t>(b));
      word &= word - 1;
    }
  }
  return out;
}

std::vector<Permutation> ElementSet::members() const {
  std::vector<Permutation> out;
  out.reserve(count_);
  for (auto idx : indices()) out.push_back(lex_unrank(n_, idx));
  return out;
}

ElementSet ElementSet::right_translate(const Permutation& g) const {
  if (g.rank() != n_) throw Error(ErrorKind::rank_mismatch, "right_translate: rank mismatch");
  ElementSet out(n_);
  for (const auto& x : members()) out.insert(x * g);
  return out;
}

ElementSet principal_weak_ideal(const Permutation& w) {
  const int n = w.rank();
  ElementSet seen(n);
  std::vector<Permutation> frontier{w};
  seen.insert(w);
  while (!frontier.empty()) {
    const Permutation u = frontier.back();
    frontier.pop_back();
    for (int i : left_descents(u).indices()) {
      Permutation v = u.left_simple(i);
      if (seen.insert(v)) frontier.push_back(v);
    }
  }
  return seen;
}

bool is_weak_ideal(const ElementSet& x) {
  for (const auto& w : x.members()) {
    for (int i : left_descents(w).indices()) {
      if (!x.contains(w.left_simple(i))) return false;
    }
  }
  return true;
}

}  // namespace cellscope
