#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cellscope {

/// Hard limit on the rank a Permutation can hold. Whole-group operations are
/// further limited by a (smaller, configurable) rank cap.
inline constexpr int kMaxRank = 16;
inline constexpr int kDefaultRankCap = 9;

/// A subset of the simple transpositions {s_1, ..., s_{n-1}} of Sym(n).
/// Bit i of the mask stands for s_i.
class GenSet {
 public:
  GenSet() = default;
  GenSet(int n, std::uint32_t mask);
  static GenSet from_indices(int n, std::span<const int> indices);
  static GenSet from_indices(int n, std::initializer_list<int> indices) {
    return from_indices(n, std::span<const int>(indices.begin(), indices.size()));
  }
  static GenSet all(int n);
  static GenSet none(int n) { return GenSet(n, 0); }

  int rank() const noexcept { return n_; }
  std::uint32_t mask() const noexcept { return mask_; }
  bool contains(int i) const noexcept { return i >= 1 && i < n_ && ((mask_ >> i) & 1U) != 0; }
  bool empty() const noexcept { return mask_ == 0; }
  int size() const noexcept;
  bool subset_of(const GenSet& other) const noexcept { return (mask_ & ~other.mask_) == 0; }
  std::vector<int> indices() const;

  /// Maximal runs [a, b] of consecutive members; s_a..s_b generate the
  /// symmetric group on the points {a, ..., b+1}.
  std::vector<std::pair<int, int>> blocks() const;

  GenSet operator&(const GenSet& o) const { return GenSet(n_, mask_ & o.mask_); }
  GenSet operator|(const GenSet& o) const { return GenSet(n_, mask_ | o.mask_); }
  friend bool operator==(const GenSet&, const GenSet&) = default;
  friend auto operator<=>(const GenSet&, const GenSet&) = default;

 private:
  int n_ = 1;
  std::uint32_t mask_ = 0;
};

/// Element of Sym(n) in one-line notation with 1-based values:
/// `w(i)` is the image of i. Products act on the left, so (x*y)(i) = x(y(i)).
class Permutation {
 public:
  Permutation() : Permutation(identity(1)) {}

  static Permutation identity(int n);
  static Permutation from_images(std::span<const int> images);
  static Permutation from_images(std::initializer_list<int> images) {
    return from_images(std::span<const int>(images.begin(), images.size()));
  }
  /// The simple transposition s_i = (i, i+1) of Sym(n).
  static Permutation simple(int n, int i);

  int rank() const noexcept { return n_; }
  int operator()(int i) const noexcept { return img_[static_cast<std::size_t>(i - 1)]; }
  int position_of(int value) const noexcept;
  std::vector<int> images() const;

  Permutation inverse() const;
  /// s_i * w: swaps the values i and i+1.
  Permutation left_simple(int i) const;
  /// w * s_i: swaps the entries at positions i and i+1.
  Permutation right_simple(int i) const;

  friend Permutation operator*(const Permutation& x, const Permutation& y);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  /// Lexicographic on images within a rank.
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  Permutation(int n, const std::array<std::uint8_t, kMaxRank>& img) : n_(n), img_(img) {}

  int n_ = 1;
  std::array<std::uint8_t, kMaxRank> img_{};
};

/// Coxeter length, i.e. the number of inversions.
int length(const Permutation& w);
/// {i : l(s_i w) < l(w)}: value i+1 sits to the left of value i.
GenSet left_descents(const Permutation& w);
/// {i : w(i) > w(i+1)}.
GenSet right_descents(const Permutation& w);

/// y <=_L x iff l(x y^-1) = l(x) - l(y).
bool left_weak_leq(const Permutation& y, const Permutation& x);
/// Bruhat order via the dot-counting criterion.
bool bruhat_leq(const Permutation& y, const Permutation& x);

std::uint64_t factorial(int n);
/// Position of w in the lexicographic listing of Sym(n) (Lehmer code).
std::uint64_t lex_rank(const Permutation& w);
Permutation lex_unrank(int n, std::uint64_t rank);

/// All n! elements in lexicographic order. Throws cap_exceeded if n > cap.
std::vector<Permutation> enumerate_group(int n, int cap = kDefaultRankCap);

void check_rank(int n, int cap = kMaxRank);
void check_same_rank(const Permutation& x, const Permutation& y);

// String forms: "3,1,2" for a permutation, "1,3" for a generator set
// (empty string is the empty set).
std::string to_string(const Permutation& w);
std::string to_string(const GenSet& j);
Permutation parse_permutation(std::string_view text);
GenSet parse_genset(std::string_view text, int n);

}  // namespace cellscope
