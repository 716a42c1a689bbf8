#include "cellscope/permutation.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <sstream>

#include "cellscope/error.hpp"

namespace cellscope {

// ---------------------------------------------------------------- GenSet

GenSet::GenSet(int n, std::uint32_t mask) : n_(n), mask_(mask) {
  check_rank(n);
  const std::uint32_t valid = n >= 2 ? (((1U << n) - 1U) & ~1U) : 0U;
  if ((mask & ~valid) != 0) {
    throw Error(ErrorKind::out_of_range,
                "generator index outside [1, " + std::to_string(n - 1) + "]");
  }
}

GenSet GenSet::from_indices(int n, std::span<const int> indices) {
  std::uint32_t mask = 0;
  for (int i : indices) {
    if (i < 1 || i >= n) {
      throw Error(ErrorKind::out_of_range, "generator index " + std::to_string(i) +
                                               " outside [1, " + std::to_string(n - 1) + "]");
    }
    mask |= 1U << i;
  }
  return GenSet(n, mask);
}

GenSet GenSet::all(int n) {
  check_rank(n);
  return GenSet(n, n >= 2 ? (((1U << n) - 1U) & ~1U) : 0U);
}

int GenSet::size() const noexcept { return std::popcount(mask_); }

std::vector<int> GenSet::indices() const {
  std::vector<int> out;
  for (int i = 1; i < n_; ++i) {
    if (contains(i)) out.push_back(i);
  }
  return out;
}

std::vector<std::pair<int, int>> GenSet::blocks() const {
  std::vector<std::pair<int, int>> out;
  int i = 1;
  while (i < n_) {
    if (!contains(i)) {
      ++i;
      continue;
    }
    int j = i;
    while (j + 1 < n_ && contains(j + 1)) ++j;
    out.emplace_back(i, j);
    i = j + 1;
  }
  return out;
}

// ----------------------------------------------------------- Permutation

void check_rank(int n, int cap) {
  if (n < 1) throw Error(ErrorKind::invalid_rank, "rank must be >= 1, got " + std::to_string(n));
  if (n > cap) {
    throw Error(cap == kMaxRank ? ErrorKind::invalid_rank : ErrorKind::cap_exceeded,
                "rank " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
  }
}

void check_same_rank(const Permutation& x, const Permutation& y) {
  if (x.rank() != y.rank()) {
    throw Error(ErrorKind::rank_mismatch, "rank mismatch: " + std::to_string(x.rank()) + " vs " +
                                              std::to_string(y.rank()));
  }
}

Permutation Permutation::identity(int n) {
  check_rank(n);
  std::array<std::uint8_t, kMaxRank> img{};
  for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i + 1);
  return Permutation(n, img);
}

Permutation Permutation::from_images(std::span<const int> images) {
  const int n = static_cast<int>(images.size());
  check_rank(n);
  std::array<std::uint8_t, kMaxRank> img{};
  std::uint32_t seen = 0;
  for (int i = 0; i < n; ++i) {
    const int v = images[static_cast<std::size_t>(i)];
    if (v < 1 || v > n || ((seen >> v) & 1U) != 0) {
      throw Error(ErrorKind::parse, "not a permutation of [1," + std::to_string(n) +
                                        "]: bad value " + std::to_string(v));
    }
    seen |= 1U << v;
    img[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(v);
  }
  return Permutation(n, img);
}

Permutation Permutation::simple(int n, int i) {
  if (i < 1 || i >= n) {
    throw Error(ErrorKind::out_of_range, "s_" + std::to_string(i) + " not in Sym(" +
                                             std::to_string(n) + ")");
  }
  return identity(n).right_simple(i);
}

int Permutation::position_of(int value) const noexcept {
  for (int i = 0; i < n_; ++i) {
    if (img_[static_cast<std::size_t>(i)] == value) return i + 1;
  }
  return 0;
}

std::vector<int> Permutation::images() const {
  return std::vector<int>(img_.begin(), img_.begin() + n_);
}

Permutation Permutation::inverse() const {
  std::array<std::uint8_t, kMaxRank> inv{};
  for (int i = 0; i < n_; ++i) {
    inv[static_cast<std::size_t>(img_[static_cast<std::size_t>(i)] - 1)] =
        static_cast<std::uint8_t>(i + 1);
  }
  return Permutation(n_, inv);
}

Permutation Permutation::left_simple(int i) const {
  Permutation out = *this;
  for (int p = 0; p < n_; ++p) {
    auto& v = out.img_[static_cast<std::size_t>(p)];
    if (v == i) {
      v = static_cast<std::uint8_t>(i + 1);
    } else if (v == i + 1) {
      v = static_cast<std::uint8_t>(i);
    }
  }
  return out;
}

Permutation Permutation::right_simple(int i) const {
  Permutation out = *this;
  std::swap(out.img_[static_cast<std::size_t>(i - 1)], out.img_[static_cast<std::size_t>(i)]);
  return out;
}

Permutation operator*(const Permutation& x, const Permutation& y) {
  check_same_rank(x, y);
  Permutation out = y;
  for (int i = 0; i < y.n_; ++i) {
    out.img_[static_cast<std::size_t>(i)] =
        x.img_[static_cast<std::size_t>(y.img_[static_cast<std::size_t>(i)] - 1)];
  }
  return out;
}

int length(const Permutation& w) {
  const int n = w.rank();
  int inv = 0;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (w(i) > w(j)) ++inv;
    }
  }
  return inv;
}

GenSet left_descents(const Permutation& w) {
  const int n = w.rank();
  std::array<int, kMaxRank + 1> pos{};
  for (int i = 1; i <= n; ++i) pos[static_cast<std::size_t>(w(i))] = i;
  std::uint32_t mask = 0;
  for (int i = 1; i < n; ++i) {
    if (pos[static_cast<std::size_t>(i + 1)] < pos[static_cast<std::size_t>(i)]) mask |= 1U << i;
  }
  return GenSet(n, mask);
}

GenSet right_descents(const Permutation& w) {
  const int n = w.rank();
  std::uint32_t mask = 0;
  for (int i = 1; i < n; ++i) {
    if (w(i) > w(i + 1)) mask |= 1U << i;
  }
  return GenSet(n, mask);
}

bool left_weak_leq(const Permutation& y, const Permutation& x) {
  check_same_rank(x, y);
  return length(x * y.inverse()) == length(x) - length(y);
}

bool bruhat_leq(const Permutation& y, const Permutation& x) {
  check_same_rank(x, y);
  const int n = x.rank();
  // For every prefix [1, i] and threshold j compare |{a <= i : w(a) >= j}|.
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      int cy = 0;
      int cx = 0;
      for (int a = 1; a <= i; ++a) {
        if (y(a) >= j) ++cy;
        if (x(a) >= j) ++cx;
      }
      if (cy > cx) return false;
    }
  }
  return true;
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

std::uint64_t lex_rank(const Permutation& w) {
  const int n = w.rank();
  std::uint64_t r = 0;
  std::uint32_t used = 0;
  for (int i = 1; i <= n; ++i) {
    const int v = w(i);
    const int smaller_unused = v - 1 - std::popcount(used & ((1U << v) - 1U));
    r += static_cast<std::uint64_t>(smaller_unused) * factorial(n - i);
    used |= 1U << v;
  }
  return r;
}

Permutation lex_unrank(int n, std::uint64_t rank) {
  check_rank(n);
  if (rank >= factorial(n)) {
    throw Error(ErrorKind::out_of_range, "lex rank " + std::to_string(rank) + " >= " +
                                             std::to_string(n) + "!");
  }
  std::array<int, kMaxRank> img{};
  std::uint32_t used = 0;
  for (int i = 1; i <= n; ++i) {
    const std::uint64_t f = factorial(n - i);
    auto k = static_cast<int>(rank / f);
    rank %= f;
    for (int v = 1; v <= n; ++v) {
      if ((used >> v) & 1U) continue;
      if (k-- == 0) {
        img[static_cast<std::size_t>(i - 1)] = v;
        used |= 1U << v;
        break;
      }
    }
  }
  return Permutation::from_images(std::span<const int>(img.data(), static_cast<std::size_t>(n)));
}

std::vector<Permutation> enumerate_group(int n, int cap) {
  check_rank(n, std::min(cap, kMaxRank));
  std::vector<int> img(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = i + 1;
  std::vector<Permutation> out;
  out.reserve(factorial(n));
  do {
    out.push_back(Permutation::from_images(img));
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

// --------------------------------------------------------- string forms

namespace {

std::vector<int> parse_int_list(std::string_view text, std::string_view what) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    std::string_view token =
        text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    int value = 0;
    const auto* first = token.data();
    const auto* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (token.empty() || ec != std::errc() || ptr != last) {
      throw Error(ErrorKind::parse,
                  "malformed " + std::string(what) + " token '" + std::string(token) + "'");
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

template <class Range>
std::string join(const Range& values) {
  std::ostringstream os;
  bool first = true;
  for (const auto& v : values) {
    if (!first) os << ',';
    os << v;
    first = false;
  }
  return os.str();
}

}  // namespace

std::string to_string(const Permutation& w) { return join(w.images()); }

std::string to_string(const GenSet& j) { return join(j.indices()); }

Permutation parse_permutation(std::string_view text) {
  const std::vector<int> images = parse_int_list(text, "permutation");
  if (images.empty()) throw Error(ErrorKind::parse, "empty permutation string");
  if (static_cast<int>(images.size()) > kMaxRank) {
    throw Error(ErrorKind::parse, "permutation longer than " + std::to_string(kMaxRank));
  }
  return Permutation::from_images(images);
}

GenSet parse_genset(std::string_view text, int n) {
  const std::vector<int> indices = parse_int_list(text, "generator");
  for (int i : indices) {
    if (i < 1 || i >= n) {
      throw Error(ErrorKind::parse, "generator token '" + std::to_string(i) + "' outside [1, " +
                                        std::to_string(n - 1) + "]");
    }
  }
  return GenSet::from_indices(n, indices);
}

}  // namespace cellscope
