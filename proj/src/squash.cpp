#include <algorithm>
#include <vector>

#include "cellscope/error.hpp"
#include "cellscope/tableau.hpp"

namespace cellscope {

namespace {

std::vector<int> heights(const Partition& p, int cols) {
  const Partition c = conjugate(p);
  std::vector<int> out(static_cast<std::size_t>(cols + 1), 0);  // out[j-1] = p*_j, plus p*_{cols+1}
  for (int j = 1; j <= cols + 1; ++j) out[static_cast<std::size_t>(j - 1)] = c.part(j);
  return out;
}

}  // namespace

int slide_bound(const SkewTableau& t, int j) {
  const auto& s = t.shape();
  if (j < 1 || j > s.cols()) {
    throw Error(ErrorKind::out_of_range,
                "column " + std::to_string(j) + " outside [1," + std::to_string(s.cols()) + "]");
  }
  const auto lam = heights(s.lambda(), s.cols());
  const auto mu = heights(s.mu(), s.cols());
  const auto col = static_cast<std::size_t>(j - 1);
  const int cap = std::min(lam[col] - lam[col + 1], mu[col] - mu[col + 1]);
  // Shifting column j up by k puts t(i+k, j) beside t(i, j+1) for every row
  // i in (mu*_j - k, lambda*_{j+1}].
  int best = 0;
  for (int k = 1; k <= cap; ++k) {
    bool ok = true;
    for (int i = mu[col] - k + 1; i <= lam[col + 1] && ok; ++i) {
      ok = t.at(i + k, j) < t.at(i, j + 1);
    }
    if (ok) best = k;
  }
  return best;
}

SkewTableau squash(const SkewTableau& t) {
  if (!is_standard(t)) throw Error(ErrorKind::not_standard, "squash needs a standard tableau");
  const auto& s = t.shape();
  const int cols = s.cols();
  std::vector<int> delta(static_cast<std::size_t>(cols + 1), 0);
  for (int j = cols; j >= 1; --j) {
    delta[static_cast<std::size_t>(j - 1)] = delta[static_cast<std::size_t>(j)] + slide_bound(t, j);
  }
  const auto lam = heights(s.lambda(), cols);
  const auto mu = heights(s.mu(), cols);
  std::vector<int> zeta(static_cast<std::size_t>(cols));
  std::vector<int> eta(static_cast<std::size_t>(cols));
  for (std::size_t c = 0; c < zeta.size(); ++c) {
    zeta[c] = lam[c] - delta[c];
    eta[c] = mu[c] - delta[c];
  }
  const SkewShape squashed(Partition::from_conjugate(zeta), Partition::from_conjugate(eta));
  std::vector<Entry> entries;
  for (const auto& b : squashed.boxes()) {
    entries.push_back({b.row, b.col, t.at(b.row + delta[static_cast<std::size_t>(b.col - 1)], b.col)});
  }
  return SkewTableau::from_entries(squashed, t.offset(), entries);
}

bool is_squashed(const SkewTableau& t) { return squash(t) == t; }

}  // namespace cellscope
