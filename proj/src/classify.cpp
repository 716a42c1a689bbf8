#include "cellscope/classify.hpp"

#include <algorithm>
#include <map>

#include "cellscope/error.hpp"
#include "cellscope/parabolic.hpp"

namespace cellscope {

std::string_view to_string(CellMethod m) {
  switch (m) {
    case CellMethod::approx:
      return "approx";
    case CellMethod::rs:
      return "rs";
    case CellMethod::local:
      return "local";
  }
  return "approx";
}

CellMethod parse_cell_method(std::string_view text) {
  if (text == "approx") return CellMethod::approx;
  if (text == "rs") return CellMethod::rs;
  if (text == "local") return CellMethod::local;
  throw Error(ErrorKind::parse, "unknown cell method '" + std::string(text) + "'");
}

bool is_maximal_tableau(const SkewTableau& t) { return t == tau_top(t.shape(), t.offset()); }

namespace {

ElementSet translated_ideal(const SkewTableau& t) {
  const Permutation w = perm_of(t);
  const GenSet j = shape_genset(t.shape());
  return principal_weak_ideal(w).right_translate(longest_element(j));
}

}  // namespace

bool is_cell_ideal_generating(const SkewTableau& t, const CellPartition& cp) {
  if (t.size() != cp.rank()) {
    throw Error(ErrorKind::rank_mismatch, "tableau with " + std::to_string(t.size()) +
                                              " boxes checked against cells of Sym(" +
                                              std::to_string(cp.rank()) + ")");
  }
  return is_union_of_left_cells(translated_ideal(t), cp);
}

bool is_cell_ideal_generating_local(const SkewTableau& t) {
  return local_union_check(translated_ideal(t));
}

ElementSet weak_interval(const Permutation& w, const GenSet& j) {
  if (w.rank() != j.rank()) throw Error(ErrorKind::rank_mismatch, "weak_interval: rank mismatch");
  const Permutation wj = longest_element(j);
  ElementSet out(w.rank());
  for (const auto& x : principal_weak_ideal(w * wj).members()) {
    if (left_weak_leq(wj, x)) out.insert(x);
  }
  return out;
}

// --------------------------------------------------------- basic shapes

namespace {

/// Partitions with at most `rows` parts, each at most `max_part`, at most
/// `bound[i]` in row i when bound is given.
void partitions_below(std::vector<int>& prefix, int rows, int max_part, const Partition* bound,
                      std::vector<Partition>& out) {
  out.emplace_back(prefix);
  const auto i = static_cast<int>(prefix.size());
  if (i == rows) return;
  int cap = prefix.empty() ? max_part : prefix.back();
  if (bound != nullptr) cap = std::min(cap, bound->part(i + 1));
  for (int v = 1; v <= cap; ++v) {
    prefix.push_back(v);
    partitions_below(prefix, rows, max_part, bound, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<SkewShape> basic_skew_shapes(int n) {
  check_rank(n);
  std::vector<Partition> lambdas;
  std::vector<int> prefix;
  partitions_below(prefix, n, n, nullptr, lambdas);
  std::vector<SkewShape> out;
  for (const auto& lambda : lambdas) {
    if (lambda.size() < n) continue;
    std::vector<Partition> mus;
    partitions_below(prefix, lambda.length(), lambda.part(1), &lambda, mus);
    for (const auto& mu : mus) {
      if (lambda.size() - mu.size() != n) continue;
      SkewShape s(lambda, mu);
      if (is_basic(s)) out.push_back(std::move(s));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ------------------------------------------------------------ exhaustive verification

namespace {

std::vector<PairKey> coset_rep_pairs(int n) {
  std::vector<PairKey> pairs;
  const auto group = enumerate_group(n, kMaxSetRank);
  for (std::uint32_t m = 0; m < (1U << (n - 1)); ++m) {
    const GenSet j(n, m << 1);
    for (const auto& w : group) {
      if (in_coset_reps(w, j)) pairs.push_back({j, w});
    }
  }
  return pairs;
}

}  // namespace

VerificationReport verify_main_theorem(int n, CellMethod method, int cap, Execution ex) {
  check_rank(n, std::min(cap, kMaxSetRank));
  VerificationReport report;
  report.n = n;
  report.method = method;

  std::optional<CellPartition> cells;
  if (method == CellMethod::approx) {
    cells = approx_cells(n, cap, ex);
    if (!(*cells == rs_cells(n, cap, ex))) {
      std::string detail = "approx and rs cell partitions of Sym(" + std::to_string(n) + ") differ";
      if (auto edge = find_split_edge(rs_cells(n, cap, Execution::serial))) {
        detail += "; generating edge " + to_string(edge->first) + " ~ " + to_string(edge->second) +
                  " crosses RS fibers";
      }
      throw Error(ErrorKind::cell_disagreement, detail);
    }
  } else if (method == CellMethod::rs) {
    cells = rs_cells(n, cap, ex);
  }

  const std::vector<PairKey> pairs = coset_rep_pairs(n);
  report.records.resize(pairs.size());
  for_each_index(ex, pairs.size(), [&](std::size_t k) {
    const auto& [j, w] = pairs[k];
    const SkewTableau t = canonical_tableau(j, w);
    VerificationRecord rec{j, w, is_maximal_tableau(t), false, std::nullopt};
    rec.is_cig = cells ? is_cell_ideal_generating(t, *cells) : is_cell_ideal_generating_local(t);
    if (rec.is_cig) rec.shape = t.shape();
    report.records[k] = std::move(rec);
  });

  for (const auto& rec : report.records) {
    if (rec.is_cig) ++report.qualifying_pairs;
    if (rec.is_cig != rec.is_maximal) report.mismatches.push_back(rec);
  }
  report.basic_skew_diagrams = basic_skew_shapes(n).size();
  return report;
}

IntervalClassification interval_classification_check(int n, const CellPartition& cp, Execution ex) {
  check_rank(n, kMaxSetRank);
  if (cp.rank() != n) throw Error(ErrorKind::rank_mismatch, "interval check: rank mismatch");
  IntervalClassification out;
  out.n = n;

  std::map<PairKey, SkewShape> expected;
  for (const auto& s : basic_skew_shapes(n)) {
    expected.emplace(PairKey{shape_genset(s), perm_of(tau_top(s))}, s);
  }
  for (const auto& [key, shape] : expected) out.expected.push_back(key);

  const auto group = enumerate_group(n, kMaxSetRank);
  std::vector<PairKey> pairs;
  for (std::uint32_t m = 0; m < (1U << (n - 1)); ++m) {
    for (const auto& w : group) pairs.push_back({GenSet(n, m << 1), w});
  }
  std::vector<char> flagged(pairs.size(), 0);
  std::vector<std::size_t> failures(pairs.size(), 0);
  for_each_index(ex, pairs.size(), [&](std::size_t k) {
    const auto& [j, w] = pairs[k];
    const ElementSet interval = weak_interval(w, j);
    if (interval.empty() || !is_union_of_left_cells(interval, cp)) return;
    flagged[k] = 1;
    const auto it = expected.find(pairs[k]);
    if (it == expected.end()) return;
    const Permutation wj = longest_element(j);
    const SkewTableau base = tau_col(it->second);
    for (const auto& x : group) {
      if (interval.contains(x) != is_standard(apply(x * wj, base))) ++failures[k];
    }
  });
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    if (flagged[k] != 0) out.flagged.push_back(pairs[k]);
    out.bijection_failures += failures[k];
  }
  std::sort(out.flagged.begin(), out.flagged.end());
  return out;
}

// ------------------------------------------------------- counterexamples

ExceptionalPair exceptional_tableaux(int n) {
  if (n < 3) throw Error(ErrorKind::invalid_rank, "exceptional tableaux need n >= 3");
  std::vector<Entry> t_entries;
  for (int a = 2; a <= n - 1; ++a) t_entries.push_back({1, a, a});
  t_entries.push_back({2, 1, 1});
  t_entries.push_back({2, 2, n});

  std::vector<Entry> u_entries{{1, n - 2, 1}, {1, n - 1, n}};
  for (int j = 1; j <= n - 2; ++j) u_entries.push_back({2, j, j + 1});

  return {SkewTableau::from_entries(SkewShape({n - 1, 2}, {1}), 0, t_entries),
          SkewTableau::from_entries(SkewShape({n - 1, n - 2}, {n - 3}), 0, u_entries)};
}

std::vector<SkewTableau> a5_listed_tableaux() {
  const std::vector<std::vector<std::vector<int>>> rows{
      {{1, 2, 3, 6}, {4, 5}},    {{1, 2, 5, 6}, {3, 4}},    {{1, 2, 4, 5}, {3, 6}},
      {{1, 2, 5}, {3, 4, 6}},    {{1, 2, 4, 5}, {3, 6}},    {{1, 2, 3, 5, 6}, {4}},
      {{1, 2, 4, 5, 6}, {3}},    {{1, 2, 3, 5}, {4, 6}},    {{1, 2, 3, 4, 5, 6}},
      {{1, 2, 5}, {3, 6}, {4}},  {{1, 2, 5, 6}, {3}, {4}},  {{1, 2, 3, 4, 5}, {6}},
  };
  std::vector<SkewTableau> out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.push_back(SkewTableau::from_rows(r));
  return out;
}

A5Report a5_ideal_check() {
  constexpr int n = 6;
  A5Report report;
  report.listed = a5_listed_tableaux();
  for (const auto& t : report.listed) {
    if (std::find(report.distinct.begin(), report.distinct.end(), t) == report.distinct.end()) {
      report.distinct.push_back(t);
    }
  }

  const auto group = enumerate_group(n);
  std::vector<SkewTableau> q(group.size());
  for (std::size_t k = 0; k < group.size(); ++k) q[k] = rs_insert(group[k]).q;
  auto fibers_union = [&](const std::vector<SkewTableau>& tabs) {
    ElementSet x(n);
    for (std::size_t k = 0; k < group.size(); ++k) {
      if (std::find(tabs.begin(), tabs.end(), q[k]) != tabs.end()) x.insert(group[k]);
    }
    return x;
  };

  const ElementSet ideal = fibers_union(report.distinct);
  report.union_size = ideal.size();
  report.is_weak_ideal = is_weak_ideal(ideal);
  report.is_union_of_cells = is_union_of_left_cells(ideal, rs_cells(n));

  if (!report.is_weak_ideal) {
    report.completion_searched = true;
    std::vector<SkewTableau> all_q;
    for (const auto& t : q) {
      if (std::find(all_q.begin(), all_q.end(), t) == all_q.end()) all_q.push_back(t);
    }
    for (const auto& extra : all_q) {
      if (std::find(report.distinct.begin(), report.distinct.end(), extra) != report.distinct.end()) continue;
      auto tabs = report.distinct;
      tabs.push_back(extra);
      if (is_weak_ideal(fibers_union(tabs))) report.completions.push_back(extra);
    }
  }
  return report;
}

}  // namespace cellscope
