#include <doctest.h>

#include <map>
#include <set>

#include "cellscope/cells.hpp"
#include "cellscope/classify.hpp"
#include "cellscope/element_set.hpp"
#include "cellscope/error.hpp"
#include "cellscope/parabolic.hpp"
#include "oracles.hpp"

using namespace cellscope;

namespace {

Permutation P(std::initializer_list<int> v) { return Permutation::from_images(v); }

SkewTableau T(const SkewShape& s, std::vector<Entry> e, int m = 0) { return SkewTableau::from_entries(s, m, e); }

std::vector<GenSet> all_gensets(int n) {
  std::vector<GenSet> out;
  for (std::uint32_t m = 0; m < (1U << (n - 1)); ++m) out.emplace_back(n, m << 1);
  return out;
}

std::vector<int> row_lengths(const std::vector<std::vector<int>>& rows) {
  std::vector<int> out;
  for (const auto& r : rows) out.push_back(static_cast<int>(r.size()));
  return out;
}

}  // namespace

TEST_CASE("maximal tableaux") {
  CHECK(is_maximal_tableau(tau_top(SkewShape({3, 1}))));
  CHECK_FALSE(is_maximal_tableau(tau_col(SkewShape({2, 2}, {1}))));
  CHECK(is_maximal_tableau(tau_top(SkewShape({1}))));
  CHECK(is_maximal_tableau(tau_top(SkewShape({3, 2}, {1}), 2)));
}

TEST_CASE("cell ideal generating examples") {
  const auto cp3 = approx_cells(3);
  CHECK(is_cell_ideal_generating(tau_top(SkewShape({2, 1})), cp3));
  CHECK(is_cell_ideal_generating_local(tau_top(SkewShape({2, 1}))));
  const auto t4 = T(SkewShape({3, 2}, {1}), {{1, 2, 2}, {1, 3, 3}, {2, 1, 1}, {2, 2, 4}});
  CHECK_FALSE(is_cell_ideal_generating(t4, approx_cells(4)));
  CHECK_FALSE(is_cell_ideal_generating_local(t4));
  CHECK(is_cell_ideal_generating(tau_top(SkewShape({1})), approx_cells(1)));
  CHECK_THROWS_AS(is_cell_ideal_generating(t4, cp3), Error);
}

TEST_CASE("weak interval examples") {
  for (const auto& j : all_gensets(3)) {
    CHECK(weak_interval(Permutation::identity(3), j).members() == std::vector<Permutation>{longest_element(j)});
  }
  const auto j1 = GenSet::from_indices(3, {1});
  CHECK(weak_interval(P({1, 3, 2}), j1).members() == std::vector<Permutation>{P({2, 1, 3}), P({3, 1, 2})});
  CHECK(weak_interval(Permutation::simple(3, 1), j1).empty());
}

TEST_CASE("weak interval properties") {
  for (int n = 1; n <= 5; ++n) {
    const auto group = oracle::all_perms(n);
    for (const auto& j : all_gensets(n)) {
      const auto wj = longest_element(j);
      for (const auto& w : group) {
        const auto interval = weak_interval(w, j);
        const bool lengths_add = length(w * wj) == length(w) + length(wj);
        CHECK(interval.empty() != in_coset_reps(w, j));
        CHECK(lengths_add == in_coset_reps(w, j));
        std::vector<Permutation> brute;
        for (const auto& x : group)
          if (oracle::weak_leq(wj, x) && oracle::weak_leq(x, w * wj)) brute.push_back(x);
        CHECK(interval.members() == brute);
        if (in_coset_reps(w, j)) CHECK(interval == principal_weak_ideal(w).right_translate(wj));
      }
    }
  }
}

TEST_CASE("basic skew shapes") {
  for (int n = 1; n <= 6; ++n) {
    const auto shapes = basic_skew_shapes(n);
    CHECK(shapes.size() == oracle::basic_diagram_count(n));
    CHECK(std::set<SkewShape>(shapes.begin(), shapes.end()).size() == shapes.size());
    for (const auto& s : shapes) {
      CHECK(is_basic(s));
      CHECK(s.size() == n);
    }
  }
  CHECK(basic_skew_shapes(1).size() == 1);
  CHECK(basic_skew_shapes(2).size() == 3);
}

TEST_CASE("interval classification") {
  for (int n = 1; n <= 5; ++n) {
    CAPTURE(n);
    const auto result = interval_classification_check(n, rs_cells(n));
    CHECK(result.holds());
    CHECK(result.flagged.size() == oracle::basic_diagram_count(n));
    CHECK(result.bijection_failures == 0);
  }
  CHECK(interval_classification_check(1, rs_cells(1)).flagged.size() == 1);
  CHECK(interval_classification_check(2, rs_cells(2)).flagged.size() == 3);
  CHECK(interval_classification_check(4, rs_cells(4), Execution::serial).flagged ==
        interval_classification_check(4, rs_cells(4), Execution::parallel).flagged);
}

TEST_CASE("interval sizes count standard tableaux") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& s : basic_skew_shapes(n)) {
      CAPTURE(to_string(s));
      const auto j = shape_genset(s);
      const auto interval = weak_interval(perm_of(tau_top(s)), j);
      CHECK(interval.size() == oracle::std_count_bruteforce(s));
      const auto wj = longest_element(j);
      std::set<std::vector<int>> images;
      for (const auto& x : interval.members()) {
        const auto t = apply(x * wj, tau_col(s));
        CHECK(is_standard(t));
        images.insert(t.values());
      }
      CHECK(images.size() == interval.size());
    }
  }
}

TEST_CASE("maximal exactly when cell ideal generating, n <= 6") {
  for (int n = 1; n <= 6; ++n) {
    CAPTURE(n);
    const auto report = verify_main_theorem(n, CellMethod::approx);
    CHECK(report.mismatches.empty());
    CHECK(report.qualifying_pairs == oracle::basic_diagram_count(n));
    CHECK(report.theorem_holds());

    std::size_t expected_records = 0;
    for (const auto& j : all_gensets(n)) expected_records += min_left_coset_reps(j).size();
    CHECK(report.records.size() == expected_records);
    std::set<std::pair<GenSet, Permutation>> keys;
    for (const auto& r : report.records) {
      CHECK(in_coset_reps(r.w, r.j));
      keys.insert({r.j, r.w});
      CHECK(r.shape.has_value() == r.is_cig);
    }
    CHECK(keys.size() == report.records.size());
  }
  const auto one = verify_main_theorem(1);
  REQUIRE(one.records.size() == 1);
  CHECK(one.records[0].is_cig);
  CHECK(one.records[0].is_maximal);
}

TEST_CASE("verification agrees across methods and execution paths") {
  for (int n = 1; n <= 5; ++n) {
    const auto a = verify_main_theorem(n, CellMethod::approx, kDefaultRankCap, Execution::serial);
    const auto r = verify_main_theorem(n, CellMethod::rs, kDefaultRankCap, Execution::parallel);
    const auto l = verify_main_theorem(n, CellMethod::local, kDefaultRankCap, Execution::parallel);
    REQUIRE(a.records.size() == r.records.size());
    REQUIRE(a.records.size() == l.records.size());
    for (std::size_t k = 0; k < a.records.size(); ++k) {
      CHECK(a.records[k].j == r.records[k].j);
      CHECK(a.records[k].w == r.records[k].w);
      CHECK(a.records[k].is_cig == r.records[k].is_cig);
      CHECK(a.records[k].is_cig == l.records[k].is_cig);
      CHECK(a.records[k].shape == l.records[k].shape);
    }
  }
}

TEST_CASE("every maximal tableau generates a cell ideal") {
  for (int n = 1; n <= 6; ++n) {
    const auto cp = rs_cells(n);
    for (const auto& s : oracle::skew_shapes(n, n)) {
      CAPTURE(to_string(s));
      CHECK(is_cell_ideal_generating(tau_top(s), cp));
    }
  }
}

TEST_CASE("exceptional tableaux") {
  const auto four = exceptional_tableaux(4);
  CHECK(four.t == T(SkewShape({3, 2}, {1}), {{1, 2, 2}, {1, 3, 3}, {2, 1, 1}, {2, 2, 4}}));
  CHECK(four.u == T(SkewShape({3, 2}, {1}), {{1, 2, 1}, {1, 3, 4}, {2, 1, 2}, {2, 2, 3}}));
  const auto three = exceptional_tableaux(3);
  CHECK(three.t == T(SkewShape({2, 2}, {1}), {{1, 2, 2}, {2, 1, 1}, {2, 2, 3}}));
  CHECK_THROWS_AS(exceptional_tableaux(2), Error);

  for (int n = 3; n <= 7; ++n) {
    CAPTURE(n);
    const auto cp = approx_cells(n);
    const auto pair = exceptional_tableaux(n);
    CHECK(pair.t.shape() == SkewShape({n - 1, 2}, {1}));
    CHECK(pair.u.shape() == SkewShape({n - 1, n - 2}, {n - 3}));
    for (const auto& t : {pair.t, pair.u}) {
      CHECK(t.size() == n);
      CHECK(is_standard(t));
      CHECK(is_squashed(t));
      CHECK_FALSE(is_maximal_tableau(t));
      CHECK_FALSE(is_cell_ideal_generating(t, cp));
      CHECK_FALSE(is_cell_ideal_generating_local(t));
    }
  }
}

TEST_CASE("restrictions of cell ideal generating tableaux") {
  for (int n = 2; n <= 6; ++n) {
    const auto cp = rs_cells(n);
    const auto smaller = rs_cells(n - 1);
    auto check_one = [&](const SkewTableau& t) {
      if (!is_cell_ideal_generating(t, cp)) return;
      CHECK(is_cell_ideal_generating(restrict_below(t, n), smaller));
      CHECK(is_cell_ideal_generating(shift(restrict_above(t, 1), -1), smaller));
    };
    if (n <= 5) {
      for (const auto& s : oracle::skew_shapes(n, n))
        for (const auto& t : enumerate_std(s)) check_one(t);
    } else {
      for (const auto& j : all_gensets(n))
        for (const auto& w : min_left_coset_reps(j).members()) check_one(canonical_tableau(j, w));
    }
  }
}

TEST_CASE("listed union of fibers in Sym(6)") {
  const auto report = a5_ideal_check();
  CHECK(report.listed.size() == 12);
  CHECK(report.distinct.size() == 11);
  CHECK(report.listed[2] == report.listed[4]);
  CHECK(report.is_union_of_cells);

  // Independent recomputation: fiber sizes from the hook formula, the union
  // from the brute-force insertion, ideal-ness from inversion sets.
  std::set<std::vector<std::vector<int>>> listed;
  std::size_t hook_total = 0;
  for (const auto& t : report.distinct) {
    std::vector<std::vector<int>> rows;
    for (int i = 1; i <= t.shape().rows(); ++i) {
      rows.emplace_back();
      for (int j = 1; j <= t.shape().lambda().part(i); ++j) rows.back().push_back(t.at(i, j));
    }
    hook_total += oracle::hook_count(row_lengths(rows));
    listed.insert(rows);
  }
  CHECK(report.union_size == hook_total);

  const auto group = oracle::all_perms(6);
  std::set<Permutation> members;
  for (const auto& w : group)
    if (listed.count(oracle::q_symbol(w)) != 0) members.insert(w);
  CHECK(members.size() == report.union_size);
  bool closed = true;
  for (const auto& x : members)
    for (const auto& y : group)
      if (oracle::weak_leq(y, x) && members.count(y) == 0) closed = false;
  CHECK(report.is_weak_ideal == closed);

  CHECK(report.completion_searched == !closed);
  for (const auto& extra : report.completions) {
    std::set<Permutation> bigger = members;
    for (const auto& w : group)
      if (rs_insert(w).q == extra) bigger.insert(w);
    bool ok = true;
    for (const auto& x : bigger)
      for (const auto& y : group)
        if (oracle::weak_leq(y, x) && bigger.count(y) == 0) ok = false;
    CHECK(ok);
  }
}

TEST_CASE("cell method names") {
  CHECK(parse_cell_method("approx") == CellMethod::approx);
  CHECK(parse_cell_method("rs") == CellMethod::rs);
  CHECK(parse_cell_method("local") == CellMethod::local);
  CHECK(to_string(CellMethod::local) == "local");
  CHECK_THROWS_AS(parse_cell_method("kl"), Error);
}
