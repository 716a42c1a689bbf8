#include "cellscope/json_io.hpp"

#include "cellscope/error.hpp"

namespace cellscope {

Json tableau_to_json(const SkewTableau& t) {
  Json out;
  out["lambda"] = t.shape().lambda().parts();
  out["mu"] = t.shape().mu().parts();
  out["m"] = t.offset();
  Json entries = Json::array();
  for (const auto& e : t.entries()) entries.push_back({e.row, e.col, e.value});
  out["entries"] = std::move(entries);
  return out;
}

SkewTableau tableau_from_json(const Json& j) {
  try {
    const SkewShape shape(Partition(j.at("lambda").get<std::vector<int>>()),
                          Partition(j.value("mu", std::vector<int>{})));
    std::vector<Entry> entries;
    for (const auto& e : j.at("entries")) {
      if (!e.is_array() || e.size() != 3) {
        throw Error(ErrorKind::parse, "tableau entry " + e.dump() + " is not [row,col,value]");
      }
      entries.push_back({e[0].get<int>(), e[1].get<int>(), e[2].get<int>()});
    }
    return SkewTableau::from_entries(shape, j.value("m", 0), entries);
  } catch (const Json::exception& ex) {
    throw Error(ErrorKind::parse, std::string("malformed tableau JSON: ") + ex.what());
  }
}

Json cell_to_json(const CellPartition& cp, std::size_t k) {
  const auto members = cp.cell(k);
  Json out;
  out["cell_id"] = k;
  out["size"] = members.size();
  out["q_symbol"] = tableau_to_json(rs_insert(members.front()).q);
  Json names = Json::array();
  for (const auto& w : members) names.push_back(to_string(w));
  out["members"] = std::move(names);
  return out;
}

Json record_to_json(const VerificationRecord& r) {
  Json out;
  out["J"] = to_string(r.j);
  out["w"] = to_string(r.w);
  out["is_maximal"] = r.is_maximal;
  out["is_cig"] = r.is_cig;
  out["shape"] = r.shape ? Json(to_string(*r.shape)) : Json(nullptr);
  return out;
}

Json report_summary_json(const VerificationReport& r) {
  Json out;
  out["n"] = r.n;
  out["method"] = std::string(to_string(r.method));
  out["records"] = r.records.size();
  out["qualifying_pairs"] = r.qualifying_pairs;
  out["basic_skew_diagrams"] = r.basic_skew_diagrams;
  Json mismatches = Json::array();
  for (const auto& m : r.mismatches) mismatches.push_back(record_to_json(m));
  out["mismatches"] = std::move(mismatches);
  out["theorem_holds"] = r.theorem_holds();
  return out;
}

Json interval_summary_json(const IntervalClassification& c) {
  Json out;
  out["n"] = c.n;
  out["flagged_pairs"] = c.flagged.size();
  out["expected_pairs"] = c.expected.size();
  out["flagged_equals_expected"] = c.flagged == c.expected;
  out["bijection_failures"] = c.bijection_failures;
  out["holds"] = c.holds();
  return out;
}

Json a5_to_json(const A5Report& r) {
  Json out;
  out["listed_tableaux"] = r.listed.size();
  out["distinct_tableaux"] = r.distinct.size();
  out["union_size"] = r.union_size;
  out["is_weak_ideal"] = r.is_weak_ideal;
  out["is_union_of_left_cells"] = r.is_union_of_cells;
  out["not_w_graph_ideal"] = "NOT CHECKED";
  out["completion_searched"] = r.completion_searched;
  Json completions = Json::array();
  for (const auto& t : r.completions) completions.push_back(tableau_to_json(t));
  out["completions"] = std::move(completions);
  return out;
}

}  // namespace cellscope
