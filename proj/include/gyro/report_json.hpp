#pragma once

#include <string>

#include "json.hpp"

#include "gyro/axioms.hpp"
#include "gyro/gensearch.hpp"
#include "gyro/models.hpp"
#include "gyro/quotient.hpp"
#include "gyro/subgyro.hpp"

namespace gyro {

using Json = nlohmann::ordered_json;

inline Json to_json(const SubsetMask& s) { return Json(s.elements()); }

inline Json table_json(const GyroTable& g) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < g.order(); ++r) {
    const auto row = g.row(static_cast<Element>(r));
    rows.push_back(Json(std::vector<Element>(row.begin(), row.end())));
  }
  return rows;
}

inline Json to_json(const IdentityResult& r) {
  return Json{{"id", r.id},
              {"name", std::string(r.name)},
              {"checked", r.checked},
              {"passed", r.passed},
              {"witness", r.witness ? Json(*r.witness) : Json(nullptr)}};
}

inline Json verify_json(const GyroTable& g, const AxiomReport& axioms, const IdentityReport& ids) {
  Json violations = Json::array();
  for (const auto& v : axioms.violations) {
    violations.push_back({{"axiom", v.axiom}, {"clause", v.clause}, {"witness", v.witness}});
  }
  Json identities = Json::array();
  for (const auto& it : ids.items) identities.push_back(to_json(it));
  return Json{{"order", g.order()},
              {"axioms", {{"G1", axioms.g1_ok}, {"G2", axioms.g2_ok}, {"G3", axioms.g3_ok}, {"G4", axioms.g4_ok}}},
              {"is_group", axioms.is_group},
              {"violations", violations},
              {"identities", identities},
              {"diagnostics", {{"even_property_transposed", to_json(ids.literal_even_form)}}},
              {"ok", axioms.ok() && ids.ok()}};
}

inline Json to_json(const SubClassification& c) {
  Json witnesses = Json::object();
  for (const auto& [k, w] : c.witnesses) witnesses[k] = {{"reason", w.reason}, {"tuple", w.tuple}};
  return Json{{"subset", to_json(c.subset)},
              {"flags",
               {{"subgyrogroup", c.is_sub},
                {"L", c.is_L},
                {"strongly_L", c.is_strongly_L},
                {"normal_sufficient", c.is_normal_sufficient}}},
              {"witnesses", witnesses}};
}

inline Json to_json(const CheckResult& r) {
  Json j{{"ok", r.ok}, {"checked", r.checked}, {"witness", r.witness ? Json(*r.witness) : Json(nullptr)}};
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

inline Json to_json(const QuotientReport& q) {
  Json j{{"subset", to_json(q.subgroup)}};
  if (q.partition) {
    Json cosets = Json::array();
    for (const auto& c : q.partition->cosets) cosets.push_back(to_json(c));
    j["cosets"] = cosets;
    j["projection"] = q.partition->projection;
  } else {
    j["cosets"] = nullptr;
    j["projection"] = nullptr;
  }
  Json checks = Json::object();
  for (const auto& [name, r] : q.checks) checks[name] = to_json(r);
  j["checks"] = checks;
  j["ok"] = q.ok();
  return j;
}

inline Json to_json(const ModelReport& m) {
  Json checks = Json::array();
  const auto& names = model_check_names();
  for (std::size_t i = 0; i < kModelChecks; ++i) {
    checks.push_back({{"name", names[i]},
                      {"max_residual", m.max_residual[i]},
                      {"threshold", m.threshold(i)},
                      {"gated", ModelReport::gated(i)},
                      {"pass", m.passes(i)}});
  }
  return Json{{"model", m.model}, {"samples", m.samples}, {"tol", m.tol},
              {"seed", m.seed},   {"checks", checks},     {"ok", m.ok()}};
}

// Deterministic summary: no timings, no paths beyond catalog file names.
inline Json to_json(const SearchResult& r) {
  Json per_order = Json::array();
  for (const auto& c : r.per_order) {
    per_order.push_back({{"order", c.order},
                         {"gyrogroups", c.gyrogroups},
                         {"generated", c.generated},
                         {"from_catalog", c.from_catalog},
                         {"non_group", c.non_group},
                         {"subgyrogroups", c.subgyrogroups},
                         {"L", c.l_subgyrogroups},
                         {"strongly_L", c.strongly_l},
                         {"normal_sufficient", c.normal_sufficient},
                         {"L_not_strongly_L", c.l_not_strongly_l},
                         {"hierarchy_violations", c.hierarchy_violations}});
  }
  Json witness = nullptr;
  if (r.witness) {
    const auto& w = *r.witness;
    witness = {{"order", w.table.order()},
               {"source", w.source},
               {"table", table_json(w.table)},
               {"subset", to_json(w.subset)},
               {"failing_pair", {w.a, w.b}},
               {"escaping_element", w.escaping},
               {"L_certificate", {{"pairs_checked", w.l_pairs_checked}, {"all_pass", true}}}};
  }
  return Json{{"max_order", r.config.max_order},
              {"isomorph_reject", r.config.isomorph_reject},
              {"catalog", !r.config.catalog_dir.empty()},
              {"scanned", {{"gyrogroups", r.gyrogroups}, {"subgyrogroups", r.subgyrogroups}}},
              {"catalog_rejected", r.catalog_rejected},
              {"per_order_counts", per_order},
              {"witness", witness}};
}

}  // namespace gyro
