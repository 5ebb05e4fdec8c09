#include "dgkit/report.hpp"

namespace dgkit::report {

json scalar_vector(const std::vector<Scalar>& v) {
  json arr = json::array();
  for (const auto& s : v) arr.push_back(s.str());
  return arr;
}

json subspace(const GradedSubspace& s) {
  json by_degree = json::object();
  for (const auto& [deg, b] : s.basis()) {
    json rows = json::array();
    for (std::size_t r = 0; r < b.rows(); ++r)
      rows.push_back(scalar_vector(b.row_vector(r)));
    by_degree[std::to_string(deg)] = rows;
  }
  return json{{"basis_by_degree", by_degree}, {"total_dim", s.total_dim()}};
}

json homology(const HomologyReport& h) {
  json dims = json::object();
  for (const auto& [deg, d] : h.homology_dims) dims[std::to_string(deg)] = d;
  json out;
  out["h"] = dims;
  out["acyclic"] = h.acyclic;
  out["unit_preimage"] =
      h.unit_preimage.has_value() ? scalar_vector(*h.unit_preimage) : json();
  return out;
}

json validation(const ValidationReport& r) {
  return json{{"ok", r.ok()}, {"violations", r.violations}};
}

json radical(const RadicalReport& r) {
  json chain = json::array();
  for (const auto& p : r.power_chain) chain.push_back(subspace(p));
  return json{{"dgrad", subspace(r.dgrad)},
              {"method", r.method},
              {"nilpotency", r.nilpotency.has_value() ? json(*r.nilpotency)
                                                      : json()},
              {"power_chain", chain}};
}

json semiprimary(const SemiprimaryReport& r) {
  return json{
      {"quotient_acyclic", r.quotient_acyclic},
      {"quotient_witness", r.quotient_witness.has_value()
                               ? scalar_vector(*r.quotient_witness)
                               : json()},
      {"decomposition_ok", r.decomposition_ok},
      {"quotient_jacobson_semisimple", r.quotient_jacobson_semisimple},
      {"idempotents_lift", r.idempotents_lift},
      {"lift_method", r.lift_method},
      {"verdict", r.verdict},
      {"note", r.note}};
}

json categorical(const CategoricalSemisimpleReport& r) {
  return json{{"acyclic", r.acyclic},
              {"jacobson_semisimple", r.jacobson_semisimple},
              {"verdict", r.verdict},
              {"acyclicity_only_verdict", r.acyclicity_only_verdict},
              {"split_samples", r.split_samples},
              {"split_failures", r.split_failures},
              {"note", r.note}};
}

json jacobson(const JacobsonSemisimpleReport& r) {
  json summands = json::array();
  for (const auto& s : r.summands) summands.push_back(subspace(s));
  return json{{"semisimple", r.semisimple},
              {"module_radical", subspace(r.module_radical)},
              {"summands", summands},
              {"decomposition_complete", r.decomposition_complete},
              {"note", r.note}};
}

json maximal_submodules(const MaximalSubmodules& m) {
  json maximals = json::array();
  for (const auto& s : m.maximals) maximals.push_back(subspace(s));
  json families = json::array();
  for (const auto& f : m.families) {
    json reps = json::array();
    for (const auto& s : f.representatives) reps.push_back(subspace(s));
    families.push_back(json{{"representatives", reps},
                            {"hom_dimension", f.hom_dimension},
                            {"description", f.description}});
  }
  return json{{"maximals", maximals},
              {"families", families},
              {"radical", subspace(m.radical)},
              {"complete", m.complete},
              {"note", m.note}};
}

json composition_series(const CompositionSeries& s) {
  json chain = json::array();
  for (const auto& c : s.chain) chain.push_back(subspace(c));
  json factors = json::array();
  for (const auto& f : s.factors) {
    json dims = json::object();
    for (const auto& [deg, d] : f.dims.dims()) dims[std::to_string(deg)] = d;
    factors.push_back(json{{"dims", dims}, {"iso_tag", f.iso_tag}});
  }
  return json{{"length", s.length()}, {"chain", chain}, {"factors", factors}};
}

json les(const LESReport& r) {
  auto dims_json = [](const std::map<int, std::size_t>& dims) {
    json out = json::object();
    for (const auto& [deg, d] : dims) out[std::to_string(deg)] = d;
    return out;
  };
  json nodes = json::array();
  for (const auto& n : r.nodes)
    nodes.push_back(json{{"position", n.position}, {"exact", n.exact}});
  return json{{"h_sub", dims_json(r.h_sub)},
              {"h_mid", dims_json(r.h_mid)},
              {"h_quot", dims_json(r.h_quot)},
              {"nodes", nodes},
              {"exact", r.exact},
              {"sub_iso_mid",
               r.sub_iso_mid.has_value() ? json(*r.sub_iso_mid) : json()}};
}

json verdict_line(const std::string& suite, const TheoremVerdict& v) {
  json evidence = json::object();
  if (!v.evidence.empty()) evidence = json::parse(v.evidence);
  if (v.skipped) evidence["skipped"] = "hypotheses unverified or out of scale";
  return json{{"suite", suite},
              {"statement", v.statement_id},
              {"instance", v.instance_id},
              {"hypotheses", v.hypotheses_hold},
              {"conclusion", v.conclusion_holds},
              {"evidence", evidence}};
}

std::string dump_line(const json& j) { return j.dump(); }

std::string dump_block(const json& j) { return j.dump(2) + "\n"; }

}  // namespace dgkit::report
