#include "ccg/io_json.hpp"

#include <stdexcept>

namespace ccg {

namespace {

template <class F>
Json matrix_to_json_impl(const Matrix<F>& m) {
  Json j;
  j["field"] = field_name(m.field());
  j["n"] = m.rows();
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.field().to_string(m(i, c)));
    rows.push_back(std::move(row));
  }
  j["entries"] = std::move(rows);
  return j;
}

template <class F>
Matrix<F> matrix_from_json_impl(const F& field, const Json& j) {
  std::size_t n = j.at("n").get<std::size_t>();
  const Json& rows = j.at("entries");
  if (rows.size() != n) throw std::invalid_argument("matrix JSON: row count differs from n");
  Matrix<F> m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) throw std::invalid_argument("matrix JSON: ragged rows");
    for (std::size_t c = 0; c < n; ++c) m(i, c) = field.from_string(rows[i][c].template get<std::string>());
  }
  return m;
}

}  // namespace

Json matrix_to_json(const Matrix<RationalField>& m) { return matrix_to_json_impl(m); }
Json matrix_to_json(const Matrix<PrimeField>& m) { return matrix_to_json_impl(m); }

AnyMatrix matrix_from_json(const Json& j) {
  std::string f = j.at("field").get<std::string>();
  if (f == "Q") return matrix_from_json_impl(RationalField{}, j);
  if (f.rfind("Fp:", 0) == 0) {
    std::uint64_t p = std::stoull(f.substr(3));
    return matrix_from_json_impl(PrimeField(p), j);
  }
  throw std::invalid_argument("matrix JSON: unknown field descriptor '" + f + "'");
}

Json chain_to_json(const CommutingChain<RationalField>& chain) {
  Json j = Json::array();
  for (const auto& m : chain) j.push_back(matrix_to_json(m));
  return j;
}

Json chain_to_json(const CommutingChain<PrimeField>& chain) {
  Json j = Json::array();
  for (const auto& m : chain) j.push_back(matrix_to_json(m));
  return j;
}

AnyChain chain_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("chain JSON: expected a nonempty array of matrices");
  AnyMatrix first = matrix_from_json(j[0]);
  if (std::holds_alternative<Matrix<RationalField>>(first)) {
    CommutingChain<RationalField> chain;
    for (const auto& e : j) chain.push_back(std::get<Matrix<RationalField>>(matrix_from_json(e)));
    return chain;
  }
  CommutingChain<PrimeField> chain;
  for (const auto& e : j) chain.push_back(std::get<Matrix<PrimeField>>(matrix_from_json(e)));
  return chain;
}

Json summary_to_json(const CommutingGraphSummary& s, bool include_timing) {
  Json j;
  j["p"] = s.p;
  j["n"] = s.n;
  j["vertex_count"] = s.vertex_count;
  j["class_count"] = s.class_count;
  j["component_count"] = s.component_count;
  j["connected"] = s.connected;
  j["all_components_cliques"] = s.all_components_cliques;
  if (s.connected)
    j["diameter"] = s.diameter;
  else
    j["diameter"] = nullptr;  // infinite
  Json comps = Json::array();
  for (const auto& c : s.components) {
    Json jc;
    jc["classes"] = c.classes;
    jc["vertices"] = c.vertices;
    jc["clique"] = c.clique;
    jc["diameter"] = c.diameter;
    comps.push_back(std::move(jc));
  }
  j["components"] = std::move(comps);
  if (include_timing) j["wall_time_seconds"] = s.wall_time_seconds;
  return j;
}

Json verdict_to_json(const DiameterVerdict& v) {
  Json j;
  j["p"] = v.p;
  j["n"] = v.n;
  j["connected"] = v.connected;
  if (v.connected) {
    j["lo"] = v.bounds.lo;
    j["hi"] = v.bounds.hi;
    j["exact"] = v.exact();
  } else {
    j["lo"] = nullptr;
    j["hi"] = nullptr;
    j["exact"] = false;
  }
  j["glyph"] = v.glyph();
  if (v.nonclique_note)
    j["nonclique_note"] = *v.nonclique_note;
  else
    j["nonclique_note"] = nullptr;
  Json trace = Json::array();
  for (const auto& t : v.trace) {
    Json jt;
    jt["rule"] = t.rule;
    jt["citation"] = t.citation;
    jt["detail"] = t.detail;
    if (t.disconnects) {
      jt["disconnected"] = true;
    } else {
      jt["lo"] = t.contribution.lo;
      jt["hi"] = t.contribution.hi;
    }
    trace.push_back(std::move(jt));
  }
  j["trace"] = std::move(trace);
  return j;
}

Json witness_report_to_json(const WitnessRunReport& r) {
  Json j;
  j["field"] = r.field;
  j["q"] = r.q;
  j["seed"] = r.seed;
  j["modulus"] = r.modulus;
  j["galois_action"] = r.galois_action;
  j["twist_dimension"] = r.twist_dimension;
  j["u_found"] = r.u_found;
  Json js;
  js["candidates"] = r.search.candidates;
  js["fail_invertible"] = r.search.fail_invertible;
  js["fail_qth_power"] = r.search.fail_qth_power;
  js["fail_shifted_product"] = r.search.fail_shifted_product;
  js["fail_direct_sum"] = r.search.fail_direct_sum;
  j["search"] = std::move(js);
  if (!r.u_found) return j;
  Json jc;
  jc["invertible"] = r.checks.invertible;
  jc["qth_power_scalar"] = r.checks.qth_power_scalar;
  jc["u_times_i_plus_u_invertible"] = r.checks.shifted_product_invertible;
  jc["direct_sum_full_rank"] = r.checks.direct_sum_full_rank;
  jc["direct_sum_rank"] = r.direct_sum_rank_value;
  jc["twist_relation_on_basis"] = r.twist_relation_on_basis;
  j["u_checks"] = std::move(jc);
  j["s_invertible"] = r.s_invertible;
  Json jp;
  jp["trials"] = r.probe.trials;
  jp["failures"] = r.probe.failures;
  jp["seed"] = r.probe.seed;
  j["lemma_probe"] = std::move(jp);
  Json jq;
  jq["trials"] = r.probe_equal_pair.trials;
  jq["failures"] = r.probe_equal_pair.failures;
  jq["seed"] = r.probe_equal_pair.seed;
  j["lemma_probe_equal_pair"] = std::move(jq);
  j["ambient_min_poly_degree"] = r.ambient_degree;
  Json jd;
  jd["joint_commutant_dim"] = r.distance.joint_commutant_dim;
  jd["within_distance_2"] = r.distance.within_distance_2;
  j["distance_probe"] = std::move(jd);
  return j;
}

namespace {
template <class F>
Json witness_run_to_json_impl(const WitnessRun<F>& run, bool include_matrices) {
  Json j = witness_report_to_json(run.report);
  if (include_matrices && run.bundle) {
    j["U"] = matrix_to_json(run.bundle->U);
    j["S"] = matrix_to_json(run.bundle->S);
    if (run.ambient) j["A1"] = matrix_to_json(*run.ambient);
  }
  return j;
}
}  // namespace

Json witness_run_to_json(const WitnessRun<PrimeField>& run, bool include_matrices) {
  return witness_run_to_json_impl(run, include_matrices);
}
Json witness_run_to_json(const WitnessRun<RationalField>& run, bool include_matrices) {
  return witness_run_to_json_impl(run, include_matrices);
}

}  // namespace ccg
