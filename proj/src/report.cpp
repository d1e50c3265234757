#include "circulant/report.hpp"

#include <cstdio>

#include "circulant/arith.hpp"
#include "circulant/errors.hpp"
#include "circulant/laplacian.hpp"

namespace circulant {

namespace {

std::string double_str(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

ordered_json tau_result_json(const TauResult& r) {
  return {{"method", to_string(r.method)},
          {"value", r.value.get_str()},
          {"certified", r.certified},
          {"precision_bits", r.precision_bits}};
}

}  // namespace

ordered_json spec_to_json(const CirculantSpec& spec) {
  return {{"beta", spec.beta},     {"s", spec.s_jumps},
          {"alpha", spec.alpha_jumps}, {"n", spec.n},
          {"m", spec.m},           {"d", spec.d},
          {"delta", spec.delta},   {"label", spec.label()}};
}

ordered_json interval_to_json(const Interval& v, int digits) {
  return {{"mid", v.str(digits)}, {"width", double_str(v.width_upper())}};
}

ordered_json tau_document(const CirculantSpec& spec, const TauOptions& opts) {
  std::vector<TauResult> results;
  bool brute_skipped = false;
  if (opts.method == "brute" || opts.method == "all") {
    if (spec.m <= opts.bruteforce_cap) {
      results.push_back(tau_bruteforce(spec, opts.bruteforce_cap));
    } else if (opts.method == "brute") {
      throw too_large_error("vertex count exceeds the brute-force cap");
    } else {
      brute_skipped = true;
    }
  }
  if (opts.method == "eigen" || opts.method == "all")
    results.push_back(tau_eigenproduct(spec, opts.precision));
  if (opts.method == "chebyshev" || opts.method == "all")
    results.push_back(tau_chebyshev(spec, opts.precision));
  if (opts.method == "all") {
    if (spec.s_jumps == std::vector<std::uint64_t>{1})
      results.push_back(tau_closed_form_s1(spec, opts.precision));
    if (spec.s_jumps == std::vector<std::uint64_t>{1, 2})
      results.push_back(tau_closed_form_s12(spec, opts.precision));
  }

  bool agree = true;
  for (const auto& r : results)
    if (r.value != results.front().value) agree = false;

  int max_bits = 0;
  bool certified = true;
  for (const auto& r : results) {
    max_bits = std::max(max_bits, r.precision_bits);
    certified = certified && r.certified;
  }

  ordered_json doc;
  doc["spec"] = spec_to_json(spec);
  doc["value"] = results.front().value.get_str();
  doc["method"] = opts.method;
  doc["certified"] = certified;
  doc["precision_bits"] = max_bits;
  if (opts.method == "all") {
    ordered_json methods = ordered_json::array();
    for (const auto& r : results) methods.push_back(tau_result_json(r));
    doc["methods"] = methods;
    doc["bruteforce_skipped"] = brute_skipped;
    doc["agreement"] = agree;
  }
  return doc;
}

bool tau_document_agrees(const ordered_json& doc) {
  return !doc.contains("agreement") || doc["agreement"].get<bool>();
}

ordered_json decompose_document(const CirculantSpec& spec,
                                const TauOptions& opts) {
  TauResult tau = tau_chebyshev(spec, opts.precision);
  Decomposition dec = decompose_tau(spec, tau);
  ParityProfile prof = parity_profile(spec);
  ordered_json doc;
  doc["spec"] = spec_to_json(spec);
  doc["tau"] = tau.value.get_str();
  doc["method"] = to_string(tau.method);
  doc["case"] = to_string(dec.case_tag);
  ordered_json profile;
  profile["p_odd_s"] = prof.p_odd_s;
  profile["q_odd_alpha"] = prof.q_odd_alpha;
  if (prof.r) profile["r"] = *prof.r;
  if (prof.s_sf) profile["s_sf"] = *prof.s_sf;
  doc["parity_profile"] = profile;
  doc["predicted_coefficient"] = dec.predicted_c;
  doc["coefficient"] = dec.coefficient;
  doc["a"] = dec.a_n.get_str();
  doc["matches_prediction"] = dec.matches_prediction;
  doc["absorbed_square"] = dec.absorbed_square;
  return doc;
}

ordered_json mahler_document(const CirculantSpec& spec,
                             const MahlerOptions& opts) {
  MahlerReport report =
      asymptotic_constant(spec, opts.target_bits, opts.quadrature);
  ordered_json doc;
  doc["spec"] = spec_to_json(spec);
  doc["q"] = report.q;
  doc["prefactor"] = {{"num", report.prefactor.get_num().get_str()},
                      {"den", report.prefactor.get_den().get_str()}};
  ordered_json per_u = ordered_json::array();
  for (const auto& entry : report.per_u) {
    per_u.push_back({{"u", entry.u},
                     {"measure", interval_to_json(entry.measure)},
                     {"log_measure", interval_to_json(entry.log_measure)}});
  }
  doc["per_u"] = per_u;
  doc["growth_constant"] = interval_to_json(report.growth_constant);
  doc["thermodynamic_limit"] = interval_to_json(report.thermodynamic);
  if (opts.quadrature) {
    doc["quadrature_gap"] = double_str(report.quadrature_gap);
    doc["quadrature_converged"] = report.quadrature_converged;
  }
  if (!opts.convergence_n.empty()) {
    ordered_json rows = ordered_json::array();
    for (const auto& row :
         convergence_report(spec, opts.convergence_n, opts.target_bits)) {
      ordered_json r;
      r["n"] = row.n;
      if (row.applicable) {
        r["tau"] = row.tau.get_str();
        r["ratio"] = interval_to_json(row.ratio);
      } else {
        r["skipped"] = row.reason;
      }
      rows.push_back(r);
    }
    doc["convergence"] = rows;
  }
  return doc;
}

ordered_json laplacian_document(const CirculantSpec& spec) {
  IntegerMatrix lap = build_laplacian(spec);
  ordered_json rows = ordered_json::array();
  for (std::size_t i = 0; i < lap.order; ++i) {
    ordered_json row = ordered_json::array();
    for (std::size_t j = 0; j < lap.order; ++j)
      row.push_back(lap.at(i, j).get_si());
    rows.push_back(row);
  }
  return {{"spec", spec_to_json(spec)}, {"order", lap.order}, {"rows", rows}};
}

ordered_json verify_document(const std::vector<SuiteResult>& suites,
                             const Grid* grid) {
  ordered_json doc;
  if (grid) {
    doc["grid_size"] = grid->specs.size();
    doc["grid_skipped"] = grid->skipped.size();
  }
  ordered_json list = ordered_json::array();
  bool ok = true;
  for (const auto& s : suites) {
    ordered_json j;
    j["name"] = s.name;
    j["passed"] = s.passed;
    j["failed"] = s.failed;
    j["skipped"] = s.skipped;
    j["flagged"] = s.flagged;
    if (!s.extra_label.empty()) {
      j["extra_label"] = s.extra_label;
      j["extra"] = double_str(s.extra);
    }
    if (!s.failures.empty()) j["failures"] = s.failures;
    list.push_back(j);
    ok = ok && s.ok();
  }
  doc["suites"] = list;
  doc["ok"] = ok;
  return doc;
}

}  // namespace circulant
