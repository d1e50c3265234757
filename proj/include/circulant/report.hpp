#pragma once

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

#include "circulant/mahler.hpp"
#include "circulant/spec.hpp"
#include "circulant/treecount.hpp"
#include "circulant/verify.hpp"

namespace circulant {

using ordered_json = nlohmann::ordered_json;

ordered_json spec_to_json(const CirculantSpec& spec);
ordered_json interval_to_json(const Interval& v, int digits = 17);

struct TauOptions {
  std::string method = "all";  // brute | eigen | chebyshev | all
  std::uint64_t bruteforce_cap = 4096;
  Precision precision;
};

// One count document per (spec, method selection).  In "all" mode the
// document carries per-method results, includes the closed forms when they
// apply, and an agreement flag.
ordered_json tau_document(const CirculantSpec& spec, const TauOptions& opts);
bool tau_document_agrees(const ordered_json& doc);

ordered_json decompose_document(const CirculantSpec& spec,
                                const TauOptions& opts);

struct MahlerOptions {
  int target_bits = 64;
  bool quadrature = true;
  std::vector<std::uint64_t> convergence_n;
};
ordered_json mahler_document(const CirculantSpec& spec,
                             const MahlerOptions& opts);

ordered_json laplacian_document(const CirculantSpec& spec);

ordered_json verify_document(const std::vector<SuiteResult>& suites,
                             const Grid* grid);

}  // namespace circulant
