// Command-line front end: exact spanning-tree counts of circulant graphs
// with scaled jumps, their square decompositions, Mahler-measure growth
// constants, and the built-in verification sweep.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "circulant/errors.hpp"
#include "circulant/report.hpp"
#include "circulant/verify.hpp"

namespace {

using circulant::ordered_json;

// exit codes beyond the usual 0/1
constexpr int kExitInvalidSpec = 2;
constexpr int kExitDisagreement = 3;
constexpr int kExitPrecision = 4;
constexpr int kExitNotSquare = 5;

struct SpecFlags {
  std::uint64_t beta = 1;
  std::vector<std::uint64_t> s;
  std::vector<std::uint64_t> alpha;
  std::uint64_t n = 0;
  std::string n_range;
};

struct OutputFlags {
  std::string format = "human";
  std::string out_path;
};

void add_spec_flags(CLI::App* cmd, SpecFlags& flags) {
  cmd->add_option("--beta", flags.beta, "multiplier of n in the vertex count");
  cmd->add_option("--s", flags.s, "fixed jumps, comma separated")
      ->required()
      ->delimiter(',');
  cmd->add_option("--alpha", flags.alpha,
                  "scaled jumps (multiples of n), comma separated")
      ->delimiter(',');
  cmd->add_option("--n", flags.n, "the scaling parameter n");
  cmd->add_option("--n-range", flags.n_range, "inclusive range a..b of n");
}

void add_output_flags(CLI::App* cmd, OutputFlags& flags) {
  cmd->add_option("--format", flags.format, "json | csv | human")
      ->check(CLI::IsMember({"json", "csv", "human"}));
  cmd->add_option("--out", flags.out_path, "write output to a file");
}

std::vector<std::uint64_t> resolve_ns(const SpecFlags& flags) {
  std::vector<std::uint64_t> ns;
  if (!flags.n_range.empty()) {
    auto sep = flags.n_range.find("..");
    if (sep == std::string::npos)
      throw CLI::ValidationError("--n-range", "expected the form a..b");
    std::uint64_t a = std::stoull(flags.n_range.substr(0, sep));
    std::uint64_t b = std::stoull(flags.n_range.substr(sep + 2));
    if (a == 0 || b < a)
      throw CLI::ValidationError("--n-range", "need 1 <= a <= b");
    for (std::uint64_t n = a; n <= b; ++n) ns.push_back(n);
  }
  if (flags.n != 0) ns.push_back(flags.n);
  if (ns.empty())
    throw CLI::ValidationError("--n", "one of --n or --n-range is required");
  return ns;
}

void emit(const OutputFlags& out, const std::string& text) {
  if (out.out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(out.out_path);
  if (!file) throw std::runtime_error("cannot open " + out.out_path);
  file << text;
}

std::string join_list(const std::vector<std::uint64_t>& v) {
  std::ostringstream os;
  for (size_t i = 0; i < v.size(); ++i) os << (i ? ";" : "") << v[i];
  return os.str();
}

std::string render_json(const std::vector<ordered_json>& docs) {
  if (docs.size() == 1) return docs.front().dump(2) + "\n";
  ordered_json arr = ordered_json::array();
  for (const auto& d : docs) arr.push_back(d);
  return arr.dump(2) + "\n";
}

// --- tau ---

std::string tau_csv(const std::vector<ordered_json>& docs) {
  std::ostringstream os;
  os << "beta,s,alpha,n,m,method,value,certified,precision_bits\n";
  for (const auto& doc : docs) {
    const auto& spec = doc["spec"];
    auto row = [&](const ordered_json& r) {
      os << spec["beta"] << "," << join_list(spec["s"]) << ","
         << join_list(spec["alpha"]) << "," << spec["n"] << "," << spec["m"]
         << "," << r["method"].get<std::string>() << ","
         << r["value"].get<std::string>() << ","
         << (r["certified"].get<bool>() ? "true" : "false") << ","
         << r["precision_bits"] << "\n";
    };
    if (doc.contains("methods")) {
      for (const auto& r : doc["methods"]) row(r);
    } else {
      row(doc);
    }
  }
  return os.str();
}

std::string tau_human(const std::vector<ordered_json>& docs) {
  std::ostringstream os;
  for (const auto& doc : docs) {
    os << doc["spec"]["label"].get<std::string>()
       << ": tau = " << doc["value"].get<std::string>();
    if (doc.contains("agreement"))
      os << (doc["agreement"].get<bool>() ? "  (all methods agree)"
                                          : "  (METHOD DISAGREEMENT)");
    os << "\n";
    if (doc.contains("methods"))
      for (const auto& r : doc["methods"])
        os << "    " << r["method"].get<std::string>() << " -> "
           << r["value"].get<std::string>() << "  [" << r["precision_bits"]
           << " bits]\n";
  }
  return os.str();
}

// Builds per-n documents; in a range sweep, invalid cells are reported on
// standard error and skipped.  A single-n request propagates the error.
template <class Fn>
std::vector<ordered_json> sweep(const SpecFlags& spec_flags, Fn&& build) {
  std::vector<std::uint64_t> ns = resolve_ns(spec_flags);
  std::vector<ordered_json> docs;
  for (auto n : ns) {
    try {
      circulant::CirculantSpec spec = circulant::validate_spec(
          spec_flags.beta, spec_flags.s, spec_flags.alpha, n);
      docs.push_back(build(spec));
    } catch (const circulant::spec_error& e) {
      if (ns.size() == 1) throw;
      std::cerr << "skipping n=" << n << ": " << e.what() << "\n";
    }
  }
  if (docs.empty())
    throw circulant::spec_error(circulant::spec_error::kind::jump_out_of_range,
                                "no valid n in the requested range");
  return docs;
}

int run_tau(const SpecFlags& spec_flags, const OutputFlags& out,
            circulant::TauOptions opts) {
  bool agree = true;
  std::vector<ordered_json> docs = sweep(spec_flags, [&](const auto& spec) {
    ordered_json doc = circulant::tau_document(spec, opts);
    agree = agree && circulant::tau_document_agrees(doc);
    return doc;
  });
  if (out.format == "json") emit(out, render_json(docs));
  else if (out.format == "csv") emit(out, tau_csv(docs));
  else emit(out, tau_human(docs));
  return agree ? 0 : kExitDisagreement;
}

// --- decompose ---

std::string decompose_csv(const std::vector<ordered_json>& docs) {
  std::ostringstream os;
  os << "beta,s,alpha,n,case,tau,coefficient,a,predicted_coefficient,"
        "matches_prediction\n";
  for (const auto& doc : docs) {
    const auto& spec = doc["spec"];
    os << spec["beta"] << "," << join_list(spec["s"]) << ","
       << join_list(spec["alpha"]) << "," << spec["n"] << ",\""
       << doc["case"].get<std::string>() << "\","
       << doc["tau"].get<std::string>() << "," << doc["coefficient"] << ","
       << doc["a"].get<std::string>() << "," << doc["predicted_coefficient"]
       << "," << (doc["matches_prediction"].get<bool>() ? "true" : "false")
       << "\n";
  }
  return os.str();
}

std::string decompose_human(const std::vector<ordered_json>& docs) {
  std::ostringstream os;
  for (const auto& doc : docs) {
    const auto& prof = doc["parity_profile"];
    os << doc["spec"]["label"].get<std::string>()
       << ": tau = " << doc["tau"].get<std::string>() << " = "
       << doc["coefficient"] << " * " << doc["spec"]["n"] << " * "
       << doc["a"].get<std::string>() << "^2\n";
    os << "    case: " << doc["case"].get<std::string>()
       << "; odd fixed jumps p = " << prof["p_odd_s"]
       << ", odd scaled jumps q = " << prof["q_odd_alpha"];
    if (prof.contains("r")) os << ", squarefree(p) = " << prof["r"];
    if (prof.contains("s_sf")) os << ", squarefree(p+q) = " << prof["s_sf"];
    os << "\n    predicted coefficient " << doc["predicted_coefficient"];
    if (doc["matches_prediction"].get<bool>()) {
      os << " (exact)\n";
    } else {
      os << "; FLAGGED: used " << doc["coefficient"] << " after absorbing "
         << doc["absorbed_square"] << "^2\n";
    }
  }
  return os.str();
}

int run_decompose(const SpecFlags& spec_flags, const OutputFlags& out,
                  circulant::TauOptions opts) {
  std::vector<ordered_json> docs = sweep(spec_flags, [&](const auto& spec) {
    return circulant::decompose_document(spec, opts);
  });
  if (out.format == "json") emit(out, render_json(docs));
  else if (out.format == "csv") emit(out, decompose_csv(docs));
  else emit(out, decompose_human(docs));
  return 0;
}

// --- mahler ---

std::string mahler_csv(const ordered_json& doc) {
  std::ostringstream os;
  const auto& spec = doc["spec"];
  os << "beta,s,alpha,u,measure,log_measure\n";
  for (const auto& e : doc["per_u"])
    os << spec["beta"] << "," << join_list(spec["s"]) << ","
       << join_list(spec["alpha"]) << "," << e["u"] << ","
       << e["measure"]["mid"].get<std::string>() << ","
       << e["log_measure"]["mid"].get<std::string>() << "\n";
  os << "growth_constant,,,," << doc["growth_constant"]["mid"].get<std::string>()
     << ",\n";
  os << "thermodynamic_limit,,,,"
     << doc["thermodynamic_limit"]["mid"].get<std::string>() << ",\n";
  if (doc.contains("convergence")) {
    os << "convergence_n,tau,ratio,,,\n";
    for (const auto& r : doc["convergence"]) {
      if (r.contains("skipped")) {
        os << r["n"] << ",skipped: " << r["skipped"].get<std::string>()
           << ",,,,\n";
      } else {
        os << r["n"] << "," << r["tau"].get<std::string>() << ","
           << r["ratio"]["mid"].get<std::string>() << ",,,\n";
      }
    }
  }
  return os.str();
}

std::string mahler_human(const ordered_json& doc) {
  std::ostringstream os;
  os << doc["spec"]["label"].get<std::string>() << "\n";
  for (const auto& e : doc["per_u"])
    os << "    u=" << e["u"] << "  M = " << e["measure"]["mid"].get<std::string>()
       << "  (log " << e["log_measure"]["mid"].get<std::string>() << ")\n";
  os << "  growth constant A = "
     << doc["growth_constant"]["mid"].get<std::string>() << "\n";
  os << "  growth ~ (" << doc["prefactor"]["num"].get<std::string>() << "/"
     << doc["prefactor"]["den"].get<std::string>() << ") * n * A^n\n";
  os << "  thermodynamic limit = "
     << doc["thermodynamic_limit"]["mid"].get<std::string>() << "\n";
  if (doc.contains("quadrature_gap"))
    os << "  quadrature gap = " << doc["quadrature_gap"].get<std::string>()
       << (doc["quadrature_converged"].get<bool>() ? "" : "  (NOT CONVERGED)")
       << "\n";
  if (doc.contains("convergence")) {
    os << "  convergence of tau * beta * q / (n d^2 delta^2 A^n):\n";
    for (const auto& r : doc["convergence"]) {
      if (r.contains("skipped"))
        os << "    n=" << r["n"]
           << "  skipped: " << r["skipped"].get<std::string>() << "\n";
      else
        os << "    n=" << r["n"] << "  tau=" << r["tau"].get<std::string>()
           << "  ratio=" << r["ratio"]["mid"].get<std::string>() << "\n";
    }
  }
  return os.str();
}

int run_mahler(const SpecFlags& spec_flags, const OutputFlags& out,
               circulant::MahlerOptions opts, std::uint64_t base_n) {
  // base_n picks the family member; the convergence table sweeps --n-range.
  circulant::CirculantSpec spec = circulant::validate_spec(
      spec_flags.beta, spec_flags.s, spec_flags.alpha, base_n);
  ordered_json doc = circulant::mahler_document(spec, opts);
  if (out.format == "json") emit(out, render_json({doc}));
  else if (out.format == "csv") emit(out, mahler_csv(doc));
  else emit(out, mahler_human(doc));
  bool quad_ok =
      !doc.contains("quadrature_converged") || doc["quadrature_converged"].get<bool>();
  return quad_ok ? 0 : kExitPrecision;
}

// --- verify ---

std::string verify_human(const ordered_json& doc) {
  std::ostringstream os;
  if (doc.contains("grid_size"))
    os << "grid: " << doc["grid_size"] << " specs (" << doc["grid_skipped"]
       << " skipped with reasons)\n";
  for (const auto& s : doc["suites"]) {
    os << "  " << s["name"].get<std::string>() << ": passed " << s["passed"]
       << ", failed " << s["failed"] << ", skipped " << s["skipped"];
    if (s["flagged"].get<int>() > 0) os << ", flagged " << s["flagged"];
    if (s.contains("extra_label"))
      os << "  [" << s["extra_label"].get<std::string>() << " = "
         << s["extra"].get<std::string>() << "]";
    os << "\n";
    if (s.contains("failures"))
      for (const auto& f : s["failures"])
        os << "      FAIL " << f.get<std::string>() << "\n";
  }
  os << (doc["ok"].get<bool>() ? "all suites passed\n" : "FAILURES PRESENT\n");
  return os.str();
}

int run_verify(const OutputFlags& out, bool examples_only, int identity_count,
               std::uint64_t seed) {
  std::vector<circulant::SuiteResult> suites;
  circulant::Grid grid;
  if (examples_only) {
    suites.push_back(circulant::suite_reference_examples());
  } else {
    grid = circulant::builtin_grid();
    suites.push_back(circulant::suite_oracle_equivalence(grid));
    suites.push_back(circulant::suite_decomposition(grid));
    suites.push_back(circulant::suite_margins(grid));
    suites.push_back(circulant::suite_measure_agreement(grid));
    suites.push_back(circulant::suite_product_identity(identity_count, seed));
    suites.push_back(circulant::suite_reference_examples());
  }
  ordered_json doc =
      circulant::verify_document(suites, examples_only ? nullptr : &grid);
  if (out.format == "json") emit(out, render_json({doc}));
  else emit(out, verify_human(doc));  // csv falls back to human
  return doc["ok"].get<bool>() ? 0 : kExitDisagreement;
}

// --- laplacian ---

int run_laplacian(const SpecFlags& spec_flags, const OutputFlags& out) {
  std::vector<ordered_json> docs = sweep(spec_flags, [&](const auto& spec) {
    return circulant::laplacian_document(spec);
  });
  emit(out, render_json(docs));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact spanning-tree counts of circulant graphs with scaled jumps: "
      "cross-checked counting, square decompositions, Mahler-measure "
      "asymptotics and a verification sweep."};
  app.require_subcommand(1);

  SpecFlags spec_flags;
  OutputFlags out;

  circulant::TauOptions tau_opts;
  auto* tau_cmd = app.add_subcommand("tau", "count spanning trees");
  add_spec_flags(tau_cmd, spec_flags);
  add_output_flags(tau_cmd, out);
  tau_cmd->add_option("--method", tau_opts.method, "brute | eigen | chebyshev | all")
      ->check(CLI::IsMember({"brute", "eigen", "chebyshev", "all"}));
  tau_cmd->add_option("--precision-max", tau_opts.precision.max,
                      "precision escalation cap in bits");
  tau_cmd->add_option("--bruteforce-cap", tau_opts.bruteforce_cap,
                      "largest vertex count for the determinant route");

  auto* dec_cmd =
      app.add_subcommand("decompose", "tau = c * n * a(n)^2 decomposition");
  add_spec_flags(dec_cmd, spec_flags);
  add_output_flags(dec_cmd, out);
  dec_cmd->add_option("--precision-max", tau_opts.precision.max,
                      "precision escalation cap in bits");

  circulant::MahlerOptions mahler_opts;
  bool no_quadrature = false;
  auto* mah_cmd = app.add_subcommand(
      "mahler", "Mahler measures, growth constant, thermodynamic limit");
  add_spec_flags(mah_cmd, spec_flags);
  add_output_flags(mah_cmd, out);
  mah_cmd->add_option("--target-bits", mahler_opts.target_bits,
                      "precision target for the certified measures");
  mah_cmd->add_flag("--no-quadrature", no_quadrature,
                    "skip the quadrature cross-check");

  auto* lap_cmd =
      app.add_subcommand("laplacian", "emit the Laplacian matrix as JSON");
  add_spec_flags(lap_cmd, spec_flags);
  add_output_flags(lap_cmd, out);

  bool examples_only = false;
  int identity_count = 200;
  std::uint64_t seed = 0x5eed;
  auto* ver_cmd = app.add_subcommand(
      "verify", "run the built-in grid sweep and invariant suites");
  add_output_flags(ver_cmd, out);
  ver_cmd->add_flag("--examples", examples_only,
                    "replay only the worked reference families");
  ver_cmd->add_option("--identity-count", identity_count,
                      "randomized identity instances");
  ver_cmd->add_option("--seed", seed, "seed for the randomized suite");

  CLI11_PARSE(app, argc, argv);

  try {
    if (tau_cmd->parsed()) return run_tau(spec_flags, out, tau_opts);
    if (dec_cmd->parsed()) return run_decompose(spec_flags, out, tau_opts);
    if (mah_cmd->parsed()) {
      mahler_opts.quadrature = !no_quadrature;
      std::uint64_t base_n = spec_flags.n;
      if (!spec_flags.n_range.empty()) {
        mahler_opts.convergence_n = resolve_ns(spec_flags);
        if (base_n == 0) {
          // family member: first n in the range that validates
          for (auto n : mahler_opts.convergence_n) {
            try {
              circulant::validate_spec(spec_flags.beta, spec_flags.s,
                                       spec_flags.alpha, n);
              base_n = n;
              break;
            } catch (const circulant::spec_error&) {
            }
          }
        }
      }
      if (base_n == 0)
        throw CLI::ValidationError("--n", "one of --n or --n-range is required");
      return run_mahler(spec_flags, out, mahler_opts, base_n);
    }
    if (lap_cmd->parsed()) return run_laplacian(spec_flags, out);
    if (ver_cmd->parsed())
      return run_verify(out, examples_only, identity_count, seed);
  } catch (const circulant::spec_error& e) {
    std::cerr << "invalid spec: " << e.what() << "\n";
    return kExitInvalidSpec;
  } catch (const circulant::undefined_squarefree_error& e) {
    std::cerr << "undefined decomposition: " << e.what() << "\n";
    return kExitInvalidSpec;
  } catch (const circulant::not_perfect_square_error& e) {
    std::cerr << "decomposition failure (bug canary): " << e.what() << "\n";
    return kExitNotSquare;
  } catch (const circulant::too_large_error& e) {
    std::cerr << "too large: " << e.what() << "\n";
    return kExitInvalidSpec;
  } catch (const circulant::precision_error& e) {
    std::cerr << "precision exhausted: " << e.what() << "\n";
    return kExitPrecision;
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
