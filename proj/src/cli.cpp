#include "mincone/cli.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "mincone/algebra.hpp"
#include "mincone/catalog.hpp"
#include "mincone/clifford.hpp"
#include "mincone/identities.hpp"
#include "mincone/tables.hpp"

namespace mincone {

namespace {

using ojson = nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kBadInput = 2;

struct ModeFlags {
  bool exact = false;
  int random_trials = 0;
  long bound = 1000000;
  std::uint64_t seed = 1;
};

void add_mode_flags(CLI::App* cmd, ModeFlags& f) {
  auto* ex = cmd->add_flag("--exact", f.exact, "Force exact polynomial expansion");
  auto* rnd = cmd->add_option("--random", f.random_trials,
                              "Force randomized identity testing with N trials")
                  ->check(CLI::PositiveNumber);
  ex->excludes(rnd);
  cmd->add_option("--bound", f.bound, "Sample box [0,B)^n for randomized tests")
      ->capture_default_str();
  cmd->add_option("--seed", f.seed, "Seed for randomized tests")->capture_default_str();
}

IdentityOptions to_options(const ModeFlags& f) {
  IdentityOptions o;
  o.seed = f.seed;
  o.bound = f.bound;
  if (f.exact) {
    o.mode = Mode::Exact;
  } else if (f.random_trials > 0) {
    o.mode = Mode::Random;
    o.trials = f.random_trials;
  }
  return o;
}

ojson double_array(const std::vector<double>& v) {
  ojson a = ojson::array();
  for (double x : v) a.push_back(x);
  return a;
}

ojson peirce_to_json(const PeirceData& p) {
  ojson j;
  j["c"] = double_array(p.c);
  j["length2"] = p.length2;
  j["residual"] = p.residual;
  j["spectrum"] = double_array(p.spectrum);
  j["triple"] = {p.n1, p.n2, p.n3};
  j["multiplicity_one"] = p.n_one;
  j["unbinned"] = double_array(p.unbinned);
  return j;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Verification workbench for cubic minimal cones and their algebras", "mincone"};
  app.require_subcommand(1);
  bool json_out = false;
  app.add_flag("--json", json_out, "Machine-readable output where a human format exists");

  // catalog
  auto* catalog = app.add_subcommand("catalog", "List or emit named cubic forms");
  catalog->require_subcommand(1);
  auto* cat_list = catalog->add_subcommand("list", "List catalog forms");
  auto* cat_emit = catalog->add_subcommand("emit", "Write a catalog form as JSON");
  std::string emit_name, emit_path;
  cat_emit->add_option("name", emit_name, "Catalog name")->required();
  cat_emit->add_option("path", emit_path, "Output file")->required();

  // verify
  auto* verify = app.add_subcommand("verify", "Check differential identities of a cubic form");
  std::string verify_file, verify_check = "all";
  ModeFlags verify_mode;
  verify->add_option("file", verify_file, "Cubic form JSON")->required();
  verify->add_option("--check", verify_check, "radial|eiconal|harmonic|trace2|trace3|all")
      ->check(CLI::IsMember({"radial", "eiconal", "harmonic", "trace2", "trace3", "all"}))
      ->capture_default_str();
  add_mode_flags(verify, verify_mode);

  // spectrum
  auto* spectrum = app.add_subcommand("spectrum", "Find idempotents and Peirce spectra");
  std::string spectrum_file;
  int restarts = 64;
  std::uint64_t spectrum_seed = 0;
  double tol = 1e-6;
  spectrum->add_option("file", spectrum_file, "Cubic form JSON")->required();
  spectrum->add_option("--restarts", restarts, "Number of restarts")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  spectrum->add_option("--seed", spectrum_seed, "Seed (required)")->required();
  spectrum->add_option("--tol", tol, "Eigenvalue binning tolerance")->capture_default_str();

  // classify
  auto* classify_cmd = app.add_subcommand("classify", "Classify a cubic form");
  std::string classify_file;
  ModeFlags classify_mode;
  classify_cmd->add_option("file", classify_file, "Cubic form JSON")->required();
  add_mode_flags(classify_cmd, classify_mode);

  // triples
  auto* triples = app.add_subcommand("triples", "Admissible Peirce triples and their status");
  std::string status_filter = "all";
  bool validate = false;
  std::uint64_t triples_seed = 1;
  int validate_restarts = 16;
  ModeFlags triples_mode;
  triples->add_option("--status", status_filter, "all|realizable|eliminated|open")
      ->check(CLI::IsMember({"all", "realizable", "eliminated", "open"}))
      ->capture_default_str();
  triples->add_flag("--validate", validate, "Run every realizable witness through the pipeline");
  triples->add_option("--restarts", validate_restarts, "Idempotent restarts per witness")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  auto* rnd = triples->add_option("--random", triples_mode.random_trials,
                                  "Randomized radial test trials")
                  ->check(CLI::PositiveNumber);
  triples->add_flag("--exact", triples_mode.exact, "Force exact radial test")->excludes(rnd);
  triples->add_option("--seed", triples_seed, "Seed for validation")->capture_default_str();

  // rho
  auto* rho = app.add_subcommand("rho", "Hurwitz-Radon number");
  long rho_m = 0;
  rho->add_option("m", rho_m, "Positive integer")->required();

  // clifford
  auto* clifford = app.add_subcommand("clifford", "Build a symmetric Clifford system");
  int clifford_q = 0;
  std::string clifford_emit, clifford_cubic_path;
  clifford->add_option("--q", clifford_q, "q (the system has q+1 matrices)")->required();
  clifford->add_option("--emit", clifford_emit, "Write the system JSON here instead of stdout");
  clifford->add_option("--cubic", clifford_cubic_path, "Also write the Clifford cubic form here");

  // cone-sample
  auto* cone = app.add_subcommand("cone-sample", "Sample the zero cone and its mean curvature");
  std::string cone_file;
  int cone_count = 200;
  std::uint64_t cone_seed = 0;
  double threshold = 0.1, curvature_tol = 1e-6;
  bool cone_points = false;
  cone->add_option("file", cone_file, "Cubic form JSON")->required();
  cone->add_option("--count", cone_count, "Regular points wanted")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cone->add_option("--seed", cone_seed, "Seed (required)")->required();
  cone->add_option("--threshold", threshold, "Minimum |Du| after normalization")
      ->capture_default_str();
  cone->add_option("--tol", curvature_tol, "Pass threshold for max |H|")->capture_default_str();
  cone->add_flag("--points", cone_points, "Print every sampled point as a JSON line");

  try {
    std::vector<std::string> args;
    for (int i = argc - 1; i > 0; --i) args.emplace_back(argv[i]);
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    err << "run with --help for usage\n";
    return kBadInput;
  }

  try {
    if (*catalog) {
      if (*cat_list) {
        for (const auto& e : catalog_entries()) {
          if (json_out) {
            ojson j;
            j["name"] = e.name;
            j["dim"] = e.dim;
            j["expected_triple"] =
                e.expected_triple ? ojson(*e.expected_triple) : ojson(nullptr);
            j["triple_source"] = e.triple_source;
            j["description"] = e.description;
            out << j.dump() << "\n";
          } else {
            std::ostringstream triple;
            if (e.expected_triple) {
              const auto& t = *e.expected_triple;
              triple << "(" << t[0] << "," << t[1] << "," << t[2] << ")";
            } else {
              triple << "-";
            }
            out << std::left << std::setw(17) << e.name << " dim " << std::setw(3) << e.dim
                << " triple " << std::setw(11) << triple.str() << " source "
                << std::setw(9) << e.triple_source << " " << e.description << "\n";
          }
        }
        return kOk;
      }
      const CubicForm u = build_catalog_form(emit_name);
      write_cubic_file(u, emit_path);
      return kOk;
    }

    if (*verify) {
      const CubicForm u = read_cubic_file(verify_file);
      const IdentityOptions opt = to_options(verify_mode);
      std::vector<std::string> checks;
      if (verify_check == "all") {
        checks = {"harmonic", "radial", "eiconal", "trace2", "trace3"};
      } else {
        checks = {verify_check};
      }
      bool all_pass = true;
      for (const auto& c : checks) {
        IdentityResult r;
        if (c == "harmonic") {
          r = harmonic_result(u);
        } else if (c == "radial") {
          r = check_radial(u, opt);
        } else if (c == "eiconal") {
          r = check_eiconal(u, opt);
        } else if (c == "trace2") {
          r = trace_identity_quadratic(u, opt);
        } else {
          r = trace_identity_cubic(u, opt);
        }
        all_pass = all_pass && r.pass;
        out << identity_to_json(r).dump() << "\n";
      }
      return all_pass ? kOk : kCheckFailed;
    }

    if (*spectrum) {
      const MetrisedAlgebra A(read_cubic_file(spectrum_file));
      const IdempotentSearch s = find_idempotents(A, restarts, spectrum_seed, tol);
      for (const auto& p : s.idempotents) out << peirce_to_json(p).dump() << "\n";
      if (s.idempotents.empty()) {
        err << "no idempotent found: " << s.diagnostic << "\n";
        return kCheckFailed;
      }
      return kOk;
    }

    if (*classify_cmd) {
      const CubicForm u = read_cubic_file(classify_file);
      out << classification_to_json(classify(u, to_options(classify_mode))).dump() << "\n";
      return kOk;
    }

    if (*triples) {
      if (validate) {
        ValidationOptions vo;
        vo.seed = triples_seed;
        vo.restarts = validate_restarts;
        vo.identity = to_options(triples_mode);
        vo.identity.seed = triples_seed;
        bool ok = true;
        for (const auto& row : cross_validate(vo)) {
          if (row.tested && !row.pass) ok = false;
          if (status_filter != "all" && status_name(row.record.status) != status_filter) continue;
          out << validation_to_json(row).dump() << "\n";
        }
        return ok ? kOk : kCheckFailed;
      }
      for (const auto& r : admissible_triples()) {
        if (status_filter != "all" && status_name(r.status) != status_filter) continue;
        if (json_out) {
          out << triple_to_json(r).dump() << "\n";
        } else {
          std::ostringstream t;
          t << "(" << r.n1 << "," << r.n2 << "," << r.n3 << ")";
          out << std::left << std::setw(12) << t.str() << " dim " << std::setw(3) << r.dim << " "
              << std::setw(11) << status_name(r.status) << " " << r.witness.value_or("-") << "\n";
        }
      }
      return kOk;
    }

    if (*rho) {
      out << hurwitz_radon(rho_m) << "\n";
      return kOk;
    }

    if (*clifford) {
      const CliffordSystem s = build_clifford_system(clifford_q);
      const std::string text = clifford_to_json(s).dump();
      if (clifford_emit.empty()) {
        out << text << "\n";
      } else {
        std::ofstream f(clifford_emit);
        if (!f) throw InvalidInput("cannot write '" + clifford_emit + "'");
        f << text << "\n";
      }
      if (!clifford_cubic_path.empty()) write_cubic_file(clifford_cubic(s), clifford_cubic_path);
      return kOk;
    }

    if (*cone) {
      const CubicForm u = read_cubic_file(cone_file);
      const ConeSample s = sample_cone(u, cone_count, cone_seed, threshold);
      if (cone_points) {
        for (std::size_t i = 0; i < s.points.size(); ++i) {
          ojson j;
          j["x"] = double_array(s.points[i]);
          j["mean_curvature"] = s.curvatures[i];
          out << j.dump() << "\n";
        }
      }
      const bool enough = static_cast<int>(s.points.size()) == cone_count;
      const bool pass = enough && s.max_abs_curvature < curvature_tol;
      ojson j;
      j["check"] = "cone";
      j["pass"] = pass;
      j["points"] = s.points.size();
      j["rejected"] = s.rejected;
      j["segments"] = s.segments;
      j["max_abs_curvature"] = s.max_abs_curvature;
      out << j.dump() << "\n";
      return pass ? kOk : kCheckFailed;
    }
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kBadInput;
  }
  err << "error: no subcommand\n";
  return kBadInput;
}

}  // namespace mincone
