#include "dirac1d/cli.hpp"

#include <array>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dirac1d/io.hpp"
#include "dirac1d/oracle.hpp"
#include "dirac1d/reference.hpp"
#include "dirac1d/spectral.hpp"
#include "dirac1d/wavefunction.hpp"

namespace dirac1d::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Parameters given either as (--mass, --coupling) or as --alpha with g = 1.
struct ParamFlags {
  std::optional<double> mass;
  std::optional<double> coupling;
  std::optional<double> alpha;

  void attach(CLI::App& cmd, bool alpha_only = false) {
    auto* a = cmd.add_option("--alpha", alpha, "dimensionless mass m/sqrt(g); implies g = 1")
                  ->check(CLI::NonNegativeNumber);
    if (alpha_only) return;
    auto* m = cmd.add_option("--mass", mass, "fermion mass m")->check(CLI::NonNegativeNumber);
    auto* g = cmd.add_option("--coupling", coupling, "coupling g of V = g|x|")->check(CLI::PositiveNumber);
    a->excludes(m)->excludes(g);
  }

  PhysicalParams resolve() const {
    if (alpha) return PhysicalParams::from_alpha(*alpha);
    return PhysicalParams::from_mass_coupling(mass.value_or(0.0), coupling.value_or(1.0));
  }
};

// Refinement tolerance: flag, else DIRAC1D_TOL, else the library default.
double refine_tolerance(const std::optional<double>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("DIRAC1D_TOL"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const double value = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(value > 0.0)) {
      throw UsageError(std::string("DIRAC1D_TOL is not a positive number: ") + env);
    }
    return value;
  }
  return kDefaultRefineTol;
}

// Runs `body` against either the caller's stream or the --out file.
int with_output(const std::string& path, std::ostream& fallback, const std::function<int(std::ostream&)>& body) {
  if (path.empty()) return body(fallback);
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot open output file: " + path);
  const int code = body(file);
  file.flush();
  if (!file) throw NumericalError("failed writing " + path);
  return code;
}

int cmd_table1(std::optional<double> tol_flag, std::ostream& out, std::ostream& err) {
  SpectralOptions opts;
  opts.refine_tol = refine_tolerance(tol_flag);

  std::array<std::vector<EigenvalueRecord>, 3> computed;
  for (std::size_t a = 0; a < kReferenceAlphas.size(); ++a) {
    computed[a] = eigenvalues(PhysicalParams::from_alpha(kReferenceAlphas[a]), 5, opts);
  }

  out << "n";
  for (double alpha : kReferenceAlphas) {
    const auto tag = format_number(alpha);
    out << ",nu_alpha" << tag << ",ref_alpha" << tag << ",dev_alpha" << tag;
  }
  out << '\n';

  int failures = 0;
  double worst = 0.0;
  for (std::size_t n = 0; n < 5; ++n) {
    out << n;
    for (std::size_t a = 0; a < kReferenceAlphas.size(); ++a) {
      const double nu = computed[a][n].nu;
      const double ref = kReferenceRoots[a][n];
      const double dev = nu - ref;
      worst = std::max(worst, std::abs(dev));
      out << ',' << format_number(nu) << ',' << format_number(ref) << ',' << format_number(dev);
      if (!(std::abs(dev) <= kReferenceTolerance)) {
        ++failures;
        err << "FAIL n=" << n << " alpha=" << format_number(kReferenceAlphas[a]) << ": nu=" << format_number(nu)
            << " ref=" << format_number(ref) << " |dev|=" << format_number(std::abs(dev)) << " > "
            << format_number(kReferenceTolerance) << '\n';
      }
    }
    out << '\n';
  }
  out << "# max_abs_dev = " << format_number(worst) << ", limit = " << format_number(kReferenceTolerance) << '\n';
  return failures == 0 ? kExitOk : kExitNumerical;
}

int cmd_eigen(const ParamFlags& pf, int count, const std::string& format, std::optional<double> tol_flag,
              std::ostream& out) {
  SpectralOptions opts;
  opts.refine_tol = refine_tolerance(tol_flag);
  const auto records = eigenvalues(pf.resolve(), count, opts);
  if (format == "json") {
    write_eigen_json(out, records);
  } else {
    write_eigen_csv(out, records);
  }
  return kExitOk;
}

int cmd_scan(double alpha, double nu_max, double step, std::ostream& out) {
  if (!(step > 0.0)) throw UsageError("--step must be > 0");
  std::vector<ScanSample> samples;
  const auto n = static_cast<long>(std::floor(nu_max / step + 1e-9));
  samples.reserve(static_cast<std::size_t>(n + 1));
  for (long i = 0; i <= n; ++i) {
    const double nu = static_cast<double>(i) * step;
    samples.push_back({nu, spectral_fn(nu, alpha)});
  }
  write_scan_csv(out, samples);
  return kExitOk;
}

int cmd_wavefunction(const ParamFlags& pf, int index, int points, double x_max, std::optional<double> tol_flag,
                     std::ostream& out) {
  if (points < 3 || points % 2 == 0) throw UsageError("--points must be odd and >= 3");
  SpectralOptions opts;
  opts.refine_tol = refine_tolerance(tol_flag);
  const auto params = pf.resolve();
  const auto records = eigenvalues(params, index + 1, opts);
  const auto profile = assemble(records.back(), params, EnergySign::Positive, x_max, points);
  write_profile_csv(out, profile);
  return kExitOk;
}

int cmd_verify(const ParamFlags& pf, int count, double tolerance, double oracle_step, std::optional<double> tol_flag,
               std::ostream& out, std::ostream& err) {
  SpectralOptions opts;
  opts.refine_tol = refine_tolerance(tol_flag);
  const auto params = pf.resolve();
  const auto spectral = eigenvalues(params, count, opts);
  OracleOptions oracle_opts;
  oracle_opts.step = oracle_step;
  const auto oracle = shoot_eigenvalues(params, count, oracle_opts);

  out << "n,e_spectral,e_oracle,rel_diff\n";
  int failures = 0;
  double worst = 0.0;
  for (int i = 0; i < count; ++i) {
    const double es = spectral[static_cast<std::size_t>(i)].e_plus;
    const double eo = oracle[static_cast<std::size_t>(i)].energy;
    const double rel = std::abs(eo - es) / std::abs(es);
    worst = std::max(worst, rel);
    out << i << ',' << format_number(es) << ',' << format_number(eo) << ',' << format_number(rel) << '\n';
    if (!(rel <= tolerance)) {
      ++failures;
      err << "FAIL n=" << i << ": relative difference " << format_number(rel) << " > " << format_number(tolerance)
          << '\n';
    }
  }
  out << "# max_rel_diff = " << format_number(worst) << ", tolerance = " << format_number(tolerance) << '\n';
  return failures == 0 ? kExitOk : kExitNumerical;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bound states of the 1+1D Dirac equation with scalar potential g|x|", "dirac1d"};
  app.require_subcommand(1);

  std::optional<double> tol_flag;
  auto add_tol = [&](CLI::App* cmd) {
    cmd->add_option("--refine-tol", tol_flag, "root refinement tolerance in nu (overrides DIRAC1D_TOL)")
        ->check(CLI::PositiveNumber);
  };
  std::string out_path;

  auto* table1 = app.add_subcommand("table1", "reproduce the reference table of nu_n for alpha = 0, 1, 2");
  add_tol(table1);

  ParamFlags eigen_pf;
  int eigen_count = 5;
  std::string eigen_format = "csv";
  auto* eigen = app.add_subcommand("eigen", "lowest eigenvalues and energies");
  eigen_pf.attach(*eigen);
  eigen->add_option("--count", eigen_count, "number of levels")->check(CLI::PositiveNumber);
  eigen->add_option("--format", eigen_format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  eigen->add_option("--out", out_path, "output file (default: stdout)");
  add_tol(eigen);

  double scan_alpha = 0.0, scan_nu_max = 5.0, scan_step = 0.05;
  auto* scan = app.add_subcommand("scan", "sample f(nu; alpha) on a nu grid");
  scan->add_option("--alpha", scan_alpha, "dimensionless mass")->check(CLI::NonNegativeNumber);
  scan->add_option("--nu-max", scan_nu_max, "upper end of the grid")->check(CLI::PositiveNumber);
  scan->add_option("--step", scan_step, "grid spacing")->check(CLI::PositiveNumber);
  scan->add_option("--out", out_path, "output file (default: stdout)");

  ParamFlags wf_pf;
  int wf_index = 0, wf_points = kDefaultProfilePoints;
  double wf_x_max = 0.0;
  auto* wavefunction = app.add_subcommand("wavefunction", "normalized profile of one level");
  wf_pf.attach(*wavefunction);
  wavefunction->add_option("--index", wf_index, "level index")->check(CLI::NonNegativeNumber);
  wavefunction->add_option("--points", wf_points, "odd number of grid points");
  wavefunction->add_option("--x-max", wf_x_max, "grid half-width (default: from the decay rule)")
      ->check(CLI::PositiveNumber);
  wavefunction->add_option("--out", out_path, "output file (default: stdout)");
  add_tol(wavefunction);

  ParamFlags verify_pf;
  int verify_count = 5;
  double verify_tolerance = 1e-5, verify_step = 1e-3;
  auto* verify = app.add_subcommand("verify", "compare spectral energies against the shooting oracle");
  verify_pf.attach(*verify);
  verify->add_option("--count", verify_count, "number of levels")->check(CLI::PositiveNumber);
  verify->add_option("--tolerance", verify_tolerance, "allowed relative energy difference")
      ->check(CLI::PositiveNumber);
  verify->add_option("--oracle-step", verify_step, "RK4 step of the oracle")->check(CLI::PositiveNumber);
  add_tol(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*table1) return cmd_table1(tol_flag, out, err);
    if (*eigen) {
      return with_output(out_path, out, [&](std::ostream& os) {
        return cmd_eigen(eigen_pf, eigen_count, eigen_format, tol_flag, os);
      });
    }
    if (*scan) {
      return with_output(out_path, out,
                         [&](std::ostream& os) { return cmd_scan(scan_alpha, scan_nu_max, scan_step, os); });
    }
    if (*wavefunction) {
      return with_output(out_path, out, [&](std::ostream& os) {
        return cmd_wavefunction(wf_pf, wf_index, wf_points, wf_x_max, tol_flag, os);
      });
    }
    if (*verify) return cmd_verify(verify_pf, verify_count, verify_tolerance, verify_step, tol_flag, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  }
  return kExitUsage;
}

}  // namespace dirac1d::cli
