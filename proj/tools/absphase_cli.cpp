// Command-line surface over the phase-observable library.  Every subcommand
// writes one deterministic report (CSV by default, JSON on request): the
// same invocation always produces byte-identical files.
//
// Exit codes: 0 when the run and all enabled numeric gates pass, 1 when a
// numeric gate fails, 2 for usage, parse and I/O errors.

#include <cctype>
#include <cerrno>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "absphase/classical_limit.hpp"
#include "absphase/classical_oscillator.hpp"
#include "absphase/fock_core.hpp"
#include "absphase/phase_operators.hpp"
#include "absphase/restricted_space.hpp"

namespace {

using absphase::Complex;
using json = nlohmann::ordered_json;

constexpr double kPi = std::numbers::pi;

constexpr int kExitPass = 0;
constexpr int kExitGateFailure = 1;
constexpr int kExitUsage = 2;

// ------------------------------------------------------------- formatting --

// 15 significant decimal digits, dot separator, no locale dependence.
std::string format_value(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.15g", v);
  return std::string(buf);
}

// One table cell: either a formatted number or empty (for undefined cells
// such as the first ratio in a doubling sweep).
struct Cell {
  std::optional<double> value;

  Cell() = default;
  Cell(double v) : value(v) {}  // NOLINT(google-explicit-constructor)
};

// In-memory report table; serialized to CSV or JSON after all gates ran so
// that a failed run never leaves a half-written file behind.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> cells) { rows.push_back(std::move(cells)); }
};

std::string to_csv(const Table& table) {
  std::ostringstream out;
  for (size_t c = 0; c < table.columns.size(); ++c) {
    if (c > 0) out << ',';
    out << table.columns[c];
  }
  out << '\n';
  for (const auto& row : table.rows) {
    for (size_t c = 0; c < row.size(); ++c) {
      if (c > 0) out << ',';
      if (row[c].value.has_value()) out << format_value(*row[c].value);
    }
    out << '\n';
  }
  return out.str();
}

std::string to_json(const Table& table) {
  json rows = json::array();
  for (const auto& row : table.rows) {
    json obj = json::object();
    for (size_t c = 0; c < row.size() && c < table.columns.size(); ++c) {
      if (row[c].value.has_value()) {
        // Round-trip through the fixed decimal formatting so the JSON and
        // CSV outputs state identical numbers.
        obj[table.columns[c]] = std::stod(format_value(*row[c].value));
      } else {
        obj[table.columns[c]] = nullptr;
      }
    }
    rows.push_back(std::move(obj));
  }
  return rows.dump(2) + "\n";
}

// ---------------------------------------------------------------- output ---

struct OutputOptions {
  std::string out_path;  // empty: use the command default below
  std::string format = "csv";
  std::string gnuplot_script;  // empty: no script
};

void add_output_options(CLI::App* cmd, OutputOptions* opts,
                        bool with_gnuplot = true) {
  cmd->add_option("-o,--out", opts->out_path,
                  "Output file (default: <command>.<format> in the output "
                  "directory, which is '.' unless ABSPHASE_OUT_DIR is set)");
  cmd->add_option("--format", opts->format, "Report format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  if (with_gnuplot) {
    cmd->add_option("--gnuplot-script", opts->gnuplot_script,
                    "Also write a gnuplot script that plots the report to "
                    "the given path");
  }
}

std::string resolve_out_path(const OutputOptions& opts,
                             const std::string& default_stem) {
  if (!opts.out_path.empty()) return opts.out_path;
  std::filesystem::path dir = ".";
  if (const char* env = std::getenv("ABSPHASE_OUT_DIR")) {
    if (*env != '\0') dir = env;
  }
  return (dir / (default_stem + "." + opts.format)).string();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open '" + path + "' for writing: " +
                             std::strerror(errno));
  }
  out << content;
  out.flush();
  if (!out) {
    throw std::runtime_error("short write to '" + path + "'");
  }
}

void emit_report(const Table& table, const OutputOptions& opts,
                 const std::string& default_stem) {
  const std::string path = resolve_out_path(opts, default_stem);
  write_file(path, opts.format == "json" ? to_json(table) : to_csv(table));
  std::cout << "wrote " << path << " (" << table.rows.size() << " rows)\n";
}

// Minimal gnuplot script: one curve per y column over the first column.
void emit_gnuplot(const Table& table, const OutputOptions& opts,
                  const std::string& default_stem, const std::string& title) {
  if (opts.gnuplot_script.empty()) return;
  const std::string data = resolve_out_path(opts, default_stem);
  std::ostringstream gp;
  gp << "set datafile separator ','\n";
  gp << "set key autotitle columnhead\n";
  gp << "set title '" << title << "'\n";
  gp << "set xlabel '" << table.columns.front() << "'\n";
  gp << "plot";
  for (size_t c = 1; c < table.columns.size(); ++c) {
    if (c > 1) gp << ',';
    gp << " '" << data << "' using 1:" << c + 1 << " with lines";
  }
  gp << "\n";
  write_file(opts.gnuplot_script, gp.str());
  std::cout << "wrote " << opts.gnuplot_script << "\n";
}

// ----------------------------------------------------------- coefficients --

// Parses a `n,re,im` coefficient file (header required, blank lines allowed)
// into a momentum superposition.  Throws std::runtime_error naming the
// offending line on malformed input.
absphase::MomentumSuperposition read_coefficient_file(
    const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open coefficient file '" + path + "': " +
                             std::strerror(errno));
  }

  absphase::MomentumSuperposition state;
  std::string line;
  int line_number = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (!header_seen) {
      std::string compact;
      for (char ch : line) {
        if (!std::isspace(static_cast<unsigned char>(ch))) compact += ch;
      }
      if (compact != "n,re,im") {
        throw std::runtime_error(path + ":" + std::to_string(line_number) +
                                 ": expected header 'n,re,im', got '" + line +
                                 "'");
      }
      header_seen = true;
      continue;
    }

    std::istringstream row(line);
    std::string field;
    std::vector<std::string> fields;
    while (std::getline(row, field, ',')) fields.push_back(field);
    if (fields.size() != 3) {
      throw std::runtime_error(path + ":" + std::to_string(line_number) +
                               ": expected 3 comma-separated fields, got " +
                               std::to_string(fields.size()));
    }
    try {
      size_t used = 0;
      const int n = std::stoi(fields[0], &used);
      if (used != fields[0].size()) throw std::invalid_argument(fields[0]);
      const double re = std::stod(fields[1], &used);
      if (used != fields[1].size()) throw std::invalid_argument(fields[1]);
      const double im = std::stod(fields[2], &used);
      if (used != fields[2].size()) throw std::invalid_argument(fields[2]);
      state.support.push_back(n);
      state.coeffs.emplace_back(re, im);
    } catch (const std::exception&) {
      throw std::runtime_error(path + ":" + std::to_string(line_number) +
                               ": cannot parse row '" + line + "'");
    }
  }
  if (!header_seen) {
    throw std::runtime_error(path + ": empty coefficient file");
  }
  if (state.support.empty()) {
    throw std::runtime_error(path + ": no coefficient rows after the header");
  }

  // Accept tiny rounding in hand-written files, renormalize exactly; larger
  // deviations are treated as user error.
  double norm2 = 0.0;
  for (const Complex& c : state.coeffs) norm2 += std::norm(c);
  if (std::abs(norm2 - 1.0) > 1e-6) {
    throw std::runtime_error(
        path + ": coefficient norm^2 = " + format_value(norm2) +
        " is not 1 within 1e-6; refusing to renormalize silently");
  }
  const double inv = 1.0 / std::sqrt(norm2);
  for (Complex& c : state.coeffs) c *= inv;
  return state;
}

// ------------------------------------------------------------ subcommands --

struct PhiMatrixArgs {
  int n_max = 16;
  OutputOptions out;
};

int run_phi_matrix(const PhiMatrixArgs& args) {
  const absphase::TruncatedOperator phi = absphase::build_phi_analytic(args.n_max);
  Table table;
  table.columns = {"n", "nprime", "value"};
  for (int n = 0; n <= args.n_max; ++n) {
    for (int m = 0; m <= args.n_max; ++m) {
      const double value = phi.entries(n, m).real();
      if (value == 0.0) continue;  // the zero pattern is exact
      table.add_row({static_cast<double>(n), static_cast<double>(m), value});
    }
  }
  emit_report(table, args.out, "phi_matrix");
  return kExitPass;
}

struct DistributionArgs {
  int n = 0;
  int points = 0;  // 0: choose the default for this n
  OutputOptions out;
};

int run_distribution(const DistributionArgs& args) {
  // Uniform inclusive grid on [0, pi] so the emitted table is directly
  // trapezoid-integrable.  The default point count is odd (the midpoint
  // pi/2 lands on a node) and large enough that the interval count
  // points - 1 can never divide n, which is the aliasing condition under
  // which the trapezoid rule misintegrates cos(2 n phi).
  int points = args.points;
  if (points == 0) points = std::max(513, 2 * args.n + 3);
  if (points < 2) {
    throw CLI::ValidationError("distribution", "--points must be >= 2");
  }
  if (args.n >= 1 && args.n % (points - 1) == 0) {
    throw CLI::ValidationError(
        "distribution",
        "points - 1 = " + std::to_string(points - 1) + " divides n = " +
            std::to_string(args.n) +
            "; the trapezoid rule aliases cos(2 n phi) on that grid, pick a "
            "different --points");
  }

  Table table;
  table.columns = {"phi", "density"};
  const double step = kPi / (points - 1);
  double integral = 0.0;
  double prev = 0.0;
  for (int k = 0; k < points; ++k) {
    const double phi = (k == points - 1) ? kPi : k * step;
    const double density = absphase::number_state_density(args.n, phi);
    table.add_row({phi, density});
    if (k > 0) integral += 0.5 * (prev + density) * step;
    prev = density;
  }

  emit_report(table, args.out, "distribution");
  emit_gnuplot(table, args.out, "distribution",
               "phase density of level " + std::to_string(args.n));

  if (std::abs(integral - 1.0) > 1e-6) {
    std::cerr << "gate failed: emitted table integrates to "
              << format_value(integral) << ", expected 1 within 1e-6\n";
    return kExitGateFailure;
  }
  std::cout << "trapezoid integral " << format_value(integral)
            << " (within 1e-6 of 1)\n";
  return kExitPass;
}

struct LimitSweepArgs {
  std::string observable = "phi";
  double theta = 1.0;
  std::vector<double> nbar_list = {4.0, 16.0, 64.0, 256.0};
  OutputOptions out;
};

absphase::PhaseObservable parse_observable(const std::string& name) {
  using absphase::PhaseObservable;
  if (name == "phi") return PhaseObservable::Phi;
  if (name == "sin") return PhaseObservable::SinPhi;
  if (name == "cos") return PhaseObservable::CosPhi;
  if (name == "sin2") return PhaseObservable::Sin2Phi;
  if (name == "cos2") return PhaseObservable::Cos2Phi;
  throw CLI::ValidationError("limit-sweep", "unknown observable '" + name +
                                                "'");
}

int run_limit_sweep(const LimitSweepArgs& args) {
  const absphase::LimitSweepResult sweep = absphase::limit_sweep(
      parse_observable(args.observable), args.theta, args.nbar_list);

  Table table;
  table.columns = {"nbar", "value", "target", "abs_error"};
  for (size_t i = 0; i < sweep.nbar_list.size(); ++i) {
    table.add_row({sweep.nbar_list[i], sweep.values[i], sweep.target,
                   sweep.errors[i]});
  }
  emit_report(table, args.out, "limit_sweep");
  emit_gnuplot(table, args.out, "limit_sweep",
               args.observable + " at theta = " + format_value(args.theta));

  if (!sweep.monotone_after_first) {
    std::cerr << "gate failed: |value - target| is not non-increasing after "
                 "the first entry\n";
    return kExitGateFailure;
  }
  std::cout << "monotone convergence gate passed; final abs_error "
            << format_value(sweep.errors.back()) << "\n";
  return kExitPass;
}

struct ClassicalArgs {
  double mass = 1.0;
  double omega = 1.0;
  double amplitude = 1.0;
  double phi0 = 0.0;
  double t_max = 10.0;
  int steps = 400;
  OutputOptions out;
};

int run_classical(const ClassicalArgs& args) {
  const absphase::OscillatorParams params{args.mass, args.omega};
  absphase::check_params(params);
  if (!(args.amplitude > 0.0)) {
    throw CLI::ValidationError("classical", "--amplitude must be > 0");
  }
  if (args.steps < 1 || !(args.t_max > 0.0)) {
    throw CLI::ValidationError("classical",
                               "--steps must be >= 1 and --t-max > 0");
  }

  Table table;
  table.columns = {"t", "q", "p", "Q", "P", "deviation"};
  double worst = 0.0;
  for (int k = 0; k <= args.steps; ++k) {
    const double t = args.t_max * k / args.steps;
    const double angle = params.omega * t + args.phi0;
    const double q = args.amplitude * std::sin(angle);
    const double p =
        params.mass * params.omega * args.amplitude * std::cos(angle);
    const absphase::PhasePoint pt =
        absphase::inverse_transform(q, p, params);
    double folded = std::fmod(angle, kPi);
    if (folded < 0.0) folded += kPi;
    const double deviation = absphase::circle_distance_mod_pi(pt.Q, folded);
    worst = std::max(worst, deviation);
    table.add_row({t, q, p, pt.Q, pt.P, deviation});
  }
  emit_report(table, args.out, "classical");
  emit_gnuplot(table, args.out, "classical", "canonical phase recovery");

  const double energy = 0.5 * params.mass * params.omega * params.omega *
                        args.amplitude * args.amplitude;
  const double j_plus = absphase::action_integral(params, energy, +1, 256);
  const double j_minus = absphase::action_integral(params, energy, -1, 256);
  std::cout << "max |Q - (omega t + phi0) mod pi| = " << format_value(worst)
            << "\n";
  std::cout << "action +: " << format_value(j_plus)
            << ", action -: " << format_value(j_minus)
            << ", energy/omega = " << format_value(energy / params.omega)
            << "\n";

  bool pass = true;
  if (!(worst < 1e-9)) {
    std::cerr << "gate failed: trajectory deviation " << format_value(worst)
              << " >= 1e-9\n";
    pass = false;
  }
  if (!(std::abs(j_plus - energy / params.omega) < 1e-6) ||
      !(std::abs(j_minus + energy / params.omega) < 1e-6)) {
    std::cerr << "gate failed: action integrals do not reproduce +-H/omega "
                 "within 1e-6\n";
    pass = false;
  }
  return pass ? kExitPass : kExitGateFailure;
}

struct FiniteDimArgs {
  std::vector<int> m_list = {8, 16, 32, 64, 128, 256, 512, 1024};
  int n = 0;
  int n_prime = 1;
  bool compare_rotator = false;
  OutputOptions out;
};

int run_finite_dim(const FiniteDimArgs& args) {
  bool pass = true;

  Table table;
  table.columns = {"m", "spectrum_error"};
  if (args.compare_rotator) {
    table.columns.push_back("element_error");
    table.columns.push_back("ratio");
  }

  std::vector<double> element_errors;
  if (args.compare_rotator) {
    element_errors =
        absphase::finite_to_rotator_limit(args.n, args.n_prime, args.m_list);
  }

  for (size_t i = 0; i < args.m_list.size(); ++i) {
    const int m = args.m_list[i];
    absphase::FiniteDimConfig cfg;
    cfg.m = m;
    const absphase::Matrix theta = absphase::finite_theta_matrix(cfg);
    Eigen::SelfAdjointEigenSolver<absphase::Matrix> solver(theta);
    if (solver.info() != Eigen::Success) {
      throw std::runtime_error("eigenvalue solve failed for m = " +
                               std::to_string(m));
    }
    double spectrum_error = 0.0;
    const Eigen::VectorXd eigs = solver.eigenvalues();
    for (int l = -m / 2; l <= m / 2; ++l) {
      const double expected = 2.0 * kPi * l / (m + 1);
      spectrum_error =
          std::max(spectrum_error, std::abs(eigs(l + m / 2) - expected));
    }
    if (!(spectrum_error < 1e-10)) {
      std::cerr << "gate failed: m = " << m << " spectrum error "
                << format_value(spectrum_error) << " >= 1e-10\n";
      pass = false;
    }

    std::vector<Cell> row = {static_cast<double>(m), spectrum_error};
    if (args.compare_rotator) {
      row.emplace_back(element_errors[i]);
      if (i > 0 && args.m_list[i] == 2 * args.m_list[i - 1]) {
        const double ratio = element_errors[i] / element_errors[i - 1];
        row.emplace_back(ratio);
        if (args.m_list[i - 1] >= 64 && !(ratio > 0.4 && ratio < 0.6)) {
          std::cerr << "gate failed: error ratio " << format_value(ratio)
                    << " for m " << args.m_list[i - 1] << " -> "
                    << args.m_list[i] << " outside (0.4, 0.6)\n";
          pass = false;
        }
      } else {
        row.emplace_back();  // ratio undefined without an exact doubling
      }
    }
    table.add_row(std::move(row));
  }

  emit_report(table, args.out, "finite_dim");
  emit_gnuplot(table, args.out, "finite_dim",
               "finite-dimensional angle matrix limit");
  if (pass) std::cout << "spectrum and doubling gates passed\n";
  return pass ? kExitPass : kExitGateFailure;
}

struct UncertaintyArgs {
  std::string coeffs_path;
  int random_states = 0;
  unsigned seed = 1;
  OutputOptions out;
};

int run_uncertainty(const UncertaintyArgs& args) {
  std::vector<absphase::MomentumSuperposition> states;
  if (!args.coeffs_path.empty()) {
    states.push_back(read_coefficient_file(args.coeffs_path));
  } else {
    std::mt19937 rng(args.seed);
    for (int i = 0; i < args.random_states; ++i) {
      states.push_back(absphase::random_superposition(rng));
    }
  }

  Table table;
  table.columns = {"state",      "terms",   "dx",       "dp",
                   "product",    "bound",   "comm_im",  "pred_im",
                   "satisfied"};
  bool pass = true;
  for (size_t i = 0; i < states.size(); ++i) {
    const absphase::UncertaintyReport report =
        absphase::uncertainty_check(states[i]);
    const Complex comm = absphase::commutator_expectation(states[i]);
    const Complex pred = absphase::commutator_prediction(states[i]);
    if (!report.satisfied) {
      std::cerr << "gate failed: state " << i
                << " violates dx*dp >= bound\n";
      pass = false;
    }
    if (std::abs(comm - pred) > 1e-10) {
      std::cerr << "gate failed: state " << i
                << " commutator deviates from its closed form by "
                << format_value(std::abs(comm - pred)) << "\n";
      pass = false;
    }
    table.add_row({static_cast<double>(i),
                   static_cast<double>(states[i].support.size()), report.dx,
                   report.dp, report.dx * report.dp, report.bound,
                   comm.imag(), pred.imag(),
                   report.satisfied ? 1.0 : 0.0});
  }
  emit_report(table, args.out, "uncertainty");
  if (pass) {
    std::cout << "uncertainty and commutator gates passed for "
              << states.size() << " state(s)\n";
  }
  return pass ? kExitPass : kExitGateFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Absolute-phase observable toolbox: deterministic CSV/JSON reports "
      "for the truncated-basis phase operator, its classical limits, and "
      "the related box / oscillator analyses"};
  app.require_subcommand(1);

  int jobs = 1;
  app.add_option("-j,--jobs", jobs,
                 "Worker threads for operator assembly (1 = serial "
                 "reference path; results are bitwise identical)")
      ->check(CLI::Range(1, 256))
      ->capture_default_str();

  PhiMatrixArgs phi_args;
  CLI::App* phi_cmd = app.add_subcommand(
      "phi-matrix", "Nonzero matrix elements of the phase observable");
  phi_cmd->add_option("--n-max", phi_args.n_max, "Level cutoff")
      ->check(CLI::Range(1, absphase::kMaxLevels))
      ->capture_default_str();
  add_output_options(phi_cmd, &phi_args.out, /*with_gnuplot=*/false);

  DistributionArgs dist_args;
  CLI::App* dist_cmd = app.add_subcommand(
      "distribution", "Phase density of a number state on [0, pi]");
  dist_cmd->add_option("--n", dist_args.n, "Level index")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  dist_cmd
      ->add_option("--points", dist_args.points,
                   "Grid points (default: odd count >= 513 chosen from n)")
      ->check(CLI::Range(2, 1000000));
  add_output_options(dist_cmd, &dist_args.out);

  LimitSweepArgs sweep_args;
  CLI::App* sweep_cmd = app.add_subcommand(
      "limit-sweep",
      "Coherent-state average of an observable vs its classical value");
  sweep_cmd
      ->add_option("--observable", sweep_args.observable,
                   "One of: phi, sin, cos, sin2, cos2")
      ->check(CLI::IsMember({"phi", "sin", "cos", "sin2", "cos2"}))
      ->capture_default_str();
  sweep_cmd->add_option("--theta", sweep_args.theta, "Coherent phase angle")
      ->capture_default_str();
  sweep_cmd
      ->add_option("--nbar", sweep_args.nbar_list,
                   "Ascending mean excitation numbers")
      ->expected(-1);
  add_output_options(sweep_cmd, &sweep_args.out);

  ClassicalArgs classical_args;
  CLI::App* classical_cmd = app.add_subcommand(
      "classical", "Oscillator trajectory in canonical phase variables");
  classical_cmd->add_option("--mass", classical_args.mass, "Mass")
      ->capture_default_str();
  classical_cmd->add_option("--omega", classical_args.omega,
                            "Angular frequency")
      ->capture_default_str();
  classical_cmd
      ->add_option("--amplitude", classical_args.amplitude,
                   "Trajectory amplitude")
      ->capture_default_str();
  classical_cmd->add_option("--phi0", classical_args.phi0, "Initial phase")
      ->capture_default_str();
  classical_cmd->add_option("--t-max", classical_args.t_max, "Final time")
      ->capture_default_str();
  classical_cmd->add_option("--steps", classical_args.steps, "Time steps")
      ->capture_default_str();
  add_output_options(classical_cmd, &classical_args.out);

  FiniteDimArgs finite_args;
  CLI::App* finite_cmd = app.add_subcommand(
      "finite-dim",
      "Finite-dimensional angle matrix: exact spectrum and large-m limit");
  finite_cmd
      ->add_option("--m-list", finite_args.m_list,
                   "Ascending even dimensions minus one (default "
                   "8 16 ... 1024)")
      ->expected(-1);
  finite_cmd->add_option("--n", finite_args.n, "Row momentum index")
      ->capture_default_str();
  finite_cmd
      ->add_option("--nprime", finite_args.n_prime, "Column momentum index")
      ->capture_default_str();
  finite_cmd->add_flag("--compare-rotator", finite_args.compare_rotator,
                       "Also report |finite - rotator| for the (n, nprime) "
                       "element and its doubling ratio");
  add_output_options(finite_cmd, &finite_args.out);

  UncertaintyArgs unc_args;
  CLI::App* unc_cmd = app.add_subcommand(
      "uncertainty",
      "Uncertainty product and commutator identity for momentum "
      "superpositions in the box");
  CLI::Option* coeffs_opt =
      unc_cmd->add_option("--coeffs", unc_args.coeffs_path,
                          "Coefficient file with header n,re,im");
  CLI::Option* random_opt =
      unc_cmd
          ->add_option("--random-states", unc_args.random_states,
                       "Number of seeded random states")
          ->check(CLI::PositiveNumber);
  unc_cmd->add_option("--seed", unc_args.seed, "Random seed")
      ->capture_default_str();
  coeffs_opt->excludes(random_opt);
  random_opt->excludes(coeffs_opt);
  add_output_options(unc_cmd, &unc_args.out, /*with_gnuplot=*/false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  if (jobs == 1) {
    absphase::set_default_exec(absphase::Exec::Serial);
  } else {
    absphase::set_thread_count(jobs);
    absphase::set_default_exec(absphase::Exec::Parallel);
  }

  try {
    if (phi_cmd->parsed()) return run_phi_matrix(phi_args);
    if (dist_cmd->parsed()) return run_distribution(dist_args);
    if (sweep_cmd->parsed()) return run_limit_sweep(sweep_args);
    if (classical_cmd->parsed()) return run_classical(classical_args);
    if (finite_cmd->parsed()) return run_finite_dim(finite_args);
    if (unc_cmd->parsed()) {
      if (unc_args.coeffs_path.empty() && unc_args.random_states == 0) {
        std::cerr << "uncertainty: pass either --coeffs or --random-states\n";
        return kExitUsage;
      }
      return run_uncertainty(unc_args);
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid argument: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
