#include "cli.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <variant>
#include <vector>

#include <json.hpp>

#include "ptchain/bethe.hpp"
#include "ptchain/error.hpp"
#include "ptchain/metric.hpp"
#include "ptchain/verify.hpp"

namespace ptchain::cli {

namespace {

using Cell = std::variant<long long, double, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

std::string render(const Cell& c) {
  if (const auto* i = std::get_if<long long>(&c)) return std::to_string(*i);
  if (const auto* d = std::get_if<double>(&c)) return format_number(*d);
  return std::get<std::string>(c);
}

nlohmann::ordered_json to_json(const Cell& c) {
  if (const auto* i = std::get_if<long long>(&c)) return *i;
  if (const auto* d = std::get_if<double>(&c)) {
    if (!std::isfinite(*d)) return nullptr;
    return std::strtod(format_number(*d).c_str(), nullptr);
  }
  return std::get<std::string>(c);
}

void write_csv(const Table& t, std::ostream& os) {
  for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << t.columns[i];
  os << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << render(row[i]);
    os << '\n';
  }
}

void write_json(const Table& t, const RunConfig& cfg, std::ostream& os) {
  nlohmann::ordered_json meta;
  meta["version"] = "0.1.0";
  meta["command"] = std::string(to_string(cfg.command));
  if (cfg.command != Command::Verify) meta["n"] = cfg.n_sites;
  meta["j"] = to_json(cfg.hopping);
  if (cfg.gamma) meta["gamma"] = to_json(*cfg.gamma);
  if (cfg.gamma_min) {
    meta["gamma_min"] = to_json(*cfg.gamma_min);
    meta["gamma_max"] = to_json(*cfg.gamma_max);
    meta["steps"] = cfg.steps;
  }
  if (cfg.command == Command::Verify) meta["n_max"] = cfg.n_max;
  meta["tol"] = to_json(cfg.tol);

  nlohmann::ordered_json records = nlohmann::ordered_json::array();
  for (const auto& row : t.rows) {
    nlohmann::ordered_json rec;
    for (std::size_t i = 0; i < row.size(); ++i) rec[t.columns[i]] = to_json(row[i]);
    records.push_back(std::move(rec));
  }
  nlohmann::ordered_json doc;
  doc["meta"] = std::move(meta);
  doc["records"] = std::move(records);
  os << doc.dump(2) << '\n';
}

std::vector<double> gamma_grid(const RunConfig& cfg) {
  if (cfg.gamma) return {*cfg.gamma};
  std::vector<double> g;
  const double lo = *cfg.gamma_min;
  const double hi = *cfg.gamma_max;
  for (int i = 0; i < cfg.steps; ++i) g.push_back(lo + (hi - lo) * i / (cfg.steps - 1));
  return g;
}

void spectrum_rows(const RunConfig& cfg, double gamma, Table& t) {
  const SpectralSolution sol = solve_spectrum(ChainSpec(cfg.n_sites, gamma, cfg.hopping), cfg.tol);
  long long index = 1;
  for (const Mode& m : sol.modes) {
    const cplx k = m.momentum();
    t.rows.push_back({gamma, index++, k.real(), k.imag(), m.energy.real(), m.energy.imag(),
                      std::string(to_string(sol.phase))});
  }
}

Table spectrum_table(const RunConfig& cfg) {
  Table t{{"gamma", "level_index", "k_re", "k_im", "energy_re", "energy_im", "phase"}, {}};
  for (double g : gamma_grid(cfg)) spectrum_rows(cfg, g, t);
  return t;
}

Table phase_table(const RunConfig& cfg) {
  Table t{{"n", "j", "gamma", "gamma_c", "phase", "real_root_count"}, {}};
  const double gc = gamma_critical(cfg.n_sites, cfg.hopping);
  for (double g : gamma_grid(cfg)) {
    const ChainSpec spec(cfg.n_sites, g, cfg.hopping);
    t.rows.push_back({static_cast<long long>(cfg.n_sites), cfg.hopping, g, gc,
                      std::string(to_string(classify_phase(spec, cfg.tol))),
                      static_cast<long long>(real_root_count(spec))});
  }
  return t;
}

Table metric_table(const RunConfig& cfg) {
  Table t{{"n", "gamma", "row", "col", "value"}, {}};
  for (double g : gamma_grid(cfg)) {
    const MetricDecomposition d = metric_decomposition(ChainSpec(cfg.n_sites, g, cfg.hopping), cfg.tol);
    for (Eigen::Index r = 0; r < d.eta_real.rows(); ++r) {
      for (Eigen::Index c = 0; c < d.eta_real.cols(); ++c) {
        t.rows.push_back({static_cast<long long>(cfg.n_sites), g, static_cast<long long>(r + 1),
                          static_cast<long long>(c + 1), d.eta_real(r, c)});
      }
    }
  }
  return t;
}

Table hermitian_table(const RunConfig& cfg) {
  Table t{{"n", "gamma", "i", "j", "lambda"}, {}};
  for (double g : gamma_grid(cfg)) {
    const HermitianEquivalent he = hermitian_equivalent(ChainSpec(cfg.n_sites, g, cfg.hopping), cfg.tol);
    for (const Coupling& c : he.couplings) {
      t.rows.push_back({static_cast<long long>(cfg.n_sites), g, static_cast<long long>(c.i),
                        static_cast<long long>(c.j), c.lambda});
    }
  }
  return t;
}

Table verify_table(const RunConfig& cfg, bool& all_passed) {
  SuiteOptions opts;
  opts.n_max = cfg.n_max;
  opts.hopping = cfg.hopping;
  opts.tol = cfg.tol;
  Table t{{"check", "n", "gamma", "value", "limit", "status", "error"}, {}};
  all_passed = true;
  for (const CheckResult& r : run_invariant_suite(opts)) {
    all_passed = all_passed && r.passed;
    t.rows.push_back({r.name, static_cast<long long>(r.n_sites), r.gamma, r.value, r.limit,
                      std::string(r.passed ? "pass" : "fail"), r.error});
  }
  return t;
}

}  // namespace

std::string_view to_string(Command command) {
  switch (command) {
    case Command::Spectrum:
      return "spectrum";
    case Command::Sweep:
      return "sweep";
    case Command::Phase:
      return "phase";
    case Command::Metric:
      return "metric";
    case Command::Hermitian:
      return "hermitian";
    case Command::Verify:
      return "verify";
  }
  return "unknown";
}

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  if (value == 0.0) value = 0.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  std::string s(buf);
  if (s == "-0") s = "0";
  return s;
}

void validate(const RunConfig& cfg) {
  if (!(cfg.tol > 0.0)) throw InvalidArgument("--tol must be positive");
  if (!(cfg.hopping > 0.0)) throw InvalidArgument("--j must be positive");
  if (cfg.command == Command::Verify) {
    if (cfg.n_max < 2) throw InvalidArgument("--n-max must be at least 2");
    return;
  }
  if (cfg.n_sites < 2) throw InvalidArgument("--n must be at least 2");
  const bool has_range = cfg.gamma_min || cfg.gamma_max;
  if (has_range) {
    if (!(cfg.gamma_min && cfg.gamma_max)) throw InvalidArgument("--gamma-min and --gamma-max go together");
    if (cfg.gamma) throw InvalidArgument("--gamma cannot be combined with a gamma range");
    if (!(*cfg.gamma_min < *cfg.gamma_max)) throw InvalidArgument("gamma range requires min < max");
    if (cfg.steps < 2) throw InvalidArgument("gamma range requires --steps >= 2");
    if (*cfg.gamma_min < 0.0) throw InvalidArgument("gamma must be non-negative");
  } else if (!cfg.gamma) {
    throw InvalidArgument("--gamma (or --gamma-min/--gamma-max/--steps) is required");
  } else if (*cfg.gamma < 0.0) {
    throw InvalidArgument("gamma must be non-negative");
  }
  if (cfg.command == Command::Sweep && !has_range) throw InvalidArgument("sweep needs --gamma-min/--gamma-max/--steps");
}

int run(const RunConfig& cfg, std::ostream& stdout_stream, std::ostream& stderr_stream) {
  try {
    validate(cfg);
  } catch (const InvalidArgument& e) {
    stderr_stream << "error: " << e.what() << '\n';
    return kExitBadArgs;
  }

  Table table;
  bool passed = true;
  try {
    switch (cfg.command) {
      case Command::Spectrum:
      case Command::Sweep:
        table = spectrum_table(cfg);
        break;
      case Command::Phase:
        table = phase_table(cfg);
        break;
      case Command::Metric:
        table = metric_table(cfg);
        break;
      case Command::Hermitian:
        table = hermitian_table(cfg);
        break;
      case Command::Verify:
        table = verify_table(cfg, passed);
        break;
    }
  } catch (const InvalidArgument& e) {
    stderr_stream << "error: " << e.what() << '\n';
    return kExitBadArgs;
  } catch (const Error& e) {
    stderr_stream << "error: " << e.what() << '\n';
    return kExitFailure;
  }

  std::ofstream file;
  std::ostream* os = &stdout_stream;
  if (!cfg.out.empty()) {
    file.open(cfg.out, std::ios::binary);
    if (!file) {
      stderr_stream << "error: cannot open " << cfg.out << " for writing\n";
      return kExitFailure;
    }
    os = &file;
  }
  if (cfg.format == Format::Csv) {
    write_csv(table, *os);
  } else {
    write_json(table, cfg, *os);
  }
  os->flush();
  if (!*os) {
    stderr_stream << "error: failed to write output\n";
    return kExitFailure;
  }
  if (!passed) {
    stderr_stream << "error: invariant suite reported failures\n";
    return kExitFailure;
  }
  return kExitOk;
}

}  // namespace ptchain::cli
