#include "rscp/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <thread>

#include "rscp/density.hpp"
#include "rscp/error.hpp"
#include "rscp/format.hpp"
#include "rscp/surface.hpp"
#include "rscp/verify.hpp"

namespace rscp::cli {
namespace {

using json = nlohmann::ordered_json;
namespace fs = std::filesystem;

double r9(double x) { return format::round_sig(x, 9); }
double r12(double x) { return format::round_sig(x, 12); }

json state_json(const states::StateLabels& labels, const states::PotentialParams& params,
                const states::QuasiNumbers& q, double (*round)(double)) {
  json j;
  j["labels"] = {{"n", labels.n}, {"l", labels.l}, {"m", labels.m}};
  j["params"] = {{"Z", round(params.Z)}, {"b", round(params.b)}, {"c", round(params.c)}};
  j["quasi"] = {{"m_prime", round(q.m_prime)}, {"gamma1", round(q.gamma1)}, {"k", q.k},
                {"l_prime", round(q.l_prime)},  {"n_r", q.n_r},              {"n_prime", round(q.n_prime)},
                {"lambda", round(q.lambda)},    {"energy", round(q.energy)}};
  return j;
}

json error_json(Errc code, const std::string& message) {
  return {{"error", {{"code", errc_name(code)}, {"message", message}}}};
}

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::io: return kIo;
    case Errc::quadrature_cap: return kVerification;
    default: return kValidation;
  }
}

class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error(Errc::io, what) {}
};

void write_file(const fs::path& path, const std::string& content) {
  if (path.has_parent_path()) {
    std::error_code ec;
    fs::create_directories(path.parent_path(), ec);
    if (ec) throw IoError("cannot create directory " + path.parent_path().string() + ": " + ec.message());
  }
  std::ofstream os(path, std::ios::binary);
  if (!os) throw IoError("cannot open " + path.string() + " for writing");
  os << content;
  if (!os) throw IoError("write failed for " + path.string());
}

void emit(std::ostream& out, const std::string& output, const std::string& content) {
  if (output.empty() || output == "-")
    out << content;
  else
    write_file(output, content);
}

json report_json(const verify::VerificationReport& rep) {
  json j = state_json(rep.labels, rep.params, rep.quasi, r9);
  json checks;
  checks["radial_norm"] = {{"value", r9(rep.radial_norm)}, {"tolerance", rep.norm_tolerance}, {"pass", rep.radial_norm_pass}};
  checks["angular_norm"] = {{"value", r9(rep.angular_norm)}, {"tolerance", rep.norm_tolerance}, {"pass", rep.angular_norm_pass}};
  checks["radial_residual_max"] = {{"value", r9(rep.radial_residual_max)}, {"tolerance", rep.residual_tolerance},
                                   {"pass", rep.radial_residual_pass}};
  checks["angular_residual_max"] = {{"value", r9(rep.angular_residual_max)}, {"tolerance", rep.residual_tolerance},
                                    {"pass", rep.angular_residual_pass}};
  if (rep.grid_mass)
    checks["grid_mass"] = {{"value", r9(*rep.grid_mass)},
                           {"range", {rep.grid_mass_low, rep.grid_mass_high}},
                           {"pass", rep.grid_mass_pass}};
  j["checks"] = checks;
  j["passed"] = rep.passed();
  return j;
}

std::string contours_json(std::span<const surface::ContourSet> sets, const density::DensityGrid& grid) {
  json j = state_json(grid.labels, grid.params, grid.quasi, r9);
  j["plane"] = "x=0, y>=0, z>=0";
  json arr = json::array();
  for (const auto& set : sets) {
    json lines = json::array();
    for (const auto& line : set.polylines) {
      json pts = json::array();
      for (const auto& p : line.points) pts.push_back({r9(p[0]), r9(p[1])});
      lines.push_back({{"closed", line.closed}, {"points", pts}});
    }
    arr.push_back({{"level", r9(set.level)}, {"polylines", lines}});
  }
  j["sets"] = arr;
  return j.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// Single run execution shared by the per-command entry points and sweeps.

struct Artifact {
  std::string kind;
  std::string path;
  std::optional<double> level;
};

struct RunResult {
  std::string name;
  bool ok = true;
  int exit_code = kOk;
  std::string error_code;
  std::string message;
  std::optional<states::QuasiNumbers> quasi;
  std::vector<Artifact> artifacts;
  std::optional<bool> verification_passed;
};

density::GridSpec grid_spec_for(const RunSpec& run, const states::BoundState& state) {
  return {run.n_points, run.extent ? *run.extent : density::auto_extent(state, run.coverage)};
}

RunResult execute_run(const RunSpec& run, const fs::path& dir, unsigned grid_workers) {
  RunResult res;
  res.name = run.name;
  try {
    const states::BoundState state(run.labels, run.params);
    res.quasi = state.quasi();
    std::optional<density::DensityGrid> grid, rel;
    auto need_grid = [&]() -> const density::DensityGrid& {
      if (!grid) grid = density::build_grid(state, grid_spec_for(run, state), grid_workers);
      return *grid;
    };
    auto need_rel = [&]() -> const density::DensityGrid& {
      if (!rel) rel = density::normalize_relative(need_grid());
      return *rel;
    };
    for (const auto& kind : run.outputs) {
      if (kind == "grid") {
        std::ostringstream os;
        format::write_vtk(os, run.relative_grid ? need_rel() : need_grid());
        const std::string file = run.name + ".vtk";
        write_file(dir / file, os.str());
        res.artifacts.push_back({"grid", file, std::nullopt});
      } else if (kind == "isosurface") {
        for (double level : run.levels) {
          auto mesh = surface::marching_cubes(need_rel(), level);
          if (run.cutaway) mesh = surface::apply_cutaway(mesh, need_rel());
          std::ostringstream os;
          format::write_obj(os, mesh, need_rel(), run.cutaway);
          const std::string file = run.name + "_P" + format::num(level) + ".obj";
          write_file(dir / file, os.str());
          res.artifacts.push_back({"isosurface", file, level});
        }
      } else if (kind == "slice") {
        const auto sets = surface::slice_contour(need_rel(), run.slice_levels);
        std::ostringstream os;
        format::write_contours_csv(os, sets, need_rel());
        const std::string file = run.name + "_slice.csv";
        write_file(dir / file, os.str());
        res.artifacts.push_back({"slice", file, std::nullopt});
      } else if (kind == "verify") {
        const auto rep = verify::verify_state(state, 100, &need_grid());
        const std::string file = run.name + "_verify.json";
        write_file(dir / file, report_json(rep).dump(2) + "\n");
        res.artifacts.push_back({"verify", file, std::nullopt});
        res.verification_passed = rep.passed();
        if (!rep.passed()) {
          res.ok = false;
          res.exit_code = kVerification;
          res.error_code = "verification_failed";
          res.message = "numerical verification failed";
        }
      } else {
        throw Error(Errc::domain, "unknown output kind '" + kind + "'");
      }
    }
  } catch (const Error& e) {
    res.ok = false;
    res.exit_code = exit_code_for(e.code());
    res.error_code = errc_name(e.code());
    res.message = e.what();
  }
  return res;
}

// ---------------------------------------------------------------------------

struct StateFlags {
  int n = 1, l = 0, m = 0;
  double Z = 1, b = 0, c = 0;

  void add_to(CLI::App* app) {
    app->add_option("--n", n, "principal label n")->required();
    app->add_option("--l", l, "orbital label l")->required();
    app->add_option("--m", m, "magnetic label m")->required();
    app->add_option("--Z", Z, "nuclear charge")->capture_default_str();
    app->add_option("--b", b, "ring-shaped strength b")->capture_default_str();
    app->add_option("--c", c, "double-ring strength c")->capture_default_str();
  }
  states::StateLabels labels() const { return {n, l, m}; }
  states::PotentialParams params() const { return {Z, b, c}; }
};

struct GridFlags {
  int N = 151;
  std::optional<double> extent;
  double coverage = 0.999;
  unsigned workers = 0;

  void add_to(CLI::App* app) {
    app->add_option("--N", N, "samples per axis (odd)")->capture_default_str();
    app->add_option("--extent", extent, "half extent of the cubic grid in Bohr radii");
    app->add_option("--coverage", coverage, "radial probability captured by the automatic extent")
        ->capture_default_str();
    app->add_option("--workers", workers, "evaluation threads (0 = all cores)");
  }
  void apply(RunSpec& run) const {
    run.n_points = N;
    run.extent = extent;
    run.coverage = coverage;
  }
};

// Runs one output kind for a single state and writes it to `output` (stdout
// when empty or "-").
int single_output(const RunSpec& run, const std::string& output, unsigned workers, std::ostream& out, std::ostream& err) {
  try {
    const states::BoundState state(run.labels, run.params);
    const auto grid = density::build_grid(state, grid_spec_for(run, state), workers);
    std::ostringstream os;
    const std::string& kind = run.outputs.front();
    int code = kOk;
    if (kind == "grid") {
      format::write_vtk(os, run.relative_grid ? density::normalize_relative(grid) : grid);
    } else if (kind == "isosurface") {
      const auto rel = density::normalize_relative(grid);
      auto mesh = surface::marching_cubes(rel, run.levels.front());
      if (run.cutaway) mesh = surface::apply_cutaway(mesh, rel);
      format::write_obj(os, mesh, rel, run.cutaway);
    } else if (kind == "slice-csv" || kind == "slice-json") {
      const auto rel = density::normalize_relative(grid);
      const auto sets = surface::slice_contour(rel, run.slice_levels);
      if (kind == "slice-csv")
        format::write_contours_csv(os, sets, rel);
      else
        os << contours_json(sets, rel);
    } else if (kind == "verify") {
      const auto rep = verify::verify_state(state, 100, &grid);
      os << report_json(rep).dump(2) << "\n";
      if (!rep.passed()) code = kVerification;
    }
    emit(out, output, os.str());
    return code;
  } catch (const Error& e) {
    err << error_json(e.code(), e.what()).dump() << "\n";
    return exit_code_for(e.code());
  }
}

int cmd_state(const StateFlags& f, std::ostream& out) {
  try {
    const auto q = states::map_quantum_numbers(f.labels(), f.params());
    out << state_json(f.labels(), f.params(), q, r12).dump(2) << "\n";
    return kOk;
  } catch (const Error& e) {
    out << error_json(e.code(), e.what()).dump(2) << "\n";
    return exit_code_for(e.code());
  }
}

struct PotentialFlags {
  double Z = 1, b = 0, c = 0;
  std::optional<double> r, theta;
  double from = 0, to = 0;
  int count = 1;
  bool degrees = false;
  std::string output;
};

int cmd_potential(const PotentialFlags& f, std::ostream& out, std::ostream& err) {
  if (f.r.has_value() == f.theta.has_value()) {
    err << error_json(Errc::domain, "exactly one of --r or --theta must be fixed").dump() << "\n";
    return kValidation;
  }
  if (f.count < 1) {
    err << error_json(Errc::domain, "--count must be positive").dump() << "\n";
    return kValidation;
  }
  const states::PotentialParams params{f.Z, f.b, f.c};
  try {
    params.validate();
  } catch (const Error& e) {
    err << error_json(e.code(), e.what()).dump() << "\n";
    return kValidation;
  }
  const double to_rad = f.degrees ? std::numbers::pi / 180 : 1.0;
  std::ostringstream os;
  os << "# rscp potential Z=" << format::num(f.Z) << " b=" << format::num(f.b) << " c=" << format::num(f.c);
  if (f.r)
    os << " r=" << format::num(*f.r) << " coord=theta" << (f.degrees ? "[deg]" : "[rad]") << "\n";
  else
    os << " theta=" << format::num(*f.theta) << (f.degrees ? "[deg]" : "[rad]") << " coord=r\n";
  os << "coord,V\n";
  for (int i = 0; i < f.count; ++i) {
    const double coord = f.count == 1 ? f.from : f.from + (f.to - f.from) * i / (f.count - 1);
    os << format::num(coord) << ',';
    try {
      const double v = f.r ? states::potential_V(params, *f.r, coord * to_rad)
                           : states::potential_V(params, coord, *f.theta * to_rad);
      os << format::num(v);
    } catch (const PoleError&) {
      // poles are left empty
    } catch (const Error& e) {
      err << error_json(e.code(), e.what()).dump() << "\n";
      return kValidation;
    }
    os << "\n";
  }
  try {
    emit(out, f.output, os.str());
  } catch (const Error& e) {
    err << error_json(e.code(), e.what()).dump() << "\n";
    return kIo;
  }
  return kOk;
}

std::string iso_timestamp() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  char buf[32];
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

int cmd_sweep(const std::string& job_path, std::optional<unsigned> workers_override, const std::string& output_override,
              bool timestamp, std::ostream& out, std::ostream& err) {
  std::ifstream in(job_path);
  if (!in) {
    err << error_json(Errc::io, "cannot read job file " + job_path).dump() << "\n";
    return kIo;
  }
  std::stringstream buf;
  buf << in.rdbuf();
  JobSpec job;
  try {
    job = parse_job(buf.str());
  } catch (const Error& e) {
    err << error_json(e.code(), e.what()).dump() << "\n";
    return kValidation;
  }
  if (workers_override) job.workers = *workers_override;
  if (!output_override.empty()) job.output_dir = output_override;
  unsigned workers = job.workers == 0 ? std::max(1u, std::thread::hardware_concurrency()) : job.workers;

  std::vector<RunResult> results(job.runs.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < job.runs.size(); i = next++) results[i] = execute_run(job.runs[i], job.output_dir, 1);
  };
  if (workers <= 1 || job.runs.size() <= 1) {
    // a lone run may still use all workers for its grid
    for (std::size_t i = 0; i < job.runs.size(); ++i) results[i] = execute_run(job.runs[i], job.output_dir, workers);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < std::min<std::size_t>(workers, job.runs.size()); ++w) pool.emplace_back(work);
  }

  json manifest;
  manifest["format"] = "rscp-manifest-1";
  if (timestamp) manifest["timestamp"] = iso_timestamp();
  json runs = json::array();
  int code = kOk;
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& r = results[i];
    const auto& spec = job.runs[i];
    json j;
    j["name"] = r.name;
    j["status"] = r.ok ? "ok" : "error";
    if (r.quasi)
      j["state"] = state_json(spec.labels, spec.params, *r.quasi, r9);
    else
      j["state"] = {{"labels", {{"n", spec.labels.n}, {"l", spec.labels.l}, {"m", spec.labels.m}}},
                    {"params", {{"Z", r9(spec.params.Z)}, {"b", r9(spec.params.b)}, {"c", r9(spec.params.c)}}}};
    if (!r.ok) j["error"] = {{"code", r.error_code}, {"message", r.message}};
    json arts = json::array();
    for (const auto& a : r.artifacts) {
      json aj{{"kind", a.kind}, {"path", a.path}};
      if (a.level) aj["level"] = r9(*a.level);
      arts.push_back(aj);
    }
    j["artifacts"] = arts;
    if (r.verification_passed) j["verification_passed"] = *r.verification_passed;
    runs.push_back(j);
    if (!r.ok) {
      // I/O outranks verification, which outranks validation
      if (r.exit_code == kIo || code == kOk || (code == kValidation && r.exit_code == kVerification)) code = r.exit_code;
    }
  }
  manifest["runs"] = runs;

  try {
    if (job.statistics) {
      std::vector<verify::SweepInput> inputs;
      for (const auto& r : job.runs) inputs.push_back({r.labels, r.params});
      verify::SweepGridSettings settings;
      settings.build_grids = job.statistics_grids;
      settings.levels = job.statistics_levels;
      settings.workers = workers;
      if (!job.runs.empty()) {
        settings.n_points = job.runs.front().n_points;
        settings.coverage = job.runs.front().coverage;
      }
      const auto rows = verify::sweep_statistics(inputs, settings);
      std::ostringstream os;
      os << "name,n,l,m,Z,b,c,status,l_prime,n_prime,energy,mean_r,mean_abs_cos";
      if (job.statistics_grids)
        for (double level : settings.levels) os << ",pole_" << format::num(level);
      os << "\n";
      for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& row = rows[i];
        const auto& in = row.input;
        os << job.runs[i].name << ',' << in.labels.n << ',' << in.labels.l << ',' << in.labels.m << ','
           << format::num(in.params.Z) << ',' << format::num(in.params.b) << ',' << format::num(in.params.c) << ','
           << (row.skipped ? "skipped" : "ok");
        if (row.skipped) {
          os << ",,,,,";
          if (job.statistics_grids)
            for (std::size_t k = 0; k < settings.levels.size(); ++k) os << ',';
        } else {
          os << ',' << format::num(row.quasi.l_prime) << ',' << format::num(row.quasi.n_prime) << ','
             << format::num(row.quasi.energy) << ',' << format::num(row.mean_r) << ',' << format::num(row.mean_abs_cos);
          for (double p : row.pole_concentration) os << ',' << (std::isnan(p) ? std::string() : format::num(p));
        }
        os << "\n";
      }
      write_file(job.output_dir / "statistics.csv", os.str());
      manifest["statistics"] = "statistics.csv";
    }
    write_file(job.output_dir / "manifest.json", manifest.dump(2) + "\n");
  } catch (const Error& e) {
    err << error_json(e.code(), e.what()).dump() << "\n";
    return e.code() == Errc::io ? kIo : kVerification;
  }
  out << "wrote " << (job.output_dir / "manifest.json").string() << " (" << results.size() << " runs)\n";
  return code;
}

}  // namespace

std::vector<double> parse_levels(const std::string& text) {
  std::vector<double> levels;
  auto to_double = [&](const std::string& s) {
    std::size_t pos = 0;
    double v = 0;
    try {
      v = std::stod(s, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos == 0 || pos != s.size()) throw Error(Errc::domain, "bad level value '" + s + "' in '" + text + "'");
    return v;
  };
  if (text.find(':') != std::string::npos) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
    if (parts.size() != 3) throw Error(Errc::domain, "level range must be a:b:step, got '" + text + "'");
    const double a = to_double(parts[0]), b = to_double(parts[1]), step = to_double(parts[2]);
    if (!(step > 0) || b < a) throw Error(Errc::domain, "level range needs step > 0 and b >= a");
    const long count = std::lround(std::floor((b - a) / step + 0.5)) + 1;
    for (long i = 0; i < count; ++i) levels.push_back(a + step * static_cast<double>(i));
  } else {
    std::stringstream ss(text);
    for (std::string p; std::getline(ss, p, ',');) levels.push_back(to_double(p));
  }
  if (levels.empty()) throw Error(Errc::domain, "no levels given");
  return levels;
}

std::string default_run_name(const states::StateLabels& labels, const states::PotentialParams& params) {
  return "n" + std::to_string(labels.n) + "_l" + std::to_string(labels.l) + "_m" + std::to_string(labels.m) + "_Z"
         + format::num(params.Z) + "_b" + format::num(params.b) + "_c" + format::num(params.c);
}

namespace {

template <class T>
T get_or(const json& j, const char* key, T fallback) {
  if (!j.contains(key)) return fallback;
  return j.at(key).get<T>();
}

std::vector<double> levels_from(const json& v) {
  if (v.is_string()) return parse_levels(v.get<std::string>());
  return v.get<std::vector<double>>();
}

void apply_fields(RunSpec& run, const json& j) {
  if (j.contains("n")) run.labels.n = j["n"].get<int>();
  if (j.contains("l")) run.labels.l = j["l"].get<int>();
  if (j.contains("m")) run.labels.m = j["m"].get<int>();
  if (j.contains("Z")) run.params.Z = j["Z"].get<double>();
  if (j.contains("b")) run.params.b = j["b"].get<double>();
  if (j.contains("c")) run.params.c = j["c"].get<double>();
  if (j.contains("N")) run.n_points = j["N"].get<int>();
  if (j.contains("extent")) run.extent = j["extent"].get<double>();
  if (j.contains("coverage")) run.coverage = j["coverage"].get<double>();
  if (j.contains("outputs")) run.outputs = j["outputs"].get<std::vector<std::string>>();
  if (j.contains("levels")) run.levels = levels_from(j["levels"]);
  if (j.contains("slice_levels")) run.slice_levels = levels_from(j["slice_levels"]);
  if (j.contains("cutaway")) run.cutaway = j["cutaway"].get<bool>();
  if (j.contains("relative_grid")) run.relative_grid = j["relative_grid"].get<bool>();
  if (j.contains("name")) run.name = j["name"].get<std::string>();
}

}  // namespace

JobSpec parse_job(const std::string& json_text) {
  JobSpec job;
  try {
    const json j = json::parse(json_text);
    if (!j.is_object()) throw Error(Errc::domain, "job must be a JSON object");
    job.output_dir = get_or<std::string>(j, "output_dir", job.output_dir.string());
    job.workers = get_or<unsigned>(j, "workers", job.workers);
    RunSpec defaults;
    if (j.contains("defaults")) apply_fields(defaults, j["defaults"]);
    defaults.name.clear();

    auto finish = [&](RunSpec run) {
      if (run.name.empty()) run.name = default_run_name(run.labels, run.params);
      for (const auto& kind : run.outputs)
        if (kind != "grid" && kind != "isosurface" && kind != "slice" && kind != "verify")
          throw Error(Errc::domain, "unknown output kind '" + kind + "'");
      job.runs.push_back(std::move(run));
    };
    if (j.contains("runs"))
      for (const auto& r : j["runs"]) {
        RunSpec run = defaults;
        apply_fields(run, r);
        finish(run);
      }
    if (j.contains("matrix")) {
      const auto& mx = j["matrix"];
      const auto labels = mx.at("states").get<std::vector<std::array<int, 3>>>();
      const auto bs = get_or<std::vector<double>>(mx, "b", {defaults.params.b});
      const auto cs = get_or<std::vector<double>>(mx, "c", {defaults.params.c});
      const auto zs = get_or<std::vector<double>>(mx, "Z", {defaults.params.Z});
      // order: state, then b, then c, then Z
      for (const auto& s : labels)
        for (double b : bs)
          for (double c : cs)
            for (double z : zs) {
              RunSpec run = defaults;
              run.labels = {s[0], s[1], s[2]};
              run.params = {z, b, c};
              finish(run);
            }
    }
    if (j.contains("statistics")) {
      const auto& st = j["statistics"];
      if (st.is_boolean()) {
        job.statistics = st.get<bool>();
      } else {
        job.statistics = true;
        if (st.contains("levels")) job.statistics_levels = levels_from(st["levels"]);
        job.statistics_grids = get_or<bool>(st, "grids", false);
      }
    }
  } catch (const json::exception& e) {
    throw Error(Errc::domain, std::string("malformed job: ") + e.what());
  }
  // names must be unique, otherwise artifacts would collide
  for (std::size_t i = 0; i < job.runs.size(); ++i)
    for (std::size_t k = i + 1; k < job.runs.size(); ++k)
      if (job.runs[i].name == job.runs[k].name) throw Error(Errc::domain, "duplicate run name '" + job.runs[i].name + "'");
  return job;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bound states and probability densities of the double ring-shaped Coulomb potential"};
  app.require_subcommand(1);

  StateFlags sf;
  auto* state = app.add_subcommand("state", "print quasi quantum numbers and energy as JSON");
  sf.add_to(state);

  PotentialFlags pf;
  auto* pot = app.add_subcommand("potential", "sample V(r, theta) along r or theta as CSV");
  pot->add_option("--Z", pf.Z)->capture_default_str();
  pot->add_option("--b", pf.b)->capture_default_str();
  pot->add_option("--c", pf.c)->capture_default_str();
  pot->add_option("--r", pf.r, "fixed radius (sweep theta)");
  pot->add_option("--theta", pf.theta, "fixed polar angle (sweep r)");
  pot->add_option("--from", pf.from, "first sample of the swept coordinate")->required();
  pot->add_option("--to", pf.to, "last sample of the swept coordinate");
  pot->add_option("--count", pf.count, "number of samples")->capture_default_str();
  pot->add_flag("--degrees", pf.degrees, "angles in degrees");
  pot->add_option("--output", pf.output, "CSV path (default stdout)");

  StateFlags gsf;
  GridFlags gf;
  std::string grid_out;
  bool grid_relative = false;
  auto* grid = app.add_subcommand("grid", "evaluate the density on an N^3 grid and write VTK");
  gsf.add_to(grid);
  gf.add_to(grid);
  grid->add_flag("--relative", grid_relative, "rescale so the maximum is 100");
  grid->add_option("--output", grid_out, "VTK path (default stdout)");

  StateFlags isf;
  GridFlags igf;
  std::string iso_out;
  double iso_level = 50;
  bool cutaway = false;
  auto* iso = app.add_subcommand("isosurface", "extract an isosurface at a relative level and write OBJ");
  isf.add_to(iso);
  igf.add_to(iso);
  iso->add_option("--level", iso_level, "relative probability value in (0, 100)")->capture_default_str();
  iso->add_flag("--cutaway", cutaway, "remove the x<0, y<0, z>0 octant and cap it");
  iso->add_option("--output", iso_out, "OBJ path (default stdout)");

  StateFlags ssf;
  GridFlags sgf;
  std::string slice_out, slice_levels = "10:100:10", slice_format = "csv";
  auto* slice = app.add_subcommand("slice", "contour the x=0 plane (first quadrant)");
  ssf.add_to(slice);
  sgf.add_to(slice);
  slice->add_option("--levels", slice_levels, "a:b:step or comma list")->capture_default_str();
  slice->add_option("--format", slice_format, "csv or json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  slice->add_option("--output", slice_out, "output path (default stdout)");

  StateFlags vsf;
  GridFlags vgf;
  std::string verify_out;
  auto* ver = app.add_subcommand("verify", "run the numerical verification report (JSON)");
  vsf.add_to(ver);
  vgf.add_to(ver);
  ver->add_option("--output", verify_out, "JSON path (default stdout)");

  std::string job_path, sweep_out;
  std::optional<unsigned> sweep_workers;
  bool with_timestamp = false;
  auto* sweep = app.add_subcommand("sweep", "run a JSON job file and write a manifest");
  sweep->add_option("job", job_path, "job file")->required();
  sweep->add_option("--workers", sweep_workers, "concurrent runs (0 = all cores)");
  sweep->add_option("--output", sweep_out, "output directory (overrides the job file)");
  sweep->add_flag("--timestamp", with_timestamp, "record a timestamp in the manifest");

  std::vector<std::string> argv_store{"rscp"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << error_json(Errc::domain, e.what()).dump() << "\n";
    return kValidation;
  }

  if (state->parsed()) return cmd_state(sf, out);
  if (pot->parsed()) return cmd_potential(pf, out, err);

  auto base_run = [](const StateFlags& s, const GridFlags& g) {
    RunSpec run;
    run.labels = s.labels();
    run.params = s.params();
    g.apply(run);
    return run;
  };
  if (grid->parsed()) {
    RunSpec run = base_run(gsf, gf);
    run.outputs = {"grid"};
    run.relative_grid = grid_relative;
    return single_output(run, grid_out, gf.workers, out, err);
  }
  if (iso->parsed()) {
    RunSpec run = base_run(isf, igf);
    run.outputs = {"isosurface"};
    run.levels = {iso_level};
    run.cutaway = cutaway;
    return single_output(run, iso_out, igf.workers, out, err);
  }
  if (slice->parsed()) {
    RunSpec run = base_run(ssf, sgf);
    run.outputs = {slice_format == "json" ? "slice-json" : "slice-csv"};
    try {
      run.slice_levels = parse_levels(slice_levels);
    } catch (const Error& e) {
      err << error_json(e.code(), e.what()).dump() << "\n";
      return kValidation;
    }
    return single_output(run, slice_out, sgf.workers, out, err);
  }
  if (ver->parsed()) {
    RunSpec run = base_run(vsf, vgf);
    run.outputs = {"verify"};
    return single_output(run, verify_out, vgf.workers, out, err);
  }
  if (sweep->parsed()) return cmd_sweep(job_path, sweep_workers, sweep_out, with_timestamp, out, err);
  return kValidation;
}

}  // namespace rscp::cli
