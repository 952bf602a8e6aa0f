// harmonia: scale construction, temperament quality, circle-map
// synchronization, three-frequency resonances, and residue pitch
// prediction as deterministic CSV/JSON tables.
//
// Every subcommand writes <subcommand>-<hash>.<ext> into --out (or
// $HARMONIA_OUT, or the current directory), where <hash> is a stable
// digest of the canonical parameter string. Identical parameters produce
// byte-identical files for any worker count.

#include "harmonia/circle_map.hpp"
#include "harmonia/continued_fraction.hpp"
#include "harmonia/farey.hpp"
#include "harmonia/io.hpp"
#include "harmonia/means.hpp"
#include "harmonia/pitch_shift.hpp"
#include "harmonia/qp_map.hpp"
#include "harmonia/scale.hpp"
#include "harmonia/temperament.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace harmonia;

std::filesystem::path output_dir(const std::string& out_flag) {
  if (!out_flag.empty())
    return out_flag;
  if (const char* env = std::getenv("HARMONIA_OUT"); env && *env)
    return env;
  return ".";
}

std::filesystem::path write_output(const std::string& out_flag,
                                   const std::string& subcommand,
                                   const std::string& canonical_params,
                                   const std::string& ext,
                                   const std::string& content) {
  const std::filesystem::path dir = output_dir(out_flag);
  std::filesystem::create_directories(dir);
  const std::filesystem::path path =
      dir / (subcommand + "-" + param_hash(canonical_params) + "." + ext);
  atomic_write(path, content);
  std::cout << path.string() << "\n";
  return path;
}

std::string locked_fields(const std::optional<Ratio>& locked) {
  if (!locked)
    return ",";
  return locked->num().str() + "," + locked->den().str();
}

// "lo:hi:step" -> inclusive sample values.
std::vector<double> parse_range(const std::string& text) {
  std::vector<double> out;
  std::istringstream in(text);
  std::string lo_s, hi_s, step_s;
  if (!std::getline(in, lo_s, ':') || !std::getline(in, hi_s, ':') ||
      !std::getline(in, step_s))
    throw CLI::ValidationError("range", "expected lo:hi:step");
  const double lo = std::stod(lo_s), hi = std::stod(hi_s), step = std::stod(step_s);
  if (!(step > 0) || hi < lo)
    throw CLI::ValidationError("range", "expected lo <= hi and step > 0");
  const long n = static_cast<long>(std::floor((hi - lo) / step + 0.5)) + 1;
  for (long i = 0; i < n; ++i)
    out.push_back(lo + i * step);
  return out;
}

int run(int argc, char** argv) {
  CLI::App app{"Scale construction, temperament analysis, and circle-map "
               "synchronization toolkit"};
  app.require_subcommand(1);

  std::string out_flag;
  std::string format = "csv";
  unsigned workers = 1;
  app.add_option("--out", out_flag, "Output directory (default: $HARMONIA_OUT or .)");
  app.add_option("--format", format, "Output format: csv or json (default csv)")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--workers", workers, "Worker threads for sweeps (default 1); "
                                       "never changes numeric content")
      ->check(CLI::PositiveNumber);

  // --- scale ---------------------------------------------------------------
  auto* cmd_scale = app.add_subcommand("scale", "Construct a scale");
  std::string scale_kind = "zarlino-major";
  unsigned scale_n = 12;
  cmd_scale->add_option("--kind", scale_kind,
                        "pythagorean | zarlino-major | zarlino-minor | "
                        "golden-12 | equal (default zarlino-major)")
      ->check(CLI::IsMember({"pythagorean", "zarlino-major", "zarlino-minor",
                             "golden-12", "equal"}));
  cmd_scale->add_option("--n", scale_n, "Note count for --kind equal (default 12)")
      ->check(CLI::PositiveNumber);

  // --- intervals -----------------------------------------------------------
  app.add_subcommand("intervals", "The thirteen named just intervals");

  // --- temperament ---------------------------------------------------------
  auto* cmd_temp = app.add_subcommand(
      "temperament", "sigma(N) quality sweep over equal temperaments");
  unsigned temp_min = 5, temp_max = 60;
  bool temp_all = false, temp_detail = false;
  cmd_temp->add_option("--min", temp_min, "Smallest note count (default 5)");
  cmd_temp->add_option("--max", temp_max, "Largest note count (default 60)");
  cmd_temp->add_flag("--all-intervals", temp_all,
                     "Use all 13 intervals, not just the 8 consonant ones");
  cmd_temp->add_flag("--detail", temp_detail,
                     "Also write per-interval errors as JSON");

  // --- kepler --------------------------------------------------------------
  auto* cmd_kepler = app.add_subcommand(
      "kepler", "Orbit means from perihelion and aphelion");
  double kep_rmin = 1.0, kep_rmax = 1.0;
  cmd_kepler->add_option("--rmin", kep_rmin, "Perihelion distance")->required();
  cmd_kepler->add_option("--rmax", kep_rmax, "Aphelion distance")->required();

  // Shared circle-map iteration options.
  RotationOptions rot;
  auto add_rotation_flags = [&rot](CLI::App* cmd) {
    cmd->add_option("--n-iter", rot.n_iter, "Measurement iterations (default 100000)");
    cmd->add_option("--n-transient", rot.n_transient, "Transient iterations (default 1000)");
    cmd->add_option("--tol", rot.tol, "Lock tolerance on |rho - p/q| (default 1e-7)");
    cmd->add_option("--qmax", rot.q_max, "Largest lock denominator (default 50)");
  };

  // --- staircase -----------------------------------------------------------
  auto* cmd_stair = app.add_subcommand(
      "staircase", "Devil's staircase rho(Omega) of the sine circle map");
  double stair_K = 1.0;
  double stair_lo = 0.0, stair_hi = 1.0;
  std::size_t stair_points = 1001;
  cmd_stair->add_option("--K", stair_K, "Coupling in [0, 1] (default 1)");
  cmd_stair->add_option("--omega-min", stair_lo, "Grid start (default 0)");
  cmd_stair->add_option("--omega-max", stair_hi, "Grid end (default 1)");
  cmd_stair->add_option("--points", stair_points, "Grid points (default 1001)");
  add_rotation_flags(cmd_stair);

  // --- tongues -------------------------------------------------------------
  auto* cmd_tongues = app.add_subcommand(
      "tongues", "Arnol'd tongue boundaries, or a lock grid over (Omega, K)");
  double tong_K = 0.8;
  unsigned tong_qmax = 12;
  std::string tong_ratio;
  double tong_res = 1e-7;
  bool tong_grid = false;
  std::size_t tong_omega_points = 201, tong_k_points = 21;
  cmd_tongues->add_option("--K", tong_K, "Coupling in (0, 1] (default 0.8)");
  cmd_tongues->add_option("--tongue-qmax", tong_qmax,
                          "Boundaries for every p/q with q <= this (default 12)");
  cmd_tongues->add_option("--ratio", tong_ratio, "Single tongue p/q, e.g. 1/3");
  cmd_tongues->add_option("--resolution", tong_res, "Omega resolution (default 1e-7)");
  cmd_tongues->add_flag("--grid", tong_grid, "Emit (Omega, K, locked_p, locked_q) grid");
  cmd_tongues->add_option("--omega-points", tong_omega_points, "Grid columns (default 201)");
  cmd_tongues->add_option("--k-points", tong_k_points, "Grid rows (default 21)");
  add_rotation_flags(cmd_tongues);

  // --- threefreq -----------------------------------------------------------
  auto* cmd_three = app.add_subcommand(
      "threefreq", "Three-frequency devil's staircase under quasiperiodic forcing");
  double three_K = 0.4, three_eps = 0.4;
  std::string three_f2 = "12/7";
  std::size_t three_points = 501;
  double three_lo = 0.0, three_hi = 1.0;
  ThreeFreqStaircaseOptions three_opts;
  cmd_three->add_option("--K", three_K, "Primary coupling (default 0.4)");
  cmd_three->add_option("--eps", three_eps, "Second-drive amplitude (default 0.4)");
  cmd_three->add_option("--f2", three_f2, "Second forcing frequency (default 12/7)");
  cmd_three->add_option("--points", three_points, "Grid points (default 501)");
  cmd_three->add_option("--omega-min", three_lo, "Grid start (default 0)");
  cmd_three->add_option("--omega-max", three_hi, "Grid end (default 1)");
  cmd_three->add_option("--n-iter", three_opts.n_iter,
                        "Measurement iterations (default 400000)");
  cmd_three->add_option("--max-order", three_opts.max_order,
                        "Largest |p|,|q|,r in annotations (default 30)");
  cmd_three->add_option("--resonance-tol", three_opts.resonance_tol,
                        "Residual bound for annotations (default 1e-4)");

  // --- ramps ---------------------------------------------------------------
  auto* cmd_ramps = app.add_subcommand(
      "ramps", "Resonance labels over the (drive ratio, Omega) plane");
  double ramps_K = 0.4, ramps_eps = 0.4;
  std::size_t ramps_wpoints = 200, ramps_opoints = 200;
  double ramps_wlo = 1.0, ramps_whi = 2.0, ramps_olo = 0.0, ramps_ohi = 1.0;
  RampsGridOptions ramps_opts;
  cmd_ramps->add_option("--K", ramps_K, "Primary coupling (default 0.4)");
  cmd_ramps->add_option("--eps", ramps_eps, "Second-drive amplitude (default 0.4)");
  cmd_ramps->add_option("--w-points", ramps_wpoints, "Drive-ratio samples (default 200)");
  cmd_ramps->add_option("--omega-points", ramps_opoints, "Omega samples (default 200)");
  cmd_ramps->add_option("--w-min", ramps_wlo, "Drive ratio start (default 1)");
  cmd_ramps->add_option("--w-max", ramps_whi, "Drive ratio end (default 2)");
  cmd_ramps->add_option("--omega-min", ramps_olo, "Omega start (default 0)");
  cmd_ramps->add_option("--omega-max", ramps_ohi, "Omega end (default 1)");
  cmd_ramps->add_option("--n-iter", ramps_opts.n_iter,
                        "Iterations per cell (default 10000)");
  cmd_ramps->add_option("--max-order", ramps_opts.max_order,
                        "Largest |p|,|q|,r in labels (default 12)");

  // --- pitch ---------------------------------------------------------------
  auto* cmd_pitch = app.add_subcommand(
      "pitch", "Residue pitch-shift line for a three-partial complex tone");
  unsigned pitch_k = 6;
  double pitch_f0 = 100.0;
  std::string pitch_dw = "-80:80:1";
  std::string pitch_data;
  cmd_pitch->add_option("--k", pitch_k, "Harmonic index of the lowest partial (default 6)")
      ->check(CLI::PositiveNumber);
  cmd_pitch->add_option("--f0", pitch_f0, "Fundamental spacing in Hz (default 100)");
  cmd_pitch->add_option("--dw", pitch_dw, "Shift range lo:hi:step in Hz (default -80:80:1)");
  cmd_pitch->add_option("--data", pitch_data,
                        "Optional experimental CSV (x, P, subject_label) to echo "
                        "alongside the prediction");

  // Global flags (--out, --format, --workers) may appear after the
  // subcommand name; let unmatched subcommand arguments fall through.
  for (CLI::App* sub : app.get_subcommands({}))
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints the usage diagnostic
    return 2;
  }

  if (app.got_subcommand("scale")) {
    Scale s;
    if (scale_kind == "pythagorean") s = pythagorean_core();
    else if (scale_kind == "zarlino-major") s = zarlino_major();
    else if (scale_kind == "zarlino-minor") s = zarlino_minor();
    else if (scale_kind == "golden-12") s = golden_scale_12();
    else s = equal_temperament(scale_n);
    const std::string params = "kind=" + scale_kind +
        (scale_kind == "equal" ? ",n=" + std::to_string(scale_n) : "");
    if (format == "json")
      write_output(out_flag, "scale", params, "json", to_json(s).dump(2) + "\n");
    else
      write_output(out_flag, "scale", params, "csv", scale_to_csv(s));
    return 0;
  }

  if (app.got_subcommand("intervals")) {
    std::string csv = csv_row({"name", "ratio", "cents", "quality"});
    for (const JustInterval& j : just_interval_table())
      csv += csv_row({j.name, j.ratio.str(), format_real(cents_of(j.ratio)),
                      j.consonant ? "consonant" : "dissonant"});
    write_output(out_flag, "intervals", "table1", "csv", csv);
    return 0;
  }

  if (app.got_subcommand("temperament")) {
    const auto intervals = temp_all ? just_interval_table() : consonant_intervals();
    const SweepResult sweep = sigma_sweep(temp_min, temp_max, intervals);
    std::string csv = csv_row({"N", "sigma", "is_local_min"});
    for (const TemperamentReport& r : sweep.reports) {
      const bool is_min = std::find(sweep.local_minima.begin(),
                                    sweep.local_minima.end(),
                                    r.n) != sweep.local_minima.end();
      csv += csv_row({std::to_string(r.n), format_real(r.sigma),
                      is_min ? "true" : "false"});
    }
    const std::string params = "min=" + std::to_string(temp_min) +
                               ",max=" + std::to_string(temp_max) +
                               ",all=" + (temp_all ? "1" : "0");
    write_output(out_flag, "temperament", params, "csv", csv);
    if (temp_detail) {
      nlohmann::json j = nlohmann::json::array();
      for (const TemperamentReport& r : sweep.reports) {
        nlohmann::json jr;
        jr["N"] = r.n;
        jr["sigma"] = r.sigma;
        jr["per_interval"] = nlohmann::json::array();
        for (const IntervalError& e : r.per_interval)
          jr["per_interval"].push_back({{"name", e.name},
                                        {"just_cents", e.just_cents},
                                        {"tempered_cents", e.tempered_cents},
                                        {"error", e.error}});
        j.push_back(jr);
      }
      write_output(out_flag, "temperament-detail", params, "json", j.dump(2) + "\n");
    }
    return 0;
  }

  if (app.got_subcommand("kepler")) {
    const OrbitGeometry g = kepler_orbit_means(kep_rmin, kep_rmax);
    std::string csv = csv_row({"r_min", "r_max", "semimajor", "semiminor",
                               "semilatus", "eccentricity"});
    csv += csv_row({format_real(g.r_min), format_real(g.r_max),
                    format_real(g.semimajor), format_real(g.semiminor),
                    format_real(g.semilatus), format_real(g.eccentricity)});
    write_output(out_flag, "kepler",
                 "rmin=" + format_real(kep_rmin) + ",rmax=" + format_real(kep_rmax),
                 "csv", csv);
    return 0;
  }

  if (app.got_subcommand("staircase")) {
    const auto grid = uniform_grid(stair_lo, stair_hi, stair_points);
    const auto points = devils_staircase(stair_K, grid, rot, workers);
    std::string csv = csv_row({"omega", "rho", "locked_p", "locked_q"});
    for (const StaircasePoint& p : points)
      csv += csv_row({format_real(p.omega), format_real(p.rho),
                      locked_fields(p.locked)});
    const std::string params = "K=" + format_real(stair_K) +
        ",lo=" + format_real(stair_lo) + ",hi=" + format_real(stair_hi) +
        ",points=" + std::to_string(stair_points) +
        ",n=" + std::to_string(rot.n_iter);
    write_output(out_flag, "staircase", params, "csv", csv);
    return 0;
  }

  if (app.got_subcommand("tongues")) {
    if (tong_grid) {
      const auto omegas = uniform_grid(0.0, 1.0, tong_omega_points);
      const auto ks = uniform_grid(0.0, 1.0, tong_k_points);
      std::vector<StaircasePoint> cells(omegas.size() * ks.size());
      parallel_for_index(cells.size(), workers, [&](std::size_t idx) {
        const double K = ks[idx / omegas.size()];
        const double om = omegas[idx % omegas.size()];
        RotationResult r = rotation_number(CircleMapParams(om, K), rot);
        cells[idx] = {om, K, r.locked};  // rho field reused for K
      });
      std::string csv = csv_row({"omega", "K", "locked_p", "locked_q"});
      for (const StaircasePoint& c : cells)
        csv += csv_row({format_real(c.omega), format_real(c.rho),
                        locked_fields(c.locked)});
      const std::string params = "grid,ow=" + std::to_string(tong_omega_points) +
                                 ",kw=" + std::to_string(tong_k_points);
      write_output(out_flag, "tongues", params, "csv", csv);
      return 0;
    }
    std::vector<Ratio> targets;
    if (!tong_ratio.empty())
      targets.push_back(Ratio::parse(tong_ratio));
    else
      targets = farey_sequence(tong_qmax);
    std::vector<TongueRegion> regions(targets.size());
    parallel_for_index(targets.size(), workers, [&](std::size_t i) {
      regions[i] = tongue_interval(targets[i], tong_K, rot, tong_res);
    });
    std::string csv = csv_row({"p", "q", "K", "omega_lo", "omega_hi", "width"});
    for (const TongueRegion& t : regions)
      csv += csv_row({t.ratio.num().str(), t.ratio.den().str(),
                      format_real(t.coupling), format_real(t.omega_lo),
                      format_real(t.omega_hi), format_real(t.width)});
    const std::string params = "K=" + format_real(tong_K) +
        ",qmax=" + std::to_string(tong_qmax) + ",ratio=" + tong_ratio +
        ",res=" + format_real(tong_res);
    write_output(out_flag, "tongues", params, "csv", csv);
    return 0;
  }

  if (app.got_subcommand("threefreq")) {
    const Ratio f2 = Ratio::parse(three_f2);
    const auto grid = uniform_grid(three_lo, three_hi, three_points);
    const auto points = three_freq_staircase(three_K, three_eps, f2.to_double(),
                                             grid, three_opts, workers);
    std::string csv = csv_row({"omega", "f3", "p", "q", "r", "residual"});
    for (const ThreeFreqPoint& p : points) {
      if (p.resonance)
        csv += csv_row({format_real(p.omega), format_real(p.f3),
                        std::to_string(p.resonance->p),
                        std::to_string(p.resonance->q),
                        std::to_string(p.resonance->r),
                        format_real(p.resonance->residual)});
      else
        csv += csv_row({format_real(p.omega), format_real(p.f3), "", "", "", ""});
    }
    const std::string params = "K=" + format_real(three_K) +
        ",eps=" + format_real(three_eps) + ",f2=" + three_f2 +
        ",points=" + std::to_string(three_points) +
        ",n=" + std::to_string(three_opts.n_iter);
    write_output(out_flag, "threefreq", params, "csv", csv);
    return 0;
  }

  if (app.got_subcommand("ramps")) {
    const auto wgrid = uniform_grid(ramps_wlo, ramps_whi, ramps_wpoints);
    const auto ogrid = uniform_grid(ramps_olo, ramps_ohi, ramps_opoints);
    const auto cells = ramps_grid(wgrid, ogrid, ramps_K, ramps_eps, ramps_opts,
                                  workers);
    std::string csv = csv_row({"w", "omega", "f3", "p", "q", "r"});
    for (const RampsCell& c : cells) {
      if (c.resonance)
        csv += csv_row({format_real(c.drive_ratio), format_real(c.omega),
                        format_real(c.f3), std::to_string(c.resonance->p),
                        std::to_string(c.resonance->q),
                        std::to_string(c.resonance->r)});
      else
        csv += csv_row({format_real(c.drive_ratio), format_real(c.omega),
                        format_real(c.f3), "", "", "unlocked"});
    }
    const std::string params = "K=" + format_real(ramps_K) +
        ",eps=" + format_real(ramps_eps) +
        ",w=" + std::to_string(ramps_wpoints) +
        ",o=" + std::to_string(ramps_opoints) +
        ",n=" + std::to_string(ramps_opts.n_iter);
    write_output(out_flag, "ramps", params, "csv", csv);
    return 0;
  }

  if (app.got_subcommand("pitch")) {
    const PitchLine line = pitch_shift_line(pitch_k, pitch_f0);
    std::string csv = csv_row({"dw", "P", "slope", "intercept", "k"});
    for (double dw : parse_range(pitch_dw)) {
      const PitchPrediction pred = predicted_pitch(PitchStimulus(pitch_k, pitch_f0, dw));
      csv += csv_row({format_real(dw), format_real(pred.pitch),
                      format_real(line.slope), format_real(line.intercept),
                      std::to_string(pitch_k)});
    }
    const std::string params = "k=" + std::to_string(pitch_k) +
        ",f0=" + format_real(pitch_f0) + ",dw=" + pitch_dw;
    write_output(out_flag, "pitch", params, "csv", csv);
    if (!pitch_data.empty()) {
      std::ifstream in(pitch_data);
      if (!in) {
        std::cerr << "pitch: cannot read " << pitch_data << "\n";
        return 1;
      }
      std::string echo, linebuf;
      while (std::getline(in, linebuf))
        echo += linebuf + "\n";
      write_output(out_flag, "pitch-data", params + ",data=" + pitch_data,
                   "csv", echo);
    }
    return 0;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const CLI::Error&) {
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "harmonia: " << e.what() << "\n";
    return 1;
  }
}
