#include "trefftz/cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>

#include "trefftz/circulant.hpp"
#include "trefftz/linalg.hpp"
#include "trefftz/matrices.hpp"
#include "trefftz/precond.hpp"
#include "trefftz/problems.hpp"

namespace trefftz::cli {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string f(double v) { return format_double(v); }

CsvTable start_table(const LabConfig& cfg, std::vector<std::string> header) {
  CsvTable t;
  t.comments.push_back("trefftz-lab " + cfg.command + "; units: kappa [1/length], h [length], angles [rad]; "
                       "config-hash=" + config_hash_hex(cfg));
  std::string kv;
  for (const auto& [k, v] : cfg.resolved) {
    if (k == "out" || k == "plot") continue;
    kv += (kv.empty() ? "" : "; ") + k + "=" + v;
  }
  t.comments.push_back("config: " + kv);
  t.header = std::move(header);
  return t;
}

std::vector<MatrixKind> selected_matrices(const std::string& m) {
  std::string s = m;
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  if (s == "m") return {MatrixKind::Mass};
  if (s == "s") return {MatrixKind::Cross};
  if (s == "d") return {MatrixKind::Stiffness};
  return {MatrixKind::Mass, MatrixKind::Cross, MatrixKind::Stiffness};
}

std::vector<int> doubling_sequence(const LabConfig& cfg) {
  if (!cfg.p_list.empty()) return cfg.p_list;
  std::vector<int> out;
  for (long p = cfg.p_min; p <= cfg.p_max; p *= 2) out.push_back(static_cast<int>(p));
  return out;
}

}  // namespace

CommandResult cmd_spectrum(const LabConfig& cfg) {
  const ElementGeometry geom = make_geometry(cfg.geometry, cfg.h, cfg.center);
  if (!geom.is_disk()) throw ConfigError("spectrum is computed for the disk; use geometry=disk");
  CommandResult res;
  res.table = start_table(cfg, {"kappa", "h", "p", "matrix", "index", "dft_real", "dft_imag", "integral",
                                "asymptotic", "series", "partner"});
  res.plot.title = "Disk spectra (series route)";
  res.plot.x_label = "index L";
  res.plot.y_label = "eigenvalue";
  for (double kappa : cfg.kappas)
    for (int p : p_values(cfg))
      for (MatrixKind kind : selected_matrices(cfg.matrix)) {
        const auto rows = spectrum_report(kind, p, kappa, geom.h());
        PlotSeries s;
        s.label = std::string(to_string(kind)) + " kappa=" + f(kappa) + " p=" + std::to_string(p);
        for (const auto& r : rows) {
          res.table.rows.push_back({f(kappa), f(geom.h()), std::to_string(p), std::string(to_string(kind)),
                                    std::to_string(r.index), f(r.dft.real()), f(r.dft.imag()), f(r.integral),
                                    f(r.asymptotic), f(r.series), std::to_string(r.partner)});
          s.x.push_back(r.index);
          s.y.push_back(std::abs(r.series));
          ++res.cells;
        }
        res.plot.series.push_back(std::move(s));
      }
  return res;
}

CommandResult cmd_condition(const LabConfig& cfg) {
  const ElementGeometry geom = make_geometry(cfg.geometry, cfg.h, cfg.center);
  CommandResult res;
  res.table = start_table(cfg, {"kappa", "h", "p", "kh", "lambda_min", "lambda_max", "min_dft_coefficient",
                                "cond_M_dft", "cond_M_series", "log_proxy_M", "cond_D_dft", "log_proxy_D",
                                "cond_M", "cond_SyS", "error"});
  res.plot.title = "Condition numbers";
  res.plot.x_label = "p";
  res.plot.y_label = "cond";
  const double h = geom.h();
  for (double kappa : cfg.kappas) {
    PlotSeries sm{"cond(M disk) kappa*h=" + f(kappa * h), {}, {}};
    PlotSeries ss{"cond(SyS) kappa*h=" + f(kappa * h), {}, {}};
    for (int p : p_values(cfg)) {
      ++res.cells;
      std::vector<std::string> row{f(kappa), f(h), std::to_string(p), f(kappa * h)};
      try {
        const ConditionEstimate m = disk_condition_estimate(MatrixKind::Mass, p, kappa, h, SpectrumMethod::Dft);
        const ConditionEstimate ms = disk_condition_estimate(MatrixKind::Mass, p, kappa, h, SpectrumMethod::Series);
        const ConditionEstimate d = disk_condition_estimate(MatrixKind::Stiffness, p, kappa, h, SpectrumMethod::Dft);
        const auto dft = disk_spectrum(MatrixKind::Mass, p, kappa, h, SpectrumMethod::Dft);
        const double min_coeff = *std::min_element(dft.begin(), dft.end());
        const PlaneWaveBasis basis = PlaneWaveBasis::uniform(p, kappa, geom.center());
        const ElementMatrices em = element_matrices(basis, geom);
        const double cM = cond2(em.M), cS = cond2(em.SyS);
        for (double v : {m.lambda_min, m.lambda_max, min_coeff, m.cond, ms.cond, m.log_proxy, d.cond, d.log_proxy, cM, cS})
          row.push_back(f(v));
        row.push_back("");
        sm.x.push_back(p);
        sm.y.push_back(m.cond);
        ss.x.push_back(p);
        ss.y.push_back(cS);
      } catch (const std::exception& e) {
        row.resize(4);
        for (int i = 0; i < 10; ++i) row.push_back(f(kNaN));
        row.push_back(e.what());
        ++res.failed;
      }
      res.table.rows.push_back(std::move(row));
    }
    res.plot.series.push_back(std::move(sm));
    res.plot.series.push_back(std::move(ss));
  }
  return res;
}

CommandResult cmd_toeplitz_distance(const LabConfig& cfg) {
  CommandResult res;
  res.table = start_table(cfg, {"geometry", "kappa", "h", "p", "delta_toeplitz", "delta_first_row", "delta_best",
                                "delta_disk", "doubling_decreases", "error"});
  res.plot.title = "Distance to Toeplitz / circulant approximants";
  res.plot.x_label = "p";
  res.plot.y_label = "Delta";

  struct Cell {
    double t = kNaN, r = kNaN, b = kNaN, d = kNaN;
    std::string error;
  };
  auto compute = [](const ElementGeometry& geom, int p, double kappa) {
    Cell c;
    try {
      const PlaneWaveBasis basis = PlaneWaveBasis::uniform(p, kappa, geom.center());
      const DenseMatrix M = geom.is_disk() ? disk_mass(basis, geom.h()) : assemble_matrix(basis, geom, MatrixKind::Mass);
      c.t = delta_measure(M, toeplitz_average(M));
      c.r = delta_measure(M, circ_first_row(M).materialize());
      c.b = delta_measure(M, circ_best(M).materialize());
      c.d = delta_measure(M, disk_mass(basis, geom.h()));
    } catch (const std::exception& e) {
      c.error = e.what();
    }
    return c;
  };
  auto push = [&](const std::string& name, double kappa, double h, int p, const Cell& c, const std::string& flag) {
    ++res.cells;
    if (!c.error.empty()) ++res.failed;
    res.table.rows.push_back({name, f(kappa), f(h), std::to_string(p), f(c.t), f(c.r), f(c.b), f(c.d), flag, c.error});
  };
  auto flag_of = [](double prev, double cur) -> std::string {
    if (std::isnan(prev) || std::isnan(cur)) return "na";
    return cur < prev ? "1" : "0";
  };

  const std::vector<int> ps = doubling_sequence(cfg);
  if (cfg.polygon_sides.empty()) {
    const ElementGeometry geom = make_geometry(cfg.geometry, cfg.h, cfg.center);
    for (double kappa : cfg.kappas) {
      PlotSeries st{"T kappa=" + f(kappa), {}, {}}, sr{"C_R kappa=" + f(kappa), {}, {}},
          sb{"C_best kappa=" + f(kappa), {}, {}};
      double prev = kNaN;
      for (int p : ps) {
        const Cell c = compute(geom, p, kappa);
        push(cfg.geometry, kappa, geom.h(), p, c, flag_of(prev, c.t));
        prev = c.t;
        st.x.push_back(p), st.y.push_back(c.t);
        sr.x.push_back(p), sr.y.push_back(c.r);
        sb.x.push_back(p), sb.y.push_back(c.b);
      }
      res.plot.series.push_back(std::move(st));
      res.plot.series.push_back(std::move(sr));
      res.plot.series.push_back(std::move(sb));
    }
  } else {
    // Regular L-gon sweep: the flag tracks Δ(M^L, M^disk) across L.
    res.plot.x_label = "polygon sides L";
    for (double kappa : cfg.kappas)
      for (int p : ps) {
        PlotSeries sd{"Delta(M^L, M^disk) kappa=" + f(kappa) + " p=" + std::to_string(p), {}, {}};
        double prev = kNaN;
        for (int L : cfg.polygon_sides) {
          const ElementGeometry geom = regular_polygon(L, cfg.h);
          const Cell c = compute(geom, p, kappa);
          push("regular:" + std::to_string(L), kappa, geom.h(), p, c, flag_of(prev, c.d));
          prev = c.d;
          sd.x.push_back(L), sd.y.push_back(c.d);
        }
        res.plot.series.push_back(std::move(sd));
      }
  }
  return res;
}

CommandResult cmd_solve(const LabConfig& cfg) {
  const ElementGeometry geom = make_geometry(cfg.geometry, cfg.h, cfg.center);
  CommandResult res;
  res.table = start_table(cfg, {"p", "E_direct", "E_gmres", "cond", "iterations", "converged", "preconditioner",
                                "side", "delta", "tol", "kappa", "true_residual", "error"});
  res.plot.title = "Relative L2 error";
  res.plot.x_label = "p";
  res.plot.y_label = "E(p)";
  std::map<std::string, PlotSeries> series;
  std::vector<std::string> order;
  for (double kappa : cfg.kappas)
    for (double delta : cfg.deltas)
      for (double tol : cfg.tols) {
        ExperimentConfig ec;
        ec.u = make_solution(cfg, kappa);
        ec.geom = geom;
        ec.kappa = kappa;
        const auto ps = p_values(cfg);
        ec.p_min = *std::min_element(ps.begin(), ps.end());
        ec.p_max = *std::max_element(ps.begin(), ps.end());
        if (cfg.fan) ec.directions = {true, cfg.fan->first, cfg.fan->second};
        ec.preconds = cfg.preconds;
        ec.sides = cfg.sides;
        ec.solve.method = cfg.method;
        ec.solve.restart = cfg.restart;
        ec.solve.tol = tol;
        ec.solve.maxit = cfg.maxit;
        ec.delta = delta;
        for (const ErrorReport& r : run_experiment(ec)) {
          if (std::find(ps.begin(), ps.end(), r.p) == ps.end()) continue;
          ++res.cells;
          if (!r.error.empty()) ++res.failed;
          res.table.rows.push_back({std::to_string(r.p), f(r.E_direct), f(r.E_gmres), f(r.cond),
                                    std::to_string(r.iterations), r.converged ? "1" : "0",
                                    std::string(to_string(r.precond)), std::string(to_string(r.side)), f(r.delta),
                                    f(r.tol), f(kappa), f(r.true_residual), r.error});
          const bool gm = cfg.method == Method::Gmres;
          const std::string label = std::string(to_string(r.precond)) + "/" + std::string(to_string(r.side)) +
                                    " kappa=" + f(kappa) + " delta=" + f(delta) + " tol=" + f(tol);
          if (!series.count(label)) {
            order.push_back(label);
            series[label].label = label;
          }
          series[label].x.push_back(r.p);
          series[label].y.push_back(gm ? r.E_gmres : r.E_direct);
        }
      }
  for (const auto& l : order) res.plot.series.push_back(series[l]);
  return res;
}

CommandResult run_command(const LabConfig& cfg) {
  if (cfg.command == "spectrum") return cmd_spectrum(cfg);
  if (cfg.command == "condition") return cmd_condition(cfg);
  if (cfg.command == "toeplitz-distance") return cmd_toeplitz_distance(cfg);
  if (cfg.command == "solve") return cmd_solve(cfg);
  throw ConfigError("unknown command '" + cfg.command + "'");
}

int execute(const LabConfig& cfg, std::ostream& out, std::ostream& err) {
  CommandResult res;
  try {
    res = run_command(cfg);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfig;
  }
  if (cfg.out.empty()) {
    write_csv(out, res.table);
  } else {
    std::ofstream file(cfg.out, std::ios::binary);
    if (!file) {
      err << "config error: cannot write '" << cfg.out << "'\n";
      return kExitConfig;
    }
    write_csv(file, res.table);
  }
  if (!cfg.plot.empty()) {
    try {
      std::ofstream svg(cfg.plot, std::ios::binary);
      if (!svg) throw std::runtime_error("cannot write '" + cfg.plot + "'");
      write_svg_logy(svg, res.plot);
    } catch (const std::exception& e) {
      err << "plot skipped: " << e.what() << '\n';
    }
  }
  if (res.failed > 0) err << res.failed << " of " << res.cells << " cells failed\n";
  if (res.cells > 0 && res.failed == res.cells) return kExitAllFailed;
  return kExitOk;
}

}  // namespace trefftz::cli
