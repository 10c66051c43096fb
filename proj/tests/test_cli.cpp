#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include "support.hpp"
#include "trefftz/cli/commands.hpp"
#include "trefftz/special.hpp"

using namespace trefftz;
using namespace trefftz::cli;
namespace fs = std::filesystem;

namespace {
constexpr double pi = std::numbers::pi;

CsvTable run_to_table(const std::string& command, const KeyValues& kv, int* exit_code = nullptr) {
  std::ostringstream out, err;
  const int code = execute(resolve_config(command, kv), out, err);
  if (exit_code) *exit_code = code;
  std::istringstream in(out.str());
  return read_csv(in);
}

int run_lab(const std::string& args) {
  const std::string cmd = std::string(TREFFTZ_LAB_PATH) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

fs::path scratch(const std::string& name) { return fs::temp_directory_path() / ("trefftz_cli_" + name); }

}  // namespace

TEST_CASE("real-number parsing") {
  CHECK(parse_real("0.5") == 0.5);
  CHECK(parse_real("1/32") == 1.0 / 32);
  CHECK(parse_real("0.2pi") == doctest::Approx(0.2 * pi));
  CHECK(parse_real("2*pi") == doctest::Approx(2 * pi));
  CHECK(parse_real("pi/4") == doctest::Approx(pi / 4));
  CHECK(parse_real("1e-10") == 1e-10);
  CHECK_THROWS_AS(parse_real("abc"), ConfigError);
  CHECK_THROWS_AS(parse_real("1/0"), ConfigError);
  CHECK(parse_int_list("8,16,32") == std::vector<int>{8, 16, 32});
}

TEST_CASE("key-value files") {
  std::istringstream in("# comment\ngeometry = square   # trailing\n\n--p_max=12\nkappa = 2pi\n");
  const KeyValues kv = parse_key_values(in);
  CHECK(kv.at("geometry") == "square");
  CHECK(kv.at("p-max") == "12");
  CHECK(kv.at("kappa") == "2pi");
  std::istringstream bad("no equals sign here\n");
  CHECK_THROWS_AS(parse_key_values(bad), ConfigError);
}

TEST_CASE("config validation") {
  CHECK_THROWS_AS(resolve_config("solve", {{"bogus", "1"}}), ConfigError);
  CHECK_THROWS_AS(resolve_config("solve", {{"kappa", "-1"}}), ConfigError);
  CHECK_THROWS_AS(resolve_config("solve", {{"precond", "p9"}}), ConfigError);
  CHECK_THROWS_AS(resolve_config("condition", {{"p-min", "10"}, {"p-max", "4"}}), ConfigError);
  CHECK_THROWS_AS(resolve_config("solve", {{"geometry", "polygon:0,0;0,1;1,0"}}), ConfigError);
  CHECK_THROWS_AS(resolve_config("nope", {}), ConfigError);
  const LabConfig cfg = resolve_config("solve", {{"kappa", "0.2pi,pi"}, {"tol", "1e-6,1e-10"}});
  CHECK(cfg.kappas.size() == 2);
  CHECK(cfg.tols.size() == 2);
}

TEST_CASE("config hash is stable and sensitive") {
  const auto a = resolve_config("solve", {{"kappa", "0.2pi"}});
  const auto b = resolve_config("solve", {{"kappa", "0.2*pi"}});
  const auto c = resolve_config("solve", {{"kappa", "0.3pi"}});
  CHECK(config_hash(a) == config_hash(b));
  CHECK(config_hash(a) != config_hash(c));
  CHECK(config_hash_hex(a).size() == 16);
}

TEST_CASE("CSV round trip") {
  CsvTable t;
  t.comments = {"first", "second, with comma"};
  t.header = {"a", "b", "c"};
  std::vector<double> values{0.1, -1e-300, 1.0 / 3, std::nan(""), INFINITY, 6.02214076e23};
  for (double v : values) t.rows.push_back({format_double(v), "text, \"quoted\"", "multi\nline"});
  std::stringstream ss;
  write_csv(ss, t);
  const CsvTable back = read_csv(ss);
  CHECK(back.comments == t.comments);
  CHECK(back.header == t.header);
  REQUIRE(back.rows.size() == t.rows.size());
  CHECK(back.rows == t.rows);
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double v = back.number(i, "a");
    if (std::isnan(values[i])) CHECK(std::isnan(v));
    else CHECK(v == values[i]);
  }
}

TEST_CASE("spectrum command") {
  const CsvTable one = run_to_table("spectrum", {{"p-min", "1"}, {"p-max", "1"}, {"kappa", "1"}, {"h", "1.5"}, {"matrix", "M"}});
  REQUIRE(one.rows.size() == 1);
  CHECK(one.number(0, "dft_real") == doctest::Approx(2 * pi * 1.5));
  CHECK(one.comments.at(0).find("config-hash=") != std::string::npos);
  CHECK(one.comments.at(0).find("kappa [1/length]") != std::string::npos);

  const CsvTable fig = run_to_table("spectrum", {});
  CHECK(fig.rows.size() == 3 * 3 * 61);
  int code = -1;
  run_to_table("spectrum", {{"geometry", "square"}}, &code);
  CHECK(code == kExitConfig);
}

TEST_CASE("condition command") {
  const CsvTable t = run_to_table("condition", {{"p-min", "2"}, {"p-max", "2"}, {"kappa", "0.3"}, {"h", "1"}});
  const double j = bessel_j(0, 0.6);
  CHECK(t.number(0, "cond_M_dft") == doctest::Approx((1 + j) / (1 - j)).epsilon(1e-12));
  const CsvTable fig3 = run_to_table("condition", {});
  CHECK(fig3.rows.size() == 2 * 39);
}

TEST_CASE("toeplitz-distance command") {
  const CsvTable disk = run_to_table("toeplitz-distance", {{"geometry", "disk"}, {"p-list", "6,12"}});
  for (std::size_t r = 0; r < disk.rows.size(); ++r) {
    CHECK(disk.number(r, "delta_disk") == 0.0);
    CHECK(disk.number(r, "delta_toeplitz") < 1e-15);
  }
  const CsvTable sq = run_to_table("toeplitz-distance", {{"p-min", "10"}, {"p-max", "80"}});
  REQUIRE(sq.rows.size() == 4);  // 10, 20, 40, 80
  CHECK(sq.rows[0][sq.column("doubling_decreases")] == "na");
  CHECK(sq.number(3, "delta_toeplitz") < sq.number(0, "delta_toeplitz"));

  for (const std::string g : {"cyclic-quad", "general-quad"}) {
    const CsvTable t = run_to_table("toeplitz-distance", {{"geometry", g}, {"p-list", "10"}});
    CHECK(t.rows.size() == 1);
    CHECK(t.rows[0][t.column("error")].empty());
  }

  const CsvTable lg = run_to_table("toeplitz-distance",
                                   {{"polygon-sides", "8,16,32,64"}, {"p-list", "10"}, {"kappa", "0.2pi"}});
  REQUIRE(lg.rows.size() == 4);
  for (std::size_t r = 1; r < 4; ++r) CHECK(lg.rows[r][lg.column("doubling_decreases")] == "1");
}

TEST_CASE("solve command and determinism") {
  const KeyValues kv{{"p-min", "4"}, {"p-max", "8"}, {"precond", "none,p5,p7"}, {"delta", "1e-3,1e-6,1e-10"}};
  std::ostringstream a, b, err;
  CHECK(execute(resolve_config("solve", kv), a, err) == kExitOk);
  CHECK(execute(resolve_config("solve", kv), b, err) == kExitOk);
  CHECK(a.str() == b.str());
  std::istringstream in(a.str());
  const CsvTable t = read_csv(in);
  CHECK(t.rows.size() == 3 * 3 * 5);
  for (const auto& col : {"p", "E_direct", "E_gmres", "cond", "iterations", "converged", "preconditioner", "side"})
    CHECK_NOTHROW(t.column(col));
}

TEST_CASE("executable: config files, overrides, exit codes and plots") {
  const fs::path cfg = scratch("run.cfg"), csv = scratch("out.csv"), svg = scratch("plot.svg");
  {
    std::ofstream f(cfg);
    f << "geometry = triangle\nh = 0.1\nkappa = 0.2pi\np-min = 4\np-max = 6\nmethod = direct\n";
  }
  fs::remove(csv);
  fs::remove(svg);
  CHECK(run_lab("solve --config " + cfg.string() + " --p-max 7 --out " + csv.string() + " --plot " + svg.string()) == 0);
  std::ifstream in(csv);
  const CsvTable t = read_csv(in);
  CHECK(t.rows.size() == 4);  // the command line widened the range
  CHECK(fs::exists(svg));

  CHECK(run_lab("solve --kappa -3") == 2);
  CHECK(run_lab("solve --no-such-flag 1") == 2);
  CHECK(run_lab("condition --p-min 9 --p-max 3") == 2);
  CHECK(run_lab("frobnicate") == 2);
  // P1 cannot be built once the disk mass spectrum underflows, so every cell fails.
  CHECK(run_lab("solve --geometry disk --h 1 --kappa 1e-4 --precond p1 --p-min 200 --p-max 200 --method direct") == 3);
  // A plot that cannot be drawn never changes the exit code.
  CHECK(run_lab("spectrum --p-min 2 --p-max 2 --plot /nonexistent-dir/x.svg") == 0);
}
