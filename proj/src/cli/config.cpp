#include "trefftz/cli/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

namespace trefftz::cli {

namespace {

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(trim(cur));
  return out;
}

double parse_plain(const std::string& t) {
  double v = 0.0;
  const char* first = t.data();
  const char* last = t.data() + t.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last) throw ConfigError("not a number: '" + t + "'");
  return v;
}

int parse_int(const std::string& text) {
  const std::string t = trim(text);
  int v = 0;
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || ptr != t.data() + t.size()) throw ConfigError("not an integer: '" + text + "'");
  return v;
}

Vec2 parse_point(const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() != 2) throw ConfigError("expected a point 'x,y', got '" + text + "'");
  return {parse_real(parts[0]), parse_real(parts[1])};
}

}  // namespace

KeyValues parse_key_values(std::istream& in, const std::string& source) {
  KeyValues kv;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const std::string t = trim(line);
    if (t.empty()) continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos)
      throw ConfigError(source + ":" + std::to_string(lineno) + ": expected 'key = value'");
    std::string key = trim(std::string_view(t).substr(0, eq));
    if (key.rfind("--", 0) == 0) key.erase(0, 2);
    std::replace(key.begin(), key.end(), '_', '-');
    if (key.empty()) throw ConfigError(source + ":" + std::to_string(lineno) + ": empty key");
    kv[key] = trim(std::string_view(t).substr(eq + 1));
  }
  return kv;
}

KeyValues load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  return parse_key_values(in, path);
}

const std::vector<std::string>& known_keys() {
  static const std::vector<std::string> keys{
      "geometry", "kappa",  "h",        "p-min",    "p-max",     "p-list", "center", "matrix",
      "polygon-sides", "precond", "side", "method", "restart", "tol",    "maxit",  "delta",
      "problem", "incident", "source", "amplitude", "fan",      "out",    "plot"};
  return keys;
}

double parse_real(const std::string& text) {
  std::string t = lower(trim(text));
  if (t.empty()) throw ConfigError("empty number");
  if (const auto slash = t.find('/'); slash != std::string::npos) {
    const double den = parse_real(t.substr(slash + 1));
    if (den == 0.0) throw ConfigError("division by zero in '" + text + "'");
    return parse_real(t.substr(0, slash)) / den;
  }
  double factor = 1.0;
  if (t.size() >= 2 && t.compare(t.size() - 2, 2, "pi") == 0) {
    factor = std::numbers::pi;
    t.erase(t.size() - 2);
    if (!t.empty() && t.back() == '*') t.pop_back();
    t = trim(t);
    if (t.empty() || t == "+") return factor;
    if (t == "-") return -factor;
  }
  return factor * parse_plain(t);
}

std::vector<double> parse_real_list(const std::string& text) {
  std::vector<double> out;
  for (const auto& part : split(text, ','))
    if (!part.empty()) out.push_back(parse_real(part));
  if (out.empty()) throw ConfigError("empty list '" + text + "'");
  return out;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  for (const auto& part : split(text, ','))
    if (!part.empty()) out.push_back(parse_int(part));
  if (out.empty()) throw ConfigError("empty list '" + text + "'");
  return out;
}

LabConfig resolve_config(const std::string& command, const KeyValues& kv) {
  static const std::set<std::string> commands{"spectrum", "condition", "toeplitz-distance", "solve"};
  if (!commands.count(command)) throw ConfigError("unknown command '" + command + "'");
  const auto& keys = known_keys();
  for (const auto& [k, v] : kv)
    if (std::find(keys.begin(), keys.end(), k) == keys.end()) throw ConfigError("unknown key '" + k + "'");

  LabConfig c;
  c.command = command;
  // Command-specific defaults that reproduce the standard setups.
  if (command == "spectrum") {
    c.geometry = "disk";
    c.h = 2 * std::numbers::pi;
    c.p_min = c.p_max = 61;
    c.kappas = {1.0 / 8, 1.0 / 16, 1.0 / 32};
  } else if (command == "condition") {
    c.geometry = "disk";
    c.h = 1.0;
    c.p_min = 2;
    c.p_max = 40;
    c.kappas = {0.1 * std::numbers::pi, 10 * std::numbers::pi};
  } else if (command == "toeplitz-distance") {
    c.geometry = "square";
    c.h = 1.0;
    c.p_min = 10;
    c.p_max = 80;
    c.kappas = {2 * std::numbers::pi};
  }

  auto get = [&](const char* key) -> const std::string* {
    auto it = kv.find(key);
    return it == kv.end() ? nullptr : &it->second;
  };

  try {
    if (auto v = get("geometry")) c.geometry = *v;
    if (auto v = get("kappa")) c.kappas = parse_real_list(*v);
    if (auto v = get("h")) c.h = parse_real(*v);
    if (auto v = get("p-min")) c.p_min = parse_int(*v);
    if (auto v = get("p-max")) c.p_max = parse_int(*v);
    if (auto v = get("p-list")) c.p_list = parse_int_list(*v);
    if (auto v = get("center")) c.center = *v;
    if (auto v = get("matrix")) c.matrix = *v;
    if (auto v = get("polygon-sides")) c.polygon_sides = parse_int_list(*v);
    if (auto v = get("precond")) {
      c.preconds.clear();
      for (const auto& s : split(*v, ',')) c.preconds.push_back(parse_precond(s));
    }
    if (auto v = get("side")) {
      c.sides.clear();
      for (const auto& s : split(*v, ',')) c.sides.push_back(parse_side(s));
    }
    if (auto v = get("method")) c.method = parse_method(trim(*v));
    if (auto v = get("restart")) c.restart = parse_int(*v);
    if (auto v = get("tol")) c.tols = parse_real_list(*v);
    if (auto v = get("maxit")) c.maxit = parse_int(*v);
    if (auto v = get("delta")) c.deltas = parse_real_list(*v);
    if (auto v = get("problem")) c.problem = lower(trim(*v));
    if (auto v = get("incident")) c.incident = parse_real(*v);
    if (auto v = get("source")) c.source = parse_point(*v);
    if (auto v = get("amplitude")) c.amplitude = parse_real(*v);
    if (auto v = get("fan")) {
      const Vec2 ab = parse_point(*v);
      c.fan = std::make_pair(ab.x, ab.y);
    }
    if (auto v = get("out")) c.out = *v;
    if (auto v = get("plot")) c.plot = *v;
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& e) {
    throw ConfigError(e.what());
  }

  for (double k : c.kappas)
    if (!(k > 0.0) || !std::isfinite(k)) throw ConfigError("kappa must be positive");
  if (!(c.h > 0.0) || !std::isfinite(c.h)) throw ConfigError("h must be positive");
  if (c.p_list.empty()) {
    if (c.p_min < 1) throw ConfigError("p-min must be >= 1");
    if (c.p_max < c.p_min) throw ConfigError("empty p range: p-max < p-min");
  }
  for (int p : c.p_list)
    if (p < 1) throw ConfigError("p-list entries must be >= 1");
  for (int L : c.polygon_sides)
    if (L < 3) throw ConfigError("polygon-sides entries must be >= 3");
  if (c.restart < 1) throw ConfigError("restart must be >= 1");
  if (c.maxit < 0) throw ConfigError("maxit must be >= 0");
  for (double t : c.tols)
    if (!(t > 0.0 && t < 1.0)) throw ConfigError("tol must lie in (0, 1)");
  for (double d : c.deltas)
    if (!(d > 0.0)) throw ConfigError("delta must be positive");
  if (c.problem != "plane" && c.problem != "point" && c.problem != "combo")
    throw ConfigError("problem must be plane, point or combo");
  const std::string m = lower(c.matrix);
  if (m != "m" && m != "s" && m != "d" && m != "all") throw ConfigError("matrix must be M, S, D or all");
  if (c.fan && !(c.fan->second > c.fan->first && c.fan->second - c.fan->first < 2 * std::numbers::pi))
    throw ConfigError("fan sector must satisfy alpha < beta < alpha + 2pi");

  try {
    (void)make_geometry(c.geometry, c.h, c.center);
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& e) {
    throw ConfigError(std::string("geometry: ") + e.what());
  }

  // Canonical view: every key with its effective value.
  auto fmt = [](double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return std::string(buf);
  };
  auto join_d = [&](const std::vector<double>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + fmt(v[i]);
    return s;
  };
  auto join_i = [](const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
  };
  KeyValues& r = c.resolved;
  r["command"] = c.command;
  r["geometry"] = c.geometry;
  r["kappa"] = join_d(c.kappas);
  r["h"] = fmt(c.h);
  r["p-min"] = std::to_string(c.p_min);
  r["p-max"] = std::to_string(c.p_max);
  r["p-list"] = join_i(c.p_list);
  r["center"] = c.center;
  r["matrix"] = c.matrix;
  r["polygon-sides"] = join_i(c.polygon_sides);
  {
    std::string s;
    for (std::size_t i = 0; i < c.preconds.size(); ++i) s += (i ? "," : "") + std::string(to_string(c.preconds[i]));
    r["precond"] = s;
    s.clear();
    for (std::size_t i = 0; i < c.sides.size(); ++i) s += (i ? "," : "") + std::string(to_string(c.sides[i]));
    r["side"] = s;
  }
  r["method"] = std::string(to_string(c.method));
  r["restart"] = std::to_string(c.restart);
  r["tol"] = join_d(c.tols);
  r["maxit"] = std::to_string(c.maxit);
  r["delta"] = join_d(c.deltas);
  r["problem"] = c.problem;
  r["incident"] = fmt(c.incident);
  r["source"] = fmt(c.source.x) + "," + fmt(c.source.y);
  r["amplitude"] = fmt(c.amplitude);
  r["fan"] = c.fan ? fmt(c.fan->first) + "," + fmt(c.fan->second) : "";
  return c;
}

std::uint64_t config_hash(const LabConfig& cfg) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto feed = [&h](const std::string& s) {
    for (unsigned char ch : s) {
      h ^= ch;
      h *= 0x100000001b3ULL;
    }
  };
  for (const auto& [k, v] : cfg.resolved) feed(k + "=" + v + "\n");
  return h;
}

std::string config_hash_hex(const LabConfig& cfg) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(config_hash(cfg)));
  return buf;
}

ElementGeometry make_geometry(const std::string& spec, double h, const std::string& center) {
  const std::string s = trim(spec);
  const auto colon = s.find(':');
  const std::string name = lower(s.substr(0, colon));
  const std::string arg = colon == std::string::npos ? "" : s.substr(colon + 1);
  const std::string cen = lower(trim(center));

  if (name == "skinny") {
    SkinnyCenter sc = SkinnyCenter::Centroid;
    if (cen == "apex") sc = SkinnyCenter::Apex;
    else if (cen == "vertex") sc = SkinnyCenter::ShortSideVertex;
    else if (cen != "default" && cen != "centroid") return skinny_triangle().with_center(parse_point(center));
    return skinny_triangle(sc);
  }

  ElementGeometry g = [&]() {
    if (name == "disk") return ElementGeometry::disk({0.0, 0.0}, h);
    if (name == "triangle" || name == "equilateral") return equilateral_triangle(h);
    if (name == "square") return square(h);
    if (name == "regular") {
      if (arg.empty()) throw ConfigError("regular polygon needs a side count, e.g. regular:8");
      return regular_polygon(parse_int(arg), h);
    }
    if (name == "cyclic-quad") return cyclic_quadrilateral(h);
    if (name == "general-quad") return general_quadrilateral();
    if (name == "cyclic") {
      CyclicAngles a;
      a.h = h;
      a.theta = parse_real_list(arg);
      return cyclic_polygon(a);
    }
    if (name == "polygon") {
      std::vector<Vec2> v;
      for (const auto& pt : split(arg, ';'))
        if (!pt.empty()) v.push_back(parse_point(pt));
      return ElementGeometry::polygon(std::move(v));
    }
    throw ConfigError("unknown geometry '" + spec + "'");
  }();

  if (cen == "default") return g;
  if (cen == "centroid") return g.with_center(g.centroid());
  if (cen == "apex" || cen == "vertex") throw ConfigError("center '" + center + "' only applies to the skinny triangle");
  return g.with_center(parse_point(center));
}

ExactSolution make_solution(const LabConfig& cfg, double kappa) {
  ExactSolution u(kappa);
  if (cfg.problem == "plane" || cfg.problem == "combo") u.add_plane_wave(cfg.incident, 1.0);
  if (cfg.problem == "point") u.add_bessel_point(cfg.source, cfg.amplitude);
  if (cfg.problem == "combo") u.add_bessel_point(cfg.source, 4.0 * cfg.amplitude);
  return u;
}

std::vector<int> p_values(const LabConfig& cfg) {
  if (!cfg.p_list.empty()) return cfg.p_list;
  std::vector<int> out;
  for (int p = cfg.p_min; p <= cfg.p_max; ++p) out.push_back(p);
  return out;
}

}  // namespace trefftz::cli
