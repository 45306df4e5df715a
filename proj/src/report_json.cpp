// Copyright 2026 The Amoebavol Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "amoeba/report_json.hpp"

#include <cmath>
#include <fstream>
#include <initializer_list>
#include <set>
#include <sstream>

namespace amoeba {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ConfigError(where + ": " + what);
}

void check_keys(const Json& obj, const std::string& where, std::initializer_list<const char*> required,
                std::initializer_list<const char*> optional) {
  if (!obj.is_object()) fail(where, "expected an object");
  std::set<std::string> known;
  for (const char* key : required) {
    known.insert(key);
    if (!obj.contains(key)) fail(where, std::string("missing required field \"") + key + "\"");
  }
  for (const char* key : optional) known.insert(key);
  for (const auto& item : obj.items()) {
    if (!known.count(item.key())) fail(where, "unknown field \"" + item.key() + "\"");
  }
}

double number(const Json& j, const std::string& where) {
  if (!j.is_number()) fail(where, "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) fail(where, "expected a finite number");
  return v;
}

int integer(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) fail(where, "expected an integer");
  const auto v = j.get<std::int64_t>();
  if (v < -1'000'000 || v > 1'000'000) fail(where, "integer out of range");
  return static_cast<int>(v);
}

std::string string(const Json& j, const std::string& where) {
  if (!j.is_string()) fail(where, "expected a string");
  return j.get<std::string>();
}

Complex complex(const Json& j, const std::string& where) {
  if (j.is_number()) return {number(j, where), 0.0};
  if (!j.is_array() || j.size() != 2) fail(where, "expected a number or a [re, im] pair");
  return {number(j[0], where + "[0]"), number(j[1], where + "[1]")};
}

std::pair<double, double> interval(const Json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2) fail(where, "expected a [lo, hi] pair");
  const double lo = number(j[0], where + "[0]");
  const double hi = number(j[1], where + "[1]");
  if (!(lo < hi)) fail(where, "need lo < hi");
  return {lo, hi};
}

const Json& array(const Json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array");
  return j;
}

void check_version(const Json& j) {
  if (integer(j.at("schema_version"), "schema_version") != kSchemaVersion) {
    fail("schema_version", "unsupported version (this build reads " + std::to_string(kSchemaVersion) + ")");
  }
}

VariableDomain domain_from_json(const Json& j, const std::string& where) {
  if (!j.is_object() || !j.contains("kind")) fail(where, "missing required field \"kind\"");
  const std::string kind = string(j.at("kind"), where + ".kind");
  if (kind == "annulus") {
    check_keys(j, where, {"kind", "log_radius"}, {"center"});
    const Complex c = j.contains("center") ? complex(j.at("center"), where + ".center") : Complex{};
    const auto [lo, hi] = interval(j.at("log_radius"), where + ".log_radius");
    return VariableDomain::annulus(c, lo, hi);
  }
  if (kind == "box") {
    check_keys(j, where, {"kind", "re", "im"}, {});
    const auto [a, b] = interval(j.at("re"), where + ".re");
    const auto [c, d] = interval(j.at("im"), where + ".im");
    return VariableDomain::box(a, b, c, d);
  }
  fail(where + ".kind", "expected \"annulus\" or \"box\"");
}

}  // namespace

VarietySpec variety_from_json(const Json& j) {
  check_keys(j, "config", {"schema_version", "k", "n", "components", "domain"},
             {"name", "exclusions", "multiplicity", "tags"});
  check_version(j);
  const int k = integer(j.at("k"), "k");
  const int n = integer(j.at("n"), "n");
  if (k < 1 || k > kMaxVars) fail("k", "must be between 1 and " + std::to_string(kMaxVars));
  if (n < 2 * k || n > kMaxCoords) fail("n", "need 2k <= n <= " + std::to_string(kMaxCoords));

  std::vector<std::string> components;
  for (std::size_t i = 0; i < array(j.at("components"), "components").size(); ++i) {
    components.push_back(string(j.at("components")[i], "components[" + std::to_string(i) + "]"));
  }
  if (static_cast<int>(components.size()) != n) fail("components", "expected n = " + std::to_string(n) + " entries");

  const Json& dj = array(j.at("domain"), "domain");
  if (static_cast<int>(dj.size()) != k) fail("domain", "expected k = " + std::to_string(k) + " entries");
  std::vector<VariableDomain> domain;
  for (std::size_t i = 0; i < dj.size(); ++i) domain.push_back(domain_from_json(dj[i], "domain[" + std::to_string(i) + "]"));

  std::vector<Exclusion> exclusions;
  if (j.contains("exclusions")) {
    const Json& ej = array(j.at("exclusions"), "exclusions");
    for (std::size_t i = 0; i < ej.size(); ++i) {
      const std::string where = "exclusions[" + std::to_string(i) + "]";
      check_keys(ej[i], where, {"var", "center", "radius"}, {});
      const int var = integer(ej[i].at("var"), where + ".var");
      if (var < 1 || var > k) fail(where + ".var", "must be between 1 and k");
      const double radius = number(ej[i].at("radius"), where + ".radius");
      if (radius < 0.0) fail(where + ".radius", "must be nonnegative");
      exclusions.push_back({var - 1, complex(ej[i].at("center"), where + ".center"), radius});
    }
  }

  std::vector<std::string> tags;
  if (j.contains("tags")) {
    const Json& tj = array(j.at("tags"), "tags");
    for (std::size_t i = 0; i < tj.size(); ++i) tags.push_back(string(tj[i], "tags[" + std::to_string(i) + "]"));
  }
  const std::string name = j.contains("name") ? string(j.at("name"), "name") : "variety";
  VarietySpec spec = make_variety(name, k, components, domain, exclusions, tags);

  if (j.contains("multiplicity")) {
    const Json& mj = j.at("multiplicity");
    check_keys(mj, "multiplicity", {}, {"log", "arg"});
    for (const char* key : {"log", "arg"}) {
      if (!mj.contains(key)) continue;
      const int m = integer(mj.at(key), std::string("multiplicity.") + key);
      if (m < 1) fail(std::string("multiplicity.") + key, "must be positive");
      (std::string(key) == "log" ? spec.multiplicity_log : spec.multiplicity_arg) = m;
    }
  }
  return spec;
}

AffinePlaneSpec plane_from_json(const Json& j) {
  check_keys(j, "config", {"schema_version", "k", "s", "b", "a"}, {"name"});
  check_version(j);
  AffinePlaneSpec plane;
  if (j.contains("name")) plane.name = string(j.at("name"), "name");
  plane.k = integer(j.at("k"), "k");
  plane.s = integer(j.at("s"), "s");
  const Json& bj = array(j.at("b"), "b");
  for (std::size_t i = 0; i < bj.size(); ++i) plane.b.push_back(complex(bj[i], "b[" + std::to_string(i) + "]"));
  const Json& aj = array(j.at("a"), "a");
  for (std::size_t r = 0; r < aj.size(); ++r) {
    const std::string where = "a[" + std::to_string(r) + "]";
    std::vector<Complex> row;
    for (std::size_t c = 0; c < array(aj[r], where).size(); ++c) {
      row.push_back(complex(aj[r][c], where + "[" + std::to_string(c) + "]"));
    }
    plane.a.push_back(std::move(row));
  }
  validate(plane);
  return plane;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ConfigError(path + ": " + e.what());
  }
}

VarietySpec load_variety(const std::string& path) { return variety_from_json(read_json_file(path)); }
AffinePlaneSpec load_plane(const std::string& path) { return plane_from_json(read_json_file(path)); }

Json complex_to_json(Complex c) { return Json::array({c.real(), c.imag()}); }

namespace {

Json point_to_json(const std::vector<Complex>& t) {
  Json out = Json::array();
  for (const Complex& c : t) out.push_back(complex_to_json(c));
  return out;
}

Json rational_to_json(const Rationality& r) {
  Json out;
  out["rational"] = r.rational;
  out["slope"] = r.slope;
  out["angle"] = r.angle;
  return out;
}

}  // namespace

Json to_json(const VariableDomain& d) {
  Json out;
  if (d.kind == VariableDomain::Kind::kBox) {
    out["kind"] = "box";
    out["re"] = {d.re_min, d.re_max};
    out["im"] = {d.im_min, d.im_max};
  } else {
    out["kind"] = "annulus";
    out["center"] = complex_to_json(d.center);
    out["log_radius"] = {d.log_r_min, d.log_r_max};
  }
  return out;
}

Json to_json(const VarietySpec& spec) {
  Json out;
  out["schema_version"] = kSchemaVersion;
  out["name"] = spec.name;
  out["k"] = spec.k;
  out["n"] = spec.n;
  out["components"] = spec.sources;
  out["domain"] = Json::array();
  for (const auto& d : spec.domain) out["domain"].push_back(to_json(d));
  out["exclusions"] = Json::array();
  for (const auto& e : spec.exclusions) {
    out["exclusions"].push_back({{"var", e.var + 1}, {"center", complex_to_json(e.center)}, {"radius", e.radius}});
  }
  if (spec.multiplicity_log || spec.multiplicity_arg) {
    Json m = Json::object();
    if (spec.multiplicity_log) m["log"] = *spec.multiplicity_log;
    if (spec.multiplicity_arg) m["arg"] = *spec.multiplicity_arg;
    out["multiplicity"] = m;
  }
  out["tags"] = spec.tags;
  return out;
}

Json to_json(const AffinePlaneSpec& plane) {
  Json out;
  out["schema_version"] = kSchemaVersion;
  out["name"] = plane.name;
  out["k"] = plane.k;
  out["s"] = plane.s;
  out["b"] = point_to_json(plane.b);
  out["a"] = Json::array();
  for (const auto& row : plane.a) out["a"].push_back(point_to_json(row));
  return out;
}

Json to_json(const VolumeEstimate& v) {
  Json out;
  out["target"] = to_string(v.target);
  out["value"] = v.value;
  out["stderr"] = v.std_error;
  out["samples"] = v.samples;
  out["multiplicity"] = v.multiplicity;
  out["box"] = Json::array();
  for (const auto& d : v.box) out["box"].push_back(to_json(d));
  out["seed"] = v.seed;
  out["excluded"] = v.excluded;
  out["dropped"] = v.dropped;
  return out;
}

Json to_json(const FinitenessVerdict& v) {
  Json out;
  out["verdict"] = to_string(v.kind);
  out["estimate"] = v.estimate;
  out["growth_exponent"] = v.growth_exponent;
  out["radii"] = v.radii;
  out["stage_value"] = v.stage_value;
  out["stage_stderr"] = v.stage_stderr;
  out["increment"] = v.increment;
  out["increment_stderr"] = v.increment_stderr;
  out["reason"] = v.reason;
  return out;
}

Json to_json(const FiberReport& r) {
  Json out;
  out["map"] = to_string(r.map);
  out["target"] = r.target;
  out["count"] = r.count;
  out["regularity"] = to_string(r.regularity);
  out["solutions"] = Json::array();
  for (const auto& s : r.solutions) {
    out["solutions"].push_back({{"t", point_to_json(s.t)},
                                {"residual", s.residual},
                                {"density", s.density},
                                {"conditioning", s.conditioning}});
  }
  out["starts"] = r.starts;
  out["converged"] = r.converged;
  out["merged"] = r.merged;
  out["note"] = r.note;
  return out;
}

Json to_json(const PPEstimate& e) {
  Json out;
  out["p"] = e.p.str();
  out["P"] = e.P.str();
  out["log_count"] = {e.min_log, e.max_log};
  out["arg_count"] = {e.min_arg, e.max_arg};
  out["probes_used"] = e.probes_used;
  out["probes_skipped"] = e.probes_skipped;
  out["arg_unbounded_suspected"] = e.arg_unbounded_suspected;
  out["evidence"] = Json::array();
  for (const auto& p : e.evidence) {
    out["evidence"].push_back({{"t", point_to_json(p.t)},
                               {"log_count", p.log_count},
                               {"arg_count", p.arg_count},
                               {"log_regularity", to_string(p.log_regularity)},
                               {"arg_regularity", to_string(p.arg_regularity)},
                               {"arg_growth", p.arg_growth}});
  }
  return out;
}

Json to_json(const ComparisonReport& c) {
  Json out;
  out["p"] = c.p.str();
  out["P"] = c.P.str();
  out["amoeba"] = c.amoeba;
  out["coamoeba"] = c.coamoeba;
  out["lower_margin"] = c.lower_margin;
  out["lower_slack"] = c.lower_slack;
  out["upper_margin"] = c.upper_margin;
  out["upper_slack"] = c.upper_slack;
  out["passed"] = c.passed();
  return out;
}

Json to_json(const JacobianCheckReport& r) {
  Json out;
  out["samples"] = r.samples;
  out["resampled"] = r.resampled;
  out["max_relative_deviation"] = r.max_relative_deviation;
  out["max_minor_deviation"] = r.max_minor_deviation;
  out["max_density"] = r.max_density;
  return out;
}

Json to_json(const LimitSetReport& r) {
  Json out;
  out["drawn"] = r.drawn;
  out["rejected"] = r.rejected;
  out["far_samples"] = r.far_samples;
  out["points"] = r.points();
  out["arcs"] = r.arcs();
  out["components"] = Json::array();
  for (const auto& c : r.components) {
    out["components"].push_back({{"kind", c.arc ? "arc" : "point"},
                                 {"direction", c.direction},
                                 {"weight", c.weight},
                                 {"extent", c.extent},
                                 {"outer_extent", c.outer_extent},
                                 {"rationality", rational_to_json(c.rationality)},
                                 {"clusters", c.clusters}});
  }
  out["clusters"] = Json::array();
  for (const auto& c : r.clusters) {
    out["clusters"].push_back({{"direction", c.direction},
                               {"weight", c.weight},
                               {"spread", c.spread},
                               {"rationality", rational_to_json(c.rationality)},
                               {"component", c.component}});
  }
  return out;
}

Json to_json(const VolumeCheck& c) {
  Json out;
  out["estimate"] = to_json(c.estimate);
  out["expected"] = c.target;
  out["z_score"] = c.z_score;
  out["passed"] = c.passed;
  return out;
}

Json to_json(const VolumeCertificate& c) {
  Json out;
  out["amoeba"] = to_json(c.amoeba);
  out["coamoeba"] = to_json(c.coamoeba);
  out["passed"] = c.passed();
  return out;
}

Json to_json(const RealityWitness& w) {
  Json out;
  out["real"] = w.real;
  out["row_scalars"] = point_to_json(w.row_scalars);
  if (w.failing_row >= 0) out["failing_row"] = w.failing_row + 1;
  return out;
}

Json to_json(const ExpectedCounts& c) {
  Json out;
  out["log"] = c.log ? Json(*c.log) : Json(nullptr);
  out["arg"] = c.arg ? Json(*c.arg) : Json(nullptr);
  out["basis"] = c.basis;
  return out;
}

Json to_json(const RasterGrid& g) {
  Json out;
  out["mode"] = to_string(g.mode);
  out["bounds"] = {g.bounds.x_min, g.bounds.x_max, g.bounds.y_min, g.bounds.y_max};
  out["width"] = g.width;
  out["height"] = g.height;
  out["plotted"] = g.plotted;
  out["outside"] = g.outside;
  out["skipped"] = g.skipped;
  out["occupied_pixels"] = g.occupied();
  out["occupied_area"] = g.occupied_area();
  out["corrected_area"] = g.corrected_area();
  return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace amoeba
