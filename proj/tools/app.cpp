/*
 *   Copyright 2026 The tiltlab Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "app.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "tiltlab/cli/workbench.hpp"
#include "tiltlab/foxby/foxby.hpp"
#include "tiltlab/modrep/standard.hpp"

namespace tiltlab::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::string command;
  std::string input;
  std::optional<Index> bound;
  std::optional<std::uint64_t> seed;
  bool json = false;
  std::string catalog;
  std::vector<std::string> modules;
  std::string bimodule;
  std::string setup;
  std::string theorem;
  Index degree = 3;
  std::optional<Index> n;
  std::string direction = "auslander";
};

struct Result {
  Json report;
  bool mismatch = false;
  bool inconclusive = false;
};

Json verdict_json(const Verdict& v) {
  Json j;
  j["value"] = v.value;
  j["status"] = v.status.str();
  if (!v.witness.empty()) j["witness"] = v.witness;
  return j;
}

Json dim_json(const DimResult& d) {
  Json j;
  j["value"] = d.str();
  j["status"] = d.status.str();
  if (!d.witness.empty()) j["witness"] = d.witness;
  return j;
}

Json dims_json(const Rep<Fp>& m) { return m.dims; }
Json dims_json(const Rep<Rational>& m) { return m.dims; }

template <class Scalar>
Json coresolution_json(const CoresolutionResult<Scalar>& c) {
  Json j;
  j["success"] = c.success;
  j["length"] = c.length;
  j["outcome"] = to_string(c.outcome);
  if (!c.reason.empty()) j["reason"] = c.reason;
  return j;
}

template <class Scalar>
Json natural_map_json(const NaturalMapReport<Scalar>& r) {
  Json j;
  j["source"] = dims_json(r.source);
  j["target"] = dims_json(r.target);
  j["is_injective"] = r.is_injective;
  j["is_surjective"] = r.is_surjective;
  j["is_isomorphism"] = r.is_isomorphism;
  return j;
}

Json named_json(const NamedVerdict& v) {
  Json j;
  j["label"] = v.label;
  j["verdict"] = verdict_json(v.verdict);
  return j;
}

template <class Scalar>
int vertex_of(const Algebra<Scalar>& a, const std::string& name) {
  for (int v = 0; v < a.num_vertices(); ++v) {
    if (a.vertex_name(v) == name) return v;
  }
  throw ValidationError("unknown vertex '" + name + "'");
}

/// NAME, or regular, dual, simple:V, projective:V, injective:V; an "S:"
/// prefix refers to the left algebra of the bimodule.
template <class Scalar>
Rep<Scalar> resolve(const std::string& ref, const WorkbenchFile<Scalar>& file, const AlgebraPtr<Scalar>& left) {
  std::string rest = ref;
  AlgebraPtr<Scalar> a = file.algebra;
  const bool over_left = rest.rfind("S:", 0) == 0;
  if (over_left) {
    if (!left) throw ValidationError("module '" + ref + "' needs --bimodule");
    a = left;
    rest = rest.substr(2);
  }
  if (rest == "regular") return regular_module(a);
  if (rest == "dual") return dual_regular(a);
  const auto colon = rest.find(':');
  if (colon != std::string::npos) {
    const std::string kind = rest.substr(0, colon);
    const int v = vertex_of(*a, rest.substr(colon + 1));
    if (kind == "simple") return simple(a, v);
    if (kind == "projective") return projective(a, v);
    if (kind == "injective") return injective(a, v);
    throw ValidationError("unknown module form '" + ref + "'");
  }
  if (over_left) throw ValidationError("unknown module form '" + ref + "'");
  return file.module(rest);
}

template <class Scalar>
Bimodule<Scalar> load_bimodule(const WorkbenchFile<Scalar>& file, const Options& o, std::uint64_t seed) {
  std::string name = o.bimodule;
  if (name.empty()) {
    if (file.bimodules.size() != 1) throw ValidationError("--bimodule is required");
    name = file.bimodules.front().name;
  }
  const BimoduleSpec& spec = file.bimodule(name);
  if (spec.left == LeftAction::regular) return regular_bimodule(file.algebra);
  return endo_algebra(file.module(spec.module), seed).bimodule;
}

template <class Scalar>
std::vector<Rep<Scalar>> modules(const Options& o, const WorkbenchFile<Scalar>& file, std::size_t count,
                                 const AlgebraPtr<Scalar>& left = nullptr) {
  if (o.modules.size() != count) {
    throw ValidationError(o.command + " takes " + std::to_string(count) + " --module argument(s)");
  }
  std::vector<Rep<Scalar>> out;
  for (const auto& ref : o.modules) out.push_back(resolve(ref, file, left));
  return out;
}

template <class Scalar>
Result run(const Options& o, const WorkbenchFile<Scalar>& file, Index bound, std::uint64_t seed) {
  Result r;
  Json& j = r.report;
  j["command"] = o.command;
  j["field"] = file.field().name();
  j["bound"] = bound;
  j["seed"] = seed;
  const std::string& c = o.command;
  if (c == "ext" || c == "tor") {
    const auto m = modules(o, file, 2);
    j["modules"] = o.modules;
    Json dims = Json::array();
    const Bimodule<Scalar> dn = dual_bimodule(m[1]);
    for (Index i = 0; i <= o.degree; ++i) dims.push_back(c == "ext" ? ext_dim(m[0], m[1], i) : tor_dim(m[0], dn, i));
    j["dims"] = dims;
    const Verdict v = ext_vanishes_all(m[0], m[1], bound);
    j["vanishing"] = verdict_json(v);
    r.inconclusive = !v.status.certified;
  } else if (c == "pd" || c == "id" || c == "fd") {
    const auto m = modules(o, file, 1);
    j["module"] = o.modules[0];
    const DimResult d = c == "pd" ? proj_dim(m[0], bound) : c == "id" ? inj_dim(m[0], bound) : flat_dim(m[0], bound);
    j["dimension"] = dim_json(d);
    r.inconclusive = !d.status.certified;
  } else if (c == "gpd" || c == "gid" || c == "gfd" || c == "gorenstein-profile") {
    const GorensteinProfile p = detect_gorenstein(file.algebra, bound);
    Json profile;
    profile["right_selfinj_dim"] = dim_json(p.right_selfinj_dim);
    profile["left_selfinj_dim"] = dim_json(p.left_selfinj_dim);
    profile["is_gorenstein"] = p.is_gorenstein;
    j["profile"] = profile;
    if (c == "gorenstein-profile") {
      r.inconclusive = !p.is_gorenstein;
    } else {
      const auto m = modules(o, file, 1);
      j["module"] = o.modules[0];
      const DimResult d = c == "gpd" ? gpd(m[0], p, bound) : c == "gid" ? gid(m[0], p, bound) : gfd(m[0], p, bound);
      j["dimension"] = dim_json(d);
      r.inconclusive = !d.status.certified;
    }
  } else if (c == "tilting") {
    const auto m = modules(o, file, 1);
    j["module"] = o.modules[0];
    Index n = bound;
    if (o.n) {
      n = *o.n;
    } else if (const DimResult pd = proj_dim(m[0], bound); pd.certified_finite()) {
      n = pd.value;
    }
    const TiltingReport<Scalar> t = check_tilting(m[0], n, bound, seed);
    j["n"] = t.n;
    j["pd"] = dim_json(t.pd);
    j["selforthogonal"] = verdict_json(t.selforth);
    j["coresolution"] = coresolution_json(t.coresolution);
    j["outcome"] = to_string(t.outcome);
    r.inconclusive = t.outcome == Outcome::not_verified;
  } else if (c == "wakamatsu") {
    const auto m = modules(o, file, 1);
    j["module"] = o.modules[0];
    const WakamatsuReport<Scalar> w = check_wakamatsu(m[0], bound, seed);
    j["right_selforthogonal"] = verdict_json(w.right_selforth);
    j["left_selforthogonal"] = w.left_selforth ? verdict_json(*w.left_selforth) : Json("not evaluated");
    j["homothety_rank"] = w.homothety_rank;
    j["algebra_dim"] = w.algebra_dim;
    j["left_endomorphism_dim"] = w.left_endomorphism_dim;
    j["homothety_iso"] = w.homothety_iso;
    j["outcome"] = to_string(w.outcome);
    r.inconclusive = w.outcome == Outcome::not_verified;
  } else if (c == "cotilting") {
    const auto m = modules(o, file, 1);
    j["module"] = o.modules[0];
    const CotiltingReport<Scalar> t = check_cotilting(m[0], bound, seed);
    j["id_right"] = dim_json(t.id_right);
    j["selforthogonal"] = verdict_json(t.selforth);
    j["over_cogenerator"] = coresolution_json(t.over_cogenerator);
    j["over_dual_regular"] = coresolution_json(t.over_dual_regular);
    j["wakamatsu"] = to_string(t.wakamatsu.outcome);
    j["id_left"] = t.id_left ? dim_json(*t.id_left) : Json("not evaluated");
    j["sample_size"] = t.sample_size;
    if (!t.sample_failure.empty()) j["sample_failure"] = t.sample_failure;
    j["variant_a"] = to_string(t.variant_a);
    j["variant_b"] = to_string(t.variant_b);
    j["variant_c"] = to_string(t.variant_c);
    j["variant_d"] = to_string(t.variant_d);
    j["agreement"] = t.agreement;
    j["is_cotilting"] = t.is_cotilting();
    r.mismatch = !t.agreement || (t.variant_a == Outcome::verified && t.variant_b == Outcome::refuted);
    r.inconclusive = t.variant_a == Outcome::not_verified || t.variant_c == Outcome::not_verified ||
                     t.variant_d == Outcome::not_verified;
  } else if (c == "tensorly-faithful") {
    const FaithfulReport f = check_tensorly_faithful(load_bimodule(file, o, seed));
    j["tensorly_faithful"] = verdict_json(Verdict{f.value, Status::certified_status(), f.witness});
  } else if (c == "auslander" || c == "bass") {
    const Bimodule<Scalar> t = load_bimodule(file, o, seed);
    const auto m = modules(o, file, 1, t.left);
    j["module"] = o.modules[0];
    const MembershipReport<Scalar> mr = c == "auslander" ? auslander_member(m[0], t, bound) : bass_member(m[0], t, bound);
    j["tor_vanishing"] = verdict_json(mr.tor_vanishing);
    j["ext_vanishing"] = verdict_json(mr.ext_vanishing);
    j["natural_map"] = natural_map_json(mr.natural_map);
    j["member"] = verdict_json(mr.member);
    r.inconclusive = !mr.member.status.certified;
  } else if (c == "foxby-roundtrip") {
    const Bimodule<Scalar> t = load_bimodule(file, o, seed);
    if (o.direction != "auslander" && o.direction != "bass") {
      throw ValidationError("--direction must be auslander or bass");
    }
    const bool auslander = o.direction == "auslander";
    const auto m = modules(o, file, 1, auslander ? t.left : nullptr);
    j["module"] = o.modules[0];
    j["direction"] = o.direction;
    const MembershipReport<Scalar> mr = auslander ? auslander_member(m[0], t, bound) : bass_member(m[0], t, bound);
    const Roundtrip<Scalar> rt =
        foxby_roundtrip(m[0], t, auslander ? FoxbyDirection::auslander : FoxbyDirection::bass, bound);
    j["member"] = verdict_json(mr.member);
    j["roundtrip"] = dims_json(rt.module);
    j["is_isomorphism"] = rt.is_isomorphism;
    r.inconclusive = !mr.member.status.certified;
  } else if (c == "verify") {
    std::string name = o.setup;
    if (name.empty()) {
      if (file.setups.empty()) throw ValidationError("the input has no [setup] section");
      name = file.setups.front().name;
    }
    const SetupSpec& spec = file.setup(name);
    CatalogSpec cat = CatalogSpec::parse(o.catalog);
    if (o.catalog.find("seed=") == std::string::npos) cat.seed = seed;
    const Setup<Scalar> s = make_setup(spec.name, file.module(spec.module), seed);
    const HarnessReport h = verify_theorem(o.theorem, s, cat, bound);
    j["theorem"] = h.theorem;
    j["setup"] = h.setup;
    j["role"] = spec.role == SetupRole::cotilting ? "cotilting" : "tilting";
    j["catalog"] = h.catalog;
    j["catalog_size"] = h.catalog_size;
    j["exploratory"] = h.exploratory;
    Json hyps = Json::array();
    for (const auto& v : h.hypotheses) hyps.push_back(named_json(v));
    j["hypotheses"] = hyps;
    Json entries = Json::array();
    for (const auto& e : h.entries) {
      Json x;
      x["module"] = e.module;
      Json vs = Json::array();
      for (const auto& v : e.verdicts) vs.push_back(named_json(v));
      x["verdicts"] = vs;
      x["outcome"] = to_string(e.outcome);
      if (!e.note.empty()) x["note"] = e.note;
      entries.push_back(x);
    }
    j["entries"] = entries;
    j["mismatches"] = h.mismatches;
    j["inconclusive"] = h.inconclusive;
    j["exploratory_mismatches"] = h.exploratory_mismatches;
    j["all_consistent"] = h.all_consistent();
    r.mismatch = !h.all_consistent();
    r.inconclusive = !h.inconclusive.empty();
  } else {
    throw ValidationError("unknown command '" + c + "'");
  }
  return r;
}

bool is_verdict(const Json& j) { return j.is_object() && j.contains("value") && j.contains("status"); }

std::string scalar_text(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

void print_text(const Json& j, const std::string& prefix, std::ostream& out) {
  if (is_verdict(j)) {
    out << prefix << ": " << scalar_text(j["value"]) << " [" << j["status"].get<std::string>() << "]";
    if (j.contains("witness")) out << " " << j["witness"].get<std::string>();
    out << '\n';
  } else if (j.is_object()) {
    for (const auto& [k, v] : j.items()) print_text(v, prefix.empty() ? k : prefix + "." + k, out);
  } else if (j.is_array() && std::all_of(j.begin(), j.end(), [](const Json& x) { return x.is_primitive(); })) {
    out << prefix << ": [";
    for (std::size_t i = 0; i < j.size(); ++i) out << (i ? ", " : "") << scalar_text(j[i]);
    out << "]\n";
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) print_text(j[i], prefix + "[" + std::to_string(i) + "]", out);
  } else {
    out << prefix << ": " << scalar_text(j) << '\n';
  }
}

template <class Scalar>
int execute(const Options& o, const std::string& text, std::ostream& out) {
  const WorkbenchFile<Scalar> file = parse_workbench<Scalar>(text);
  const Index bound = o.bound ? *o.bound : default_bound(*file.algebra);
  std::uint64_t seed = 0;
  if (o.seed) {
    seed = *o.seed;
  } else if (const char* env = std::getenv("TILTLAB_SEED")) {
    try {
      seed = std::stoull(env);
    } catch (const std::logic_error&) {
      throw ValidationError("TILTLAB_SEED must be a non-negative integer");
    }
  }
  const Result r = run(o, file, bound, seed);
  if (o.json) {
    out << r.report.dump(2) << '\n';
  } else {
    print_text(r.report, "", out);
  }
  if (r.mismatch) return kMismatch;
  return r.inconclusive ? kInconclusive : kConsistent;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Verification workbench for tilting, cotilting and Gorenstein homological algebra", "tiltlab"};
  app.require_subcommand(1);
  Options o;
  const std::vector<std::pair<std::string, std::string>> commands = {
      {"ext", "dim Ext^i(M, N) and vanishing of Ext^{>0}"},
      {"tor", "dim Tor_i(M, D N) and its vanishing"},
      {"pd", "projective dimension"},
      {"id", "injective dimension"},
      {"fd", "flat dimension"},
      {"gpd", "Gorenstein projective dimension"},
      {"gid", "Gorenstein injective dimension"},
      {"gfd", "Gorenstein flat dimension"},
      {"tilting", "tilting check"},
      {"wakamatsu", "Wakamatsu tilting check"},
      {"cotilting", "cotilting check with the four variants"},
      {"tensorly-faithful", "tensor faithfulness of a bimodule"},
      {"auslander", "Auslander class membership"},
      {"bass", "Bass class membership"},
      {"foxby-roundtrip", "Foxby equivalence round trip"},
      {"gorenstein-profile", "self-injective dimensions of the algebra"},
      {"verify", "theorem harness over catalogs"}};
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--input", o.input, "workbench file")->required();
    sub->add_option("--bound", o.bound, "resolution bound (default max(30, 2 dim A))");
    sub->add_option("--seed", o.seed, "seed (default TILTLAB_SEED or 0)");
    sub->add_flag("--json", o.json, "JSON report");
    sub->add_option("--module", o.modules,
                    "module name, or regular, dual, simple:V, projective:V, injective:V (prefix S: for the left algebra)");
    sub->add_option("--bimodule", o.bimodule, "bimodule name");
    if (name == "ext" || name == "tor") sub->add_option("--degree", o.degree, "largest degree listed (default 3)");
    if (name == "tilting") sub->add_option("--n", o.n, "bound on pd (default: pd when finite)");
    if (name == "foxby-roundtrip") sub->add_option("--direction", o.direction, "auslander or bass");
    if (name == "verify") {
      sub->add_option("--theorem", o.theorem, "theorem identifier")->required();
      sub->add_option("--setup", o.setup, "setup name (default: the first)");
      sub->add_option("--catalog", o.catalog, "catalog spec such as depth=4,extensions=10,seed=1");
    }
    sub->callback([&o, name = name] { o.command = name; });
  }
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kConsistent;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  try {
    std::ifstream in(o.input);
    if (!in) throw ValidationError("cannot read '" + o.input + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    if (peek_field(text).is_prime()) return execute<Fp>(o, text, out);
    return execute<Rational>(o, text, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
}

}  // namespace tiltlab::cli
