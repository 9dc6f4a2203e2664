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

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "app.hpp"
#include "test_support.hpp"
#include "tiltlab/cli/workbench.hpp"
#include "tiltlab/modrep/decompose.hpp"

using namespace tiltlab;
using namespace tiltlab::testing;

namespace {

std::string fixture(const std::string& name) { return std::string(TILTLAB_FIXTURE_DIR) + "/" + name; }

std::string read(const std::string& path) {
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run_args(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run_cli(args, out, err);
  return CliRun{code, out.str(), err.str()};
}

std::string message_of(const std::string& text) {
  try {
    parse_workbench<Fp>(text);
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

constexpr const char* kA2Header = "[algebra]\nfield F2\nvertex 1 2\narrow a 1 2\n";

}  // namespace

TEST(WorkbenchParse, FixtureA3) {
  const auto f = parse_workbench<Fp>(read(fixture("a3_f2.wb")));
  EXPECT_EQ(f.modules.size(), 3u);
  EXPECT_EQ(f.algebra->dim(), 6);
  const Rep<Fp>& c = f.module("C");
  EXPECT_EQ(c.dims, (std::vector<Index>{2, 1, 2}));
  EXPECT_TRUE(isomorphic(c, direct_sum<Fp>({projective(f.algebra, 0), projective(f.algebra, 2), simple(f.algebra, 2)}).module));
  EXPECT_EQ(f.setup("C").role, SetupRole::cotilting);
  EXPECT_EQ(f.bimodule("R").left, LeftAction::regular);
  const auto q = parse_workbench<Rational>(read(fixture("a3_q.wb")));
  EXPECT_EQ(q.modules.size(), 3u);
  EXPECT_EQ(peek_field(read(fixture("a3_q.wb"))), FieldSpec::rationals());
  EXPECT_THROW(parse_workbench<Fp>(read(fixture("a3_q.wb"))), ValidationError);
}

TEST(WorkbenchParse, Diagnostics) {
  EXPECT_THROW(parse_workbench<Fp>(""), ValidationError);
  EXPECT_NE(message_of("").find("no [algebra]"), std::string::npos);

  const std::string wrong_shape = std::string(kA2Header) + "[module M]\ndims 1 1\narrow a\n  1 0\n";
  EXPECT_THROW(parse_workbench<Fp>(wrong_shape), ValidationError);
  EXPECT_NE(message_of(wrong_shape).find("arrow a"), std::string::npos);
  EXPECT_NE(message_of(wrong_shape).find("line 8"), std::string::npos);

  const std::string missing = std::string(kA2Header) + "[module M]\ndims 1 1\n";
  EXPECT_NE(message_of(missing).find("arrow a is missing"), std::string::npos);

  EXPECT_THROW(parse_workbench<Fp>(std::string(kA2Header) + "[modul M]\n"), SyntaxError);
  EXPECT_THROW(parse_workbench<Fp>("dims 1\n"), SyntaxError);
  EXPECT_THROW(parse_workbench<Fp>(std::string(kA2Header) + "[module M]\ndims 1 x\n"), SyntaxError);
  EXPECT_THROW(parse_workbench<Fp>(std::string(kA2Header) + "relation 1 b*a\n"), ValidationError);
  EXPECT_THROW(parse_workbench<Fp>(std::string(kA2Header) + "[setup T]\nmodule M\nrole tilting\n"), ValidationError);
  EXPECT_THROW(parse_workbench<Fp>(std::string(kA2Header) + "[module M]\ndims 1 0\n[module M]\ndims 0 1\n"),
               ValidationError);
  // a*x with x^2 = 0 over k[x]: x acting by 1 violates the relation.
  const std::string loop = "[algebra]\nfield F3\nvertex 1\narrow x 1 1\nrelation 1 x*x\n[module M]\ndims 1\narrow x\n  1\n";
  EXPECT_THROW(parse_workbench<Fp>(loop), ValidationError);
  EXPECT_NE(message_of(loop).find("RelationViolated"), std::string::npos);
}

/// parse(serialize(x)) = x on random algebras and modules.
template <class S>
void check_round_trip(const FieldSpec& f, std::uint64_t seed) {
  Rng rng(seed);
  for (int it = 0; it < 15; ++it) {
    WorkbenchFile<S> w;
    w.algebra = random_algebra<S>(rng, f);
    w.quiver = *w.algebra->quiver();
    w.relations = w.algebra->relations();
    for (int k = 0; k < 3; ++k) w.modules.push_back({"M" + std::to_string(k), random_module(w.algebra, rng)});
    w.bimodules.push_back({"B", "M0", LeftAction::endomorphism});
    w.setups.push_back({"T", "M1", it % 2 ? SetupRole::tilting : SetupRole::cotilting});
    const std::string text = serialize_workbench(w);
    const WorkbenchFile<S> back = parse_workbench<S>(text);
    ASSERT_TRUE(same_workbench(w, back)) << text;
    ASSERT_EQ(serialize_workbench(back), text);
  }
}

TEST(WorkbenchProperties, RoundTripF2) { check_round_trip<Fp>(kF2, 701); }
TEST(WorkbenchProperties, RoundTripF3) { check_round_trip<Fp>(kF3, 702); }
TEST(WorkbenchProperties, RoundTripQ) { check_round_trip<Rational>(kQ, 703); }

TEST(WorkbenchProperties, FixturesRoundTrip) {
  for (const char* name : {"a3_f2.wb", "x2_f2.wb", "gamma_a2_f2.wb"}) {
    const auto f = parse_workbench<Fp>(read(fixture(name)));
    EXPECT_TRUE(same_workbench(f, parse_workbench<Fp>(serialize_workbench(f)))) << name;
  }
  const auto q = parse_workbench<Rational>(read(fixture("a3_q.wb")));
  EXPECT_TRUE(same_workbench(q, parse_workbench<Rational>(serialize_workbench(q))));
}

TEST(CliExamples, CotiltingOnA3) {
  const CliRun r = run_args({"cotilting", "--input", fixture("a3_f2.wb"), "--module", "C"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("agreement: true"), std::string::npos) << r.out;
}

TEST(CliExamples, TensorlyFaithfulAnswersFalse) {
  const CliRun r = run_args({"tensorly-faithful", "--input", fixture("a3_f2.wb"), "--bimodule", "C", "--json"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("\"value\": false"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("\"witness\": \"simple"), std::string::npos) << r.out;
}

TEST(CliExamples, VerifyOnSelfInjective) {
  const CliRun r = run_args({"verify", "--theorem", "T3.5", "--input", fixture("x2_f2.wb"), "--json"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("\"mismatches\": []"), std::string::npos) << r.out;
}

TEST(CliExamples, ExitCodes) {
  EXPECT_EQ(run_args({"pd", "--input", fixture("missing.wb"), "--module", "C"}).code, cli::kInputError);
  EXPECT_EQ(run_args({"pd", "--input", fixture("a3_f2.wb"), "--module", "nope"}).code, cli::kInputError);
  EXPECT_EQ(run_args({"frobnicate"}).code, cli::kInputError);
  EXPECT_EQ(run_args({"verify", "--theorem", "X1", "--input", fixture("a3_f2.wb")}).code, cli::kInputError);
  // k[x]/(x^2): pd(k) is infinite, so only a lower bound is known.
  const CliRun pd = run_args({"pd", "--input", fixture("x2_f2.wb"), "--module", "k", "--bound", "5"});
  EXPECT_EQ(pd.code, cli::kInconclusive);
  EXPECT_NE(pd.out.find("AtLeast(5)"), std::string::npos) << pd.out;
  const CliRun ext = run_args({"ext", "--input", fixture("a3_f2.wb"), "--module", "simple:2", "--module", "simple:1"});
  EXPECT_EQ(ext.code, 0);
  EXPECT_NE(ext.out.find("dims: [0, 1, 0, 0]"), std::string::npos) << ext.out;
  const CliRun tor = run_args({"tor", "--input", fixture("a3_f2.wb"), "--module", "simple:2", "--module", "simple:1"});
  EXPECT_NE(tor.out.find("dims: [0, 1, 0, 0]"), std::string::npos) << tor.out;
  const CliRun bass = run_args({"bass", "--input", fixture("a3_f2.wb"), "--module", "injective:2", "--bimodule", "C"});
  EXPECT_EQ(bass.code, 0) << bass.err;
  EXPECT_NE(bass.out.find("member: true [certified]"), std::string::npos) << bass.out;
  const CliRun round = run_args({"foxby-roundtrip", "--input", fixture("a3_f2.wb"), "--module", "S:regular", "--bimodule",
                         "C", "--direction", "auslander"});
  EXPECT_EQ(round.code, 0) << round.err;
  EXPECT_NE(round.out.find("is_isomorphism: true"), std::string::npos) << round.out;
}

TEST(CliProperties, DeterministicJson) {
  for (const char* name : {"a3_f2.wb", "a3_q.wb", "gamma_a2_f2.wb"}) {
    const std::vector<std::string> args = {"verify", "--theorem", "L2.9", "--input", fixture(name), "--json",
                                           "--catalog", "depth=3,extensions=5,seed=4"};
    const CliRun a = run_args(args);
    const CliRun b = run_args(args);
    EXPECT_EQ(a.code, b.code);
    EXPECT_EQ(a.out, b.out) << name;
  }
}
