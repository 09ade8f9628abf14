// Copyright 2026 The hharm Authors.
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


#include <gtest/gtest.h>

#include <sstream>

#include "hharm/report.hpp"
#include "hharm/suites.hpp"
#include "test_support.hpp"

namespace hharm {
namespace {

Report sample() {
  Report rep;
  rep.suite = "kernels";
  rep.n = 3;
  check_equal(rep, "ok", {{"n", 3}, {"s", 1}}, Rat(2), Rat(2));
  check_equal(rep, "bad", {{"n", 3}}, make_rat(BigInt(1), BigInt(2)), Rat(-3));
  check_true(rep, "flag", {}, false, "x,\"y\"");
  rep.notes.push_back("a note");
  return rep;
}

TEST(Report, StatusAndValuesOnlyForFailures) {
  const Report rep = sample();
  EXPECT_FALSE(rep.passed());
  EXPECT_EQ(rep.failures(), 2U);
  EXPECT_FALSE(rep.checks[0].lhs.has_value());
  EXPECT_EQ(*rep.checks[1].lhs, "1/2");
  EXPECT_EQ(*rep.checks[1].rhs, "-3");
}

TEST(Report, AppendDeduplicatesNotes) {
  Report a = sample();
  Report b = sample();
  a.append(std::move(b));
  EXPECT_EQ(a.checks.size(), 6U);
  EXPECT_EQ(a.notes.size(), 1U);
}

TEST(Report, JsonShapeAndSchema) {
  const auto doc = to_json(sample());
  EXPECT_EQ(doc.dump(),
            R"({"suite":"kernels","n":3,"checks":[{"id":"ok","params":{"n":3,"s":1},"status":"pass"},)"
            R"({"id":"bad","params":{"n":3},"status":"fail","lhs":"1/2","rhs":"-3"},)"
            R"({"id":"flag","params":{},"status":"fail","lhs":"x,\"y\"","rhs":"true"}],"notes":["a note"]})");
  const hharm_test::SchemaValidator validator(hharm_test::load_json(HHARM_SCHEMA_PATH));
  EXPECT_EQ(validator.validate(nlohmann::json::parse(doc.dump())), std::nullopt);
  auto broken = nlohmann::json::parse(doc.dump());
  broken["checks"][0]["status"] = "maybe";
  EXPECT_TRUE(validator.validate(broken).has_value());
  broken = nlohmann::json::parse(doc.dump());
  broken["extra"] = 1;
  EXPECT_TRUE(validator.validate(broken).has_value());
}

TEST(Report, TextAndCsv) {
  std::ostringstream text;
  write_text(text, sample());
  EXPECT_EQ(text.str(),
            "kernels n=3: FAIL (1/3 checks)\n"
            "  FAIL bad [n=3] lhs=1/2 rhs=-3\n"
            "  FAIL flag [] lhs=x,\"y\" rhs=true\n"
            "  note: a note\n");
  std::ostringstream csv;
  write_csv_header(csv);
  write_csv(csv, sample());
  EXPECT_EQ(csv.str(),
            "suite,n,id,params,status,lhs,rhs\n"
            "kernels,3,ok,n=3 s=1,pass,,\n"
            "kernels,3,bad,n=3,fail,1/2,-3\n"
            "kernels,3,flag,,fail,\"x,\"\"y\"\"\",true\n");
}

TEST(Report, OperatorMismatchNamesEntry) {
  Report rep;
  const Operator a = Operator::identity(Level::at(1), 2);
  check_equal(rep, "m", {}, a, a.scaled(Rat(3)));
  ASSERT_FALSE(rep.passed());
  EXPECT_EQ(*rep.checks[0].lhs, "[0,0] 1");
  EXPECT_EQ(*rep.checks[0].rhs, "[0,0] 3");
  check_equal(rep, "shape", {}, a, Operator::identity(Level::at(1), 3));
  EXPECT_EQ(*rep.checks[1].lhs, "2x2");
}

TEST(Suites, RegistryAndGuards) {
  EXPECT_EQ(suite_registry().size(), 11U);
  EXPECT_EQ(find_suite("theorem5").max_n, 8);
  EXPECT_THROW(find_suite("nope"), std::invalid_argument);
  EXPECT_THROW(run_suite("multiplication", 9), GuardError);
  const Report rep = run_suite("weights", 3, true);
  EXPECT_TRUE(rep.passed());
  EXPECT_EQ(rep.n, 3);
  EXPECT_TRUE(rep.ms.has_value());
  EXPECT_FALSE(run_suite("weights", 3).ms.has_value());
}

TEST(Suites, DeterministicAcrossRuns) {
  for (const auto& info : suite_registry()) {
    const int n = std::min(info.max_n, 4);
    EXPECT_EQ(to_json(run_suite(info.name, n)).dump(), to_json(run_suite(info.name, n)).dump())
        << info.name;
  }
}

}  // namespace
}  // namespace hharm
