//
// Copyright (c) 2026 rbaf contributors
//
// Permission is hereby granted, free of charge, to any person obtaining a copy
// of this software and associated documentation files (the "Software"), to
// deal in the Software without restriction, including without limitation the
// rights to use, copy, modify, merge, publish, distribute, sublicense, and/or
// sell copies of the Software, and to permit persons to whom the Software is
// furnished to do so, subject to the following conditions:
//
// The above copyright notice and this permission notice shall be included in
// all copies or substantial portions of the Software.
//
// THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
// IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
// FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
// AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
// LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING
// FROM, OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER
// DEALINGS IN THE SOFTWARE.
//
#include <doctest.h>

#include <string>

#include "fixtures.hpp"
#include "rbaf/tasks.hpp"

using namespace rbaf;

namespace {

TaskSpec spec(Task task, SemanticsName sem = SemanticsName::Complete) {
  TaskSpec s;
  s.task = task;
  s.semantics = sem;
  return s;
}

} // namespace

TEST_CASE("extension enumeration over the demo AF") {
  Framework fw = fixtures::load(fixtures::kEx2Af);
  TaskResult res = runTask(fw, spec(Task::EE));
  CHECK(res.extensions.size() == 4);
  // Sorted by cardinality first, then by accepted names.
  CHECK(toText(fw, res) == "{}\n{d}\n{a, d}\n{b, d}\n");
}

TEST_CASE("single-extension output is the lexicographic least") {
  Framework fw = fixtures::load(fixtures::kEx3Afn);
  TaskResult res = runTask(fw, spec(Task::SE, SemanticsName::Preferred));
  REQUIRE(res.extensions.size() == 1);
  CHECK(toText(fw, res) == "{fish, red}\n");
}

TEST_CASE("single-extension output without any extension") {
  Framework fw = parseFramework("flavor(af). arg(a). att(r1,a,a).");
  TaskResult res = runTask(fw, spec(Task::SE, SemanticsName::Stable));
  CHECK(res.extensions.empty());
  CHECK(res.answer == false);
  CHECK(toText(fw, res) == "NO\n");
}

TEST_CASE("decision tasks") {
  Framework fw = fixtures::load(fixtures::kEx5Afn);
  TaskSpec dc = spec(Task::DC, SemanticsName::Preferred);
  dc.queryElement = "d";
  CHECK(runTask(fw, dc).answer == true);

  Framework fig4 = fixtures::load(fixtures::kFig4Rafn);
  TaskSpec ve = spec(Task::VE, SemanticsName::Stable);
  ve.querySet = std::vector<std::string>{"f", "w", "sb", "a1", "a2", "a3", "a4",
                                         "a5", "a6", "a7", "a8", "b1", "b2"};
  CHECK(runTask(fig4, ve).answer == false);
}

TEST_CASE("task queries are checked") {
  Framework fw = fixtures::load(fixtures::kEx2Af);
  CHECK_THROWS_AS(runTask(fw, spec(Task::DC)), Error);
  TaskSpec bad = spec(Task::EE);
  bad.queryElement = "a";
  CHECK_THROWS_AS(runTask(fw, bad), Error);
  TaskSpec ve = spec(Task::VE);
  CHECK_THROWS_AS(runTask(fw, ve), Error);
}

TEST_CASE("translate task emits the program text") {
  Framework fw = fixtures::load(fixtures::kEx5Afn);
  TaskResult res = runTask(fw, spec(Task::Translate));
  CHECK(res.programText.find("d :- not c.") != std::string::npos);
  CHECK(toText(fw, res) == res.programText);
}

TEST_CASE("cross-check of the fixture frameworks") {
  for (const char* text : {fixtures::kEx2Af, fixtures::kEx3Afn, fixtures::kEx5Afn,
                           fixtures::kFig1RightRafn, fixtures::kFig1RightAsaf,
                           fixtures::kFig4Rafn, fixtures::kFig4Asaf}) {
    Framework fw = fixtures::load(text);
    CrossCheckReport rep = crossCheck(fw);
    CHECK(rep.pass);
    CHECK(rep.direct.size() == rep.viaProgram.size());
    CHECK(fixtures::pairSet(rep.direct) == fixtures::pairSet(rep.viaProgram));
  }
}

TEST_CASE("cross-check text of the cyclic necessity framework") {
  Framework fw = fixtures::load(fixtures::kEx5Afn);
  TaskResult res = runTask(fw, spec(Task::Check));
  CHECK(res.report->pass);
  CHECK(res.report->direct.size() == 1);
  CHECK(toText(fw, res).find("PASS") == 0);
}

TEST_CASE("json output carries both halves of each extension") {
  Framework fw = fixtures::load(fixtures::kEx2Af);
  TaskResult res = runTask(fw, spec(Task::EE, SemanticsName::Preferred));
  std::string j = toJson(fw, res);
  CHECK(j.find("\"semantics\": \"pr\"") != std::string::npos);
  CHECK(j.find("\"accepted\"") != std::string::npos);
  CHECK(j.find("\"defeated\"") != std::string::npos);

  TaskSpec dc = spec(Task::DC, SemanticsName::Preferred);
  dc.queryElement = "a";
  CHECK(toJson(fw, runTask(fw, dc)).find("\"answer\": \"YES\"") != std::string::npos);
}
