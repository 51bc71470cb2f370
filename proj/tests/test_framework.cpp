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

#include "fixtures.hpp"
#include "rbaf/framework.hpp"

using namespace rbaf;

TEST_CASE("validate accepts the demo AF") {
  Framework fw = fixtures::load(fixtures::kEx2Af);
  CHECK(fw.validated());
  CHECK(fw.arguments().size() == 4);
  CHECK(fw.attacks().size() == 6);
  CHECK(fw.supports().empty());
}

TEST_CASE("validate accepts an empty framework") {
  Framework fw(Flavor::RAFN);
  fw.validate();
  CHECK(fw.size() == 0);
  CHECK(fw.universe().empty());
}

TEST_CASE("afn may not target interactions") {
  Framework fw(Flavor::AFN);
  fw.addArgument("a");
  fw.addArgument("b");
  fw.addAttack("r1", "a", "b");
  fw.addSupport("s1", "a", "r1");
  CHECK_THROWS_WITH_AS(fw.validate(), doctest::Contains("FlavorViolation"), Error);
}

TEST_CASE("af may not declare supports") {
  Framework fw(Flavor::AF);
  fw.addArgument("a");
  fw.addSupport("s1", "a", "a");
  CHECK_THROWS_AS(fw.validate(), Error);
}

TEST_CASE("duplicate names are rejected") {
  Framework fw(Flavor::AF);
  fw.addArgument("a");
  fw.addArgument("a");
  try {
    fw.validate();
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK((e.code() == ErrorCode::DuplicateName));
  }
}

TEST_CASE("dangling endpoints are rejected") {
  Framework fw(Flavor::AF);
  fw.addArgument("a");
  fw.addAttack("r1", "a", "b");
  try {
    fw.validate();
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK((e.code() == ErrorCode::DanglingEndpoint));
  }
}

TEST_CASE("interaction sources must be arguments") {
  Framework fw(Flavor::RAFN);
  fw.addArgument("a");
  fw.addAttack("r1", "a", "a");
  fw.addAttack("r2", "r1", "a");
  CHECK_THROWS_AS(fw.validate(), Error);
}

TEST_CASE("recursive targets are fine for rec flavors") {
  Framework fw = fixtures::load(fixtures::kFig4Rafn);
  CHECK(fw.element(fw.require("a7")).target == fw.require("a1"));
  CHECK(fw.universe().size() == 16);
}

TEST_CASE("element sets resolve names and enforce the universe") {
  Framework fw = fixtures::load(fixtures::kEx3Afn);
  ElementSet s(fw, {"fish", "white"});
  CHECK(s.count() == 2);
  CHECK(s.contains("fish"));
  CHECK_FALSE(s.contains("meat"));
  CHECK_THROWS_AS(ElementSet(fw, {"nofish"}), Error);
  // Attack names are not candidates under afn.
  CHECK_THROWS_AS(ElementSet(fw, {"a1"}), Error);

  Framework rec = fixtures::load(fixtures::kFig4Rafn);
  CHECK(ElementSet(rec, {"a1", "b2", "m"}).count() == 3);
}

TEST_CASE("frameworks freeze after validation") {
  Framework fw = fixtures::load(fixtures::kEx2Af);
  CHECK_THROWS_AS(fw.addArgument("zz"), std::logic_error);
}
