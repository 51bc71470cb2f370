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
#include "rbaf/parser.hpp"
#include "rbaf/random.hpp"
#include "rbaf/structure.hpp"

using namespace rbaf;

TEST_CASE("a one-line document parses") {
  Framework fw = parseFramework("flavor(af). arg(a). arg(b). att(r1,a,b).");
  CHECK((fw.flavor() == Flavor::AF));
  CHECK(fw.arguments().size() == 2);
  CHECK(fw.attacks().size() == 1);
  const Element& r1 = fw.element(fw.require("r1"));
  CHECK(r1.sourceName == "a");
  CHECK(r1.targetName == "b");
}

TEST_CASE("comments and whitespace are free") {
  Framework fw = parseFramework("% header\nflavor(afn).\n  arg( x ).\n% done\n");
  CHECK(fw.arguments().size() == 1);
}

TEST_CASE("the cyclic recursive file parses as declared") {
  Framework fw = fixtures::load(fixtures::kFig4Rafn);
  CHECK((fw.flavor() == Flavor::RAFN));
  CHECK_FALSE(isSupportAcyclic(fw));
  const Element& b2 = fw.element(fw.require("b2"));
  CHECK(b2.sourceName == "w");
  CHECK(b2.targetName == "f");
}

TEST_CASE("diagnostics") {
  auto codeOf = [](const char* text) {
    try {
      parseFramework(text);
      return ErrorCode::Usage; // not reached
    } catch (const Error& e) {
      return e.code();
    }
  };
  CHECK((codeOf("flavor(af). att(r1,a,b).") == ErrorCode::DanglingEndpoint));
  CHECK((codeOf("arg(a).") == ErrorCode::MissingFlavor));
  CHECK((codeOf("flavor(af). flavor(af). ") == ErrorCode::SyntaxError));
  CHECK((codeOf("flavor(af). arg(a). arg(a).") == ErrorCode::DuplicateName));
  CHECK((codeOf("flavor(af). arg(a). sup(s1,a,a).") == ErrorCode::FlavorViolation));
  CHECK((codeOf("flavor(nope). arg(a).") == ErrorCode::SyntaxError));
  CHECK((codeOf("flavor(af) arg(a).") == ErrorCode::SyntaxError));

  try {
    parseFramework("flavor(af).\narg(a).\narg(3x).\n");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("3:5") != std::string::npos);
  }
}

TEST_CASE("printing round-trips structurally") {
  for (const char* text : {fixtures::kEx2Af, fixtures::kEx3Afn, fixtures::kEx5Afn,
                           fixtures::kFig4Rafn, fixtures::kFig4Asaf}) {
    Framework fw = fixtures::load(text);
    Framework again = parseFramework(printFramework(fw));
    CHECK(again.sameStructure(fw));
  }
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Framework fw = randomFramework(Flavor::AFRAD, seed);
    CHECK(parseFramework(printFramework(fw)).sameStructure(fw));
  }
}
