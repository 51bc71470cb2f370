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
// End-to-end acceptance runs. Each criterion prints a single PASS/FAIL line;
// the process exits with the number of failed criteria. An optional argument
// selects one criterion by number.
//
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "fixtures.hpp"
#include "rbaf/psm.hpp"
#include "rbaf/random.hpp"
#include "rbaf/semantics.hpp"
#include "rbaf/structure.hpp"
#include "rbaf/tasks.hpp"

using namespace rbaf;
using fixtures::NameSet;
using fixtures::NameSetSet;

namespace {

struct Check {
  bool ok = true;
  std::ostringstream notes;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes << "    failed: " << what << "\n";
    }
  }
};

const Flavor kAllFlavors[] = {Flavor::AF,   Flavor::AFN,  Flavor::AFD, Flavor::RAFN,
                              Flavor::ASAF, Flavor::RAFD, Flavor::AFRAD};

const SemanticsName kAllSemantics[] = {SemanticsName::Grounded, SemanticsName::Complete,
                                       SemanticsName::Stable, SemanticsName::Preferred};

NameSetSet accepted(const Framework& fw, SemanticsName sem, Mode mode = Mode::General) {
  SolveOptions opts;
  opts.mode = mode;
  return fixtures::acceptedSets(enumerateExtensions(fw, sem, opts));
}

std::string show(const NameSet& s) {
  std::ostringstream out;
  out << "{";
  bool first = true;
  for (const auto& n : s) {
    if (!first) out << ", ";
    first = false;
    out << n;
  }
  out << "}";
  return out.str();
}

std::string show(const NameSetSet& sets) {
  std::ostringstream out;
  for (const auto& s : sets) out << show(s) << " ";
  return out.str();
}

// --- criteria ---------------------------------------------------------------

void criterion1(Check& c) {
  Framework fw = fixtures::load(fixtures::kEx2Af);
  c.require(accepted(fw, SemanticsName::Complete) ==
                NameSetSet{{}, {"d"}, {"a", "d"}, {"b", "d"}},
            "complete extensions of the demo AF");
  NameSetSet prst{{"a", "d"}, {"b", "d"}};
  c.require(accepted(fw, SemanticsName::Preferred) == prst, "preferred extensions");
  c.require(accepted(fw, SemanticsName::Stable) == prst, "stable extensions");
  c.require(accepted(fw, SemanticsName::Grounded) == NameSetSet{{}}, "grounded extension");
}

void criterion2(Check& c) {
  Framework fw = fixtures::load(fixtures::kEx3Afn);
  c.require(accepted(fw, SemanticsName::Complete) ==
                NameSetSet{{},
                           {"red"},
                           {"fish"},
                           {"fish", "red"},
                           {"fish", "white"},
                           {"meat", "red"}},
            "six complete extensions of the menu framework");
  NameSetSet prst{{"fish", "red"}, {"fish", "white"}, {"meat", "red"}};
  c.require(accepted(fw, SemanticsName::Preferred) == prst, "preferred extensions");
  c.require(accepted(fw, SemanticsName::Stable) == prst, "stable extensions");
  c.require(accepted(fw, SemanticsName::Grounded) == NameSetSet{{}}, "grounded is empty");
  c.require(fixtures::nameSet(defeated(fw, ElementSet(fw, {"fish", "white"}), Mode::General)) ==
                NameSet{"meat", "red"},
            "defeat of {fish, white}");
  c.require(fixtures::nameSet(acceptable(fw, ElementSet(fw, {"fish", "white"}), Mode::General)) ==
                NameSet{"fish", "white"},
            "acceptability of {fish, white}");
}

void criterion3(Check& c) {
  Framework fw = fixtures::load(fixtures::kEx5Afn);
  auto co = enumerateExtensions(fw, SemanticsName::Complete);
  c.require(co.size() == 1, "a single complete extension");
  if (co.size() == 1) {
    c.require(fixtures::nameSet(co[0].accepted) == NameSet{"d"}, "accepted half is {d}");
    c.require(fixtures::nameSet(co[0].defeated) == NameSet{"a", "b", "c", "e", "f"},
              "defeated half is {a,b,c,e,f}");
  }
  for (SemanticsName sem :
       {SemanticsName::Grounded, SemanticsName::Preferred, SemanticsName::Stable})
    c.require(accepted(fw, sem) == NameSetSet{{"d"}},
              std::string("{d} under ") + toString(sem));
}

void criterion4(Check& c) {
  Framework fw = fixtures::load(fixtures::kEx5Afn);
  LogicProgram p = translate(fw);
  std::set<std::string> printed;
  {
    std::istringstream in(p.print());
    std::string line;
    while (std::getline(in, line))
      if (!line.empty()) printed.insert(line);
  }
  c.require(printed == std::set<std::string>{"a :- b.", "b :- a.", "c :- b.", "d :- not c.",
                                             "e :- not d.", "f :- e."},
            "emitted program of the cyclic necessity framework");

  auto models = enumeratePsm(p);
  c.require(models.size() == 1, "a single partial stable model");
  if (models.size() == 1)
    c.require(formatModel(p, models[0]) == "{not a, not b, not c, d, not e, not f}",
              "the model is {not a, not b, not c, d, not e, not f}");
}

void criterion5(Check& c) {
  // Acyclic recursive menu framework: the sorbet-side extensions appear among
  // the preferred ones.
  {
    Framework fw = fixtures::load(fixtures::kFig1RightRafn);
    auto pr = accepted(fw, SemanticsName::Preferred);
    NameSet e0{"s", "m", "f", "w", "b1", "a3", "a4", "a5", "a6", "a7", "a8"};
    NameSet e1{"s", "m", "f", "r", "b1", "a3", "a4", "a5", "a6", "a7", "a8"};
    c.require(pr.count(e0) == 1, "rafn preferred contains " + show(e0));
    c.require(pr.count(e1) == 1, "rafn preferred contains " + show(e1));
  }
  {
    Framework fw = fixtures::load(fixtures::kFig1RightAsaf);
    auto pr = accepted(fw, SemanticsName::Preferred);
    NameSet e0{"s", "m", "f", "w", "b1", "a4", "a5", "a7", "a8"};
    NameSet e1{"s", "m", "f", "r", "b1", "a3", "a5", "a7", "a8"};
    c.require(pr.count(e0) == 1, "asaf preferred contains " + show(e0));
    c.require(pr.count(e1) == 1, "asaf preferred contains " + show(e1));
  }

  // Cyclic variant: exactly two preferred extensions, also stable.
  {
    Framework fw = fixtures::load(fixtures::kFig4Rafn);
    NameSetSet expect{
        {"m", "r", "sb", "a1", "a2", "a3", "a4", "a5", "a6", "a7", "a8", "b1", "b2"},
        {"m", "r", "s", "a3", "a4", "a5", "a6", "a7", "a8", "b1", "b2"}};
    c.require(accepted(fw, SemanticsName::Preferred) == expect, "rafn preferred pair");
    c.require(accepted(fw, SemanticsName::Stable) == expect, "rafn stable pair");
    for (NameSet rejected :
         {NameSet{"f", "w", "sb", "a1", "a2", "a3", "a4", "a5", "a6", "a7", "a8", "b1", "b2"},
          NameSet{"f", "m", "w", "s", "a3", "a4", "a5", "a6", "a7", "a8", "b1", "b2"}})
      c.require(!isExtension(fw, fixtures::setOf(fw, rejected), SemanticsName::Stable),
                "rafn rejects " + show(rejected) + " as stable");
  }
  {
    Framework fw = fixtures::load(fixtures::kFig4Asaf);
    NameSetSet expect{{"m", "r", "sb", "a2", "a3", "a6", "b1", "b2"},
                      {"m", "r", "s", "a3", "a5", "a7", "a8", "b1", "b2"}};
    c.require(accepted(fw, SemanticsName::Preferred) == expect, "asaf preferred pair");
    c.require(accepted(fw, SemanticsName::Stable) == expect, "asaf stable pair");
    for (NameSet rejected : {NameSet{"f", "w", "sb", "a1", "a4", "a6", "b1", "b2"},
                             NameSet{"f", "m", "w", "s", "a4", "a5", "a7", "a8", "b1", "b2"}})
      c.require(!isExtension(fw, fixtures::setOf(fw, rejected), SemanticsName::Stable),
                "asaf rejects " + show(rejected) + " as stable");
  }
}

void criterion6(Check& c) {
  Framework fw = fixtures::load(fixtures::kFig4Rafn);
  LogicProgram p = translate(fw);

  // Reference model list for this instance. Three of the six (the first,
  // third and fifth below) leave the cycle atoms f and w undefined although
  // every rule that could support them is positively looped, so the
  // least-model check classifies those atoms as false and rejects the
  // interpretations; the solver finds exactly the other three. The assertion
  // keeps the reference values.
  NameSet e0{"a3", "a4", "a5", "a6", "a7", "a8", "b1", "b2"};
  auto plus = [&e0](const NameSet& extra) {
    NameSet s = e0;
    s.insert(extra.begin(), extra.end());
    return s;
  };
  NameSetSet reference{e0,
                       plus({"m", "r"}),
                       plus({"m", "s"}),
                       plus({"m", "r", "s"}),
                       plus({"sb", "a1", "a2"}),
                       plus({"m", "r", "sb", "a1", "a2"})};

  NameSetSet found;
  for (const auto& m : enumeratePsm(p)) {
    NameSet tru;
    m.tru.forEach([&](int a) { tru.insert(p.atomName(a)); });
    found.insert(tru);
  }
  c.require(found == reference,
            "model positives match the six reference sets (found: " + show(found) + ")");

  CrossCheckReport rep = crossCheck(fw);
  c.require(rep.pass, "cross-check identifies the models with the complete extensions");
}

void criterion7(Check& c) {
  for (Flavor f : kAllFlavors) {
    int pass = 0;
    const int count = 500;
    for (int i = 0; i < count; ++i) {
      std::uint64_t seed = 0xace07ull * (i + 1) + (static_cast<std::uint64_t>(f) << 40);
      Framework fw = randomFramework(f, seed);
      CrossCheckReport rep = crossCheck(fw);
      if (rep.pass) {
        ++pass;
      } else if (c.ok) {
        c.notes << "    counterexample (" << toString(f) << ", seed " << seed << "):\n"
                << printFramework(fw);
      }
    }
    c.require(pass == count,
              std::string(toString(f)) + ": " + std::to_string(pass) + "/" +
                  std::to_string(count) + " route agreements");
  }
}

void criterion8(Check& c) {
  RandomOptions opt;
  opt.requireAcyclic = true;
  for (Flavor f : kAllFlavors) {
    int pass = 0;
    const int count = 200;
    for (int i = 0; i < count; ++i) {
      std::uint64_t seed = 0xacdc1ull * (i + 3) + (static_cast<std::uint64_t>(f) << 36);
      Framework fw = randomFramework(f, seed, opt);
      bool same = true;
      for (SemanticsName sem : kAllSemantics)
        same = same && accepted(fw, sem, Mode::General) == accepted(fw, sem, Mode::Acyclic);
      if (same) ++pass;
    }
    c.require(pass == count, std::string(toString(f)) + ": " + std::to_string(pass) + "/" +
                                 std::to_string(count) + " mode agreements");
  }
}

void criterion9(Check& c) {
  int pass = 0;
  const int count = 200;
  for (int i = 0; i < count; ++i) {
    Framework afd = randomFramework(Flavor::AFD, 0xd0a1ull * (i + 1));
    Framework afn = reverseSupports(afd);
    bool same = true;
    for (SemanticsName sem : kAllSemantics)
      same = same && fixtures::pairSet(enumerateExtensions(afd, sem)) ==
                         fixtures::pairSet(enumerateExtensions(afn, sem));
    if (same) ++pass;
  }
  c.require(pass == count,
            std::to_string(pass) + "/" + std::to_string(count) + " duality agreements");
}

void criterion10(Check& c) {
  std::mt19937_64 rng(0x90a7);
  auto roll = [&rng](int k) { return k > 0 ? static_cast<int>(rng() % k) : 0; };
  int pass = 0;
  const int count = 300;
  for (int i = 0; i < count; ++i) {
    LogicProgram p;
    int n = 1 + roll(9);
    for (int a = 0; a < n; ++a) p.addAtom("x" + std::to_string(a));
    int nRules = roll(2 * n + 2);
    for (int r = 0; r < nRules; ++r) {
      Rule rule;
      rule.head = roll(n);
      int len = roll(4);
      for (int l = 0; l < len; ++l) rule.body.push_back(Clause{{Literal{roll(n), roll(2) == 0}}});
      p.addRule(std::move(rule));
    }

    auto searched = enumeratePsm(p);
    // Exhaustive three-valued filter.
    std::vector<Interpretation> brute;
    std::vector<int> digits(n, 0);
    while (true) {
      Interpretation m(n);
      for (int a = 0; a < n; ++a) {
        if (digits[a] == 0) m.fls.set(a);
        if (digits[a] == 2) m.tru.set(a);
      }
      if (isPsm(p, m)) brute.push_back(std::move(m));
      int a = 0;
      for (; a < n; ++a) {
        if (++digits[a] <= 2) break;
        digits[a] = 0;
      }
      if (a == n) break;
    }
    std::sort(brute.begin(), brute.end());

    bool ok = searched == brute;
    Interpretation wf = wellFounded(p);
    auto least = selectModels(searched, ModelClass::WF);
    ok = ok && least.size() == 1 && least[0] == wf;
    auto ms = selectModels(searched, ModelClass::MS);
    auto ts = selectModels(searched, ModelClass::TS);
    for (const auto& m : ts) ok = ok && std::count(ms.begin(), ms.end(), m) == 1;
    for (const auto& m : ms) ok = ok && std::count(searched.begin(), searched.end(), m) == 1;
    if (ok) ++pass;
    else if (c.ok) c.notes << "    counterexample program:\n" << p.print();
  }
  c.require(pass == count,
            std::to_string(pass) + "/" + std::to_string(count) + " oracle agreements");
}

void criterion11(Check& c) {
  int pass = 0, total = 0;
  for (Flavor f : kAllFlavors) {
    for (int i = 0; i < 100; ++i) {
      ++total;
      Framework fw = randomFramework(f, 0xc11ull * (i + 7) + (static_cast<std::uint64_t>(f) << 33));
      auto co = enumerateExtensions(fw, SemanticsName::Complete);
      auto coSet = fixtures::pairSet(co);
      auto prSet = fixtures::pairSet(enumerateExtensions(fw, SemanticsName::Preferred));
      auto stSet = fixtures::pairSet(enumerateExtensions(fw, SemanticsName::Stable));
      ExtensionPair gr = grounded(fw);

      bool ok = !co.empty();
      for (const auto& e : stSet) ok = ok && prSet.count(e) == 1;
      for (const auto& e : prSet) ok = ok && coSet.count(e) == 1;
      ok = ok &&
           coSet.count({fixtures::nameSet(gr.accepted), fixtures::nameSet(gr.defeated)}) == 1;
      for (const auto& e : co) {
        ok = ok && !e.accepted.bits().intersects(e.defeated.bits());
        ok = ok && gr.accepted.bits().subsetOf(e.accepted.bits());
      }
      if (ok) ++pass;
      else if (c.ok) c.notes << "    counterexample:\n" << printFramework(fw);
    }
  }
  c.require(pass == total,
            std::to_string(pass) + "/" + std::to_string(total) + " lattice checks");
}

// Scaling of the polynomial grounded path.
void criterion12(Check& c) {
  for (Flavor f : {Flavor::AFN, Flavor::RAFN, Flavor::AFRAD}) {
    RandomOptions opt;
    opt.minElements = 1000;
    opt.maxElements = 1000;
    Framework fw = randomFramework(f, 0x5ca1eull + static_cast<int>(f), opt);
    auto start = std::chrono::steady_clock::now();
    ExtensionPair gr = grounded(fw);
    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
    c.notes << "    " << toString(f) << ": " << fw.size() << " elements, grounded in " << elapsed
            << " ms\n";
    c.require(elapsed < 5000, std::string(toString(f)) + " stays under five seconds");
    c.require(gr.accepted.count() + gr.defeated.count() <= fw.size(), "sane result");
  }
}

struct Criterion {
  int id;
  const char* title;
  std::function<void(Check&)> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> list = {
      {1, "plain AF family: complete, preferred, stable, grounded", criterion1},
      {2, "acyclic necessity framework: extension families and operators", criterion2},
      {3, "cyclic necessity framework: single extension under all semantics", criterion3},
      {4, "program emission and its single model", criterion4},
      {5, "recursive menu frameworks: preferred/stable under both attack readings", criterion5},
      {6, "recursive cyclic program: reference models and route agreement", criterion6},
      {7, "route agreement on 500 random frameworks per flavor", criterion7},
      {8, "mode agreement on 200 acyclic frameworks per flavor", criterion8},
      {9, "support-reversal duality on 200 afd instances", criterion9},
      {10, "model search against the exhaustive filter on 300 programs", criterion10},
      {11, "lattice and conflict-freeness on random frameworks", criterion11},
      {12, "grounded path scales to 1000-element frameworks", criterion12},
  };
  return list;
}

} // namespace

int main(int argc, char** argv) {
  int only = 0;
  if (argc > 1) only = std::atoi(argv[1]);

  int failures = 0;
  for (const Criterion& crit : criteria()) {
    if (only != 0 && crit.id != only) continue;
    Check check;
    try {
      crit.run(check);
    } catch (const std::exception& e) {
      check.ok = false;
      check.notes << "    exception: " << e.what() << "\n";
    }
    std::cout << (check.ok ? "[PASS]" : "[FAIL]") << " criterion " << crit.id << ": "
              << crit.title << "\n"
              << check.notes.str();
    if (!check.ok) ++failures;
  }
  return failures;
}
