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
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "rbaf/parser.hpp"
#include "rbaf/psm.hpp"
#include "rbaf/random.hpp"
#include "rbaf/tasks.hpp"

namespace {

// Exit codes: 0 success/YES, 1 NO (with --strict-exit) or failed check,
// 2 usage, 3 parse/validation, 4 cap exceeded.
constexpr int kExitOk = 0;
constexpr int kExitNo = 1;
constexpr int kExitUsage = 2;
constexpr int kExitParse = 3;
constexpr int kExitCap = 4;

int exitCodeFor(const rbaf::Error& err) {
  switch (err.code()) {
    case rbaf::ErrorCode::CapExceeded: return kExitCap;
    case rbaf::ErrorCode::Usage:
    case rbaf::ErrorCode::ModeViolation: return kExitUsage;
    default: return kExitParse;
  }
}

std::string readFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) rbaf::fail(rbaf::ErrorCode::Usage, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<std::string> splitCommas(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

struct SolveArgs {
  std::string file, task = "EE", sem = "co", mode = "general", arg, set, format = "text";
  bool strictExit = false;
};

int runSolve(const SolveArgs& a) {
  auto task = rbaf::taskFromString(a.task);
  auto sem = rbaf::semanticsFromString(a.sem);
  auto mode = rbaf::modeFromString(a.mode);
  if (!task || *task == rbaf::Task::Translate || *task == rbaf::Task::Check)
    rbaf::fail(rbaf::ErrorCode::Usage, "--task must be one of EE, SE, DC, DS, VE");
  if (!sem) rbaf::fail(rbaf::ErrorCode::Usage, "--sem must be one of gr, co, st, pr");
  if (!mode) rbaf::fail(rbaf::ErrorCode::Usage, "--mode must be general or acyclic");

  rbaf::Framework fw = rbaf::parseFramework(readFile(a.file));
  rbaf::TaskSpec spec;
  spec.task = *task;
  spec.semantics = *sem;
  spec.mode = *mode;
  if (!a.arg.empty()) spec.queryElement = a.arg;
  if (!a.set.empty()) spec.querySet = splitCommas(a.set);

  rbaf::TaskResult res = rbaf::runTask(fw, spec);
  std::cout << (a.format == "json" ? rbaf::toJson(fw, res) : rbaf::toText(fw, res));
  if (a.strictExit && res.answer && !*res.answer) return kExitNo;
  return kExitOk;
}

int runTranslate(const std::string& file) {
  rbaf::Framework fw = rbaf::parseFramework(readFile(file));
  std::cout << rbaf::translate(fw).print();
  return kExitOk;
}

struct CheckArgs {
  std::string file, flavor, format = "text";
  std::uint64_t seed = 1;
  int randomCount = 0;
  int maxElems = 8;
};

int runCheck(const CheckArgs& a) {
  if (a.file.empty() && a.randomCount == 0)
    rbaf::fail(rbaf::ErrorCode::Usage, "check needs --file and/or --random COUNT");

  bool allPass = true;
  if (!a.file.empty()) {
    rbaf::Framework fw = rbaf::parseFramework(readFile(a.file));
    rbaf::TaskSpec spec;
    spec.task = rbaf::Task::Check;
    rbaf::TaskResult res = rbaf::runTask(fw, spec);
    std::cout << (a.format == "json" ? rbaf::toJson(fw, res) : rbaf::toText(fw, res));
    allPass = res.report->pass;
  }

  if (a.randomCount > 0) {
    std::vector<rbaf::Flavor> flavors;
    if (a.flavor.empty()) {
      flavors = {rbaf::Flavor::AF,   rbaf::Flavor::AFN,  rbaf::Flavor::AFD, rbaf::Flavor::RAFN,
                 rbaf::Flavor::ASAF, rbaf::Flavor::RAFD, rbaf::Flavor::AFRAD};
    } else {
      auto f = rbaf::flavorFromString(a.flavor);
      if (!f) rbaf::fail(rbaf::ErrorCode::Usage, "unknown flavor '" + a.flavor + "'");
      flavors = {*f};
    }
    rbaf::RandomOptions ropt;
    ropt.maxElements = a.maxElems;
    for (rbaf::Flavor f : flavors) {
      int pass = 0;
      for (int i = 0; i < a.randomCount; ++i) {
        std::uint64_t seed = a.seed * 0x9e3779b97f4a7c15ull + static_cast<std::uint64_t>(i) +
                             (static_cast<std::uint64_t>(f) << 32);
        rbaf::Framework fw = rbaf::randomFramework(f, seed, ropt);
        rbaf::CrossCheckReport rep = rbaf::crossCheck(fw);
        if (rep.pass) {
          ++pass;
        } else {
          allPass = false;
          std::cout << "FAIL on " << toString(f) << " instance " << i << " (seed " << seed
                    << "):\n"
                    << rbaf::printFramework(fw);
        }
      }
      std::cout << toString(f) << ": " << pass << "/" << a.randomCount << " PASS\n";
    }
  }
  return allPass ? kExitOk : kExitNo;
}

struct PsmArgs {
  std::string file, cls = "ps", format = "text";
};

int runPsm(const PsmArgs& a) {
  rbaf::LogicProgram p = rbaf::LogicProgram::parse(readFile(a.file));
  rbaf::ModelClass cls;
  if (a.cls == "ps")
    cls = rbaf::ModelClass::PS;
  else if (a.cls == "wf")
    cls = rbaf::ModelClass::WF;
  else if (a.cls == "ms")
    cls = rbaf::ModelClass::MS;
  else if (a.cls == "ts")
    cls = rbaf::ModelClass::TS;
  else
    rbaf::fail(rbaf::ErrorCode::Usage, "--class must be one of ps, wf, ms, ts");

  std::vector<rbaf::Interpretation> models =
      cls == rbaf::ModelClass::WF ? std::vector<rbaf::Interpretation>{rbaf::wellFounded(p)}
                                  : rbaf::selectModels(rbaf::enumeratePsm(p), cls);
  if (a.format == "json") {
    std::ostringstream out;
    out << "{\"models\":[";
    for (std::size_t i = 0; i < models.size(); ++i) {
      if (i) out << ",";
      out << "{\"true\":[";
      bool first = true;
      models[i].tru.forEach([&](int atom) {
        if (!first) out << ",";
        first = false;
        out << "\"" << p.atomName(atom) << "\"";
      });
      out << "],\"false\":[";
      first = true;
      models[i].fls.forEach([&](int atom) {
        if (!first) out << ",";
        first = false;
        out << "\"" << p.atomName(atom) << "\"";
      });
      out << "]}";
    }
    out << "]}\n";
    std::cout << out.str();
  } else {
    for (const auto& m : models) std::cout << rbaf::formatModel(p, m) << "\n";
  }
  return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"solver for bipolar and recursive bipolar argumentation frameworks"};
  app.require_subcommand(1);

  SolveArgs solveArgs;
  auto* solve = app.add_subcommand("solve", "run a reasoning task on a framework file");
  solve->add_option("--file", solveArgs.file, "framework file")->required();
  solve->add_option("--task", solveArgs.task, "EE | SE | DC | DS | VE");
  solve->add_option("--sem", solveArgs.sem, "gr | co | st | pr");
  solve->add_option("--mode", solveArgs.mode, "general | acyclic");
  solve->add_option("--arg", solveArgs.arg, "query element for DC/DS");
  solve->add_option("--set", solveArgs.set, "comma-separated query set for VE");
  solve->add_option("--format", solveArgs.format, "text | json");
  solve->add_flag("--strict-exit", solveArgs.strictExit, "exit 1 when the answer is NO");

  std::string translateFile;
  auto* translate = app.add_subcommand("translate", "emit the logic program of a framework");
  translate->add_option("--file", translateFile, "framework file")->required();

  CheckArgs checkArgs;
  auto* check = app.add_subcommand("check", "compare the direct and program routes");
  check->add_option("--file", checkArgs.file, "framework file");
  check->add_option("--seed", checkArgs.seed, "seed for random instances");
  check->add_option("--random", checkArgs.randomCount, "number of random instances per flavor");
  check->add_option("--max-elems", checkArgs.maxElems, "element bound for random instances");
  check->add_option("--flavor", checkArgs.flavor, "restrict random instances to one flavor");
  check->add_option("--format", checkArgs.format, "text | json");

  PsmArgs psmArgs;
  auto* psm = app.add_subcommand("psm", "enumerate models of a logic program file");
  psm->add_option("--file", psmArgs.file, "program file")->required();
  psm->add_option("--class", psmArgs.cls, "ps | wf | ms | ts");
  psm->add_option("--format", psmArgs.format, "text | json");

  try {
    app.parse(argc, argv);
    if (solve->parsed()) return runSolve(solveArgs);
    if (translate->parsed()) return runTranslate(translateFile);
    if (check->parsed()) return runCheck(checkArgs);
    if (psm->parsed()) return runPsm(psmArgs);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  } catch (const rbaf::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exitCodeFor(e);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
