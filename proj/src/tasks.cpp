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
#include "rbaf/tasks.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include <json.hpp>

#include "rbaf/logic_program.hpp"
#include "rbaf/semantics.hpp"

namespace rbaf {

std::string toString(Task task) {
  switch (task) {
    case Task::EE: return "EE";
    case Task::SE: return "SE";
    case Task::DC: return "DC";
    case Task::DS: return "DS";
    case Task::VE: return "VE";
    case Task::Translate: return "TRANSLATE";
    case Task::Check: return "CHECK";
  }
  return "?";
}

std::optional<Task> taskFromString(std::string_view name) {
  for (Task t : {Task::EE, Task::SE, Task::DC, Task::DS, Task::VE, Task::Translate, Task::Check})
    if (name == toString(t)) return t;
  return std::nullopt;
}

namespace {

using PairKey = std::pair<std::vector<std::string>, std::vector<std::string>>;

PairKey keyOf(const ExtensionPair& e) { return {e.accepted.names(), e.defeated.names()}; }

std::vector<ExtensionPair> sortedPairs(std::vector<ExtensionPair> v) {
  std::sort(v.begin(), v.end(),
            [](const ExtensionPair& a, const ExtensionPair& b) { return keyOf(a) < keyOf(b); });
  return v;
}

} // namespace

CrossCheckReport crossCheck(const Framework& fw, const SolveOptions& opts) {
  CrossCheckReport rep;
  rep.direct = sortedPairs(enumerateCompleteDirect(fw, Mode::General, opts.enumerationCap));
  rep.viaProgram = sortedPairs(enumerateCompleteViaProgram(
      fw, std::max(opts.psmAtomCap, opts.enumerationCap)));

  std::map<PairKey, const ExtensionPair*> lhs, rhs;
  for (const auto& e : rep.direct) lhs.emplace(keyOf(e), &e);
  for (const auto& e : rep.viaProgram) rhs.emplace(keyOf(e), &e);
  for (const auto& [k, e] : lhs)
    if (!rhs.count(k)) rep.missingFromProgram.push_back(*e);
  for (const auto& [k, e] : rhs)
    if (!lhs.count(k)) rep.extraInProgram.push_back(*e);
  rep.pass = rep.missingFromProgram.empty() && rep.extraInProgram.empty();
  return rep;
}

TaskResult runTask(const Framework& fw, const TaskSpec& spec, const SolveOptions& optsIn) {
  SolveOptions opts = optsIn;
  opts.mode = spec.mode;

  const bool needsElement = spec.task == Task::DC || spec.task == Task::DS;
  const bool needsSet = spec.task == Task::VE;
  if (needsElement && !spec.queryElement)
    fail(ErrorCode::Usage, std::string(toString(spec.task)) + " needs a query element");
  if (needsSet && !spec.querySet)
    fail(ErrorCode::Usage, "VE needs a query set");
  if (!needsElement && spec.queryElement)
    fail(ErrorCode::Usage, std::string(toString(spec.task)) + " takes no query element");
  if (!needsSet && spec.querySet)
    fail(ErrorCode::Usage, std::string(toString(spec.task)) + " takes no query set");

  TaskResult res;
  res.task = spec.task;
  res.semantics = spec.semantics;
  res.mode = spec.mode;

  switch (spec.task) {
    case Task::EE: res.extensions = enumerateExtensions(fw, spec.semantics, opts); break;
    case Task::SE: {
      auto all = enumerateExtensions(fw, spec.semantics, opts);
      if (all.empty()) {
        res.answer = false;
      } else {
        auto least = std::min_element(all.begin(), all.end(),
                                      [](const ExtensionPair& a, const ExtensionPair& b) {
                                        return a.accepted.names() < b.accepted.names();
                                      });
        res.extensions.push_back(*least);
        res.answer = true;
      }
      break;
    }
    case Task::DC: res.answer = credulous(fw, *spec.queryElement, spec.semantics, opts); break;
    case Task::DS: res.answer = skeptical(fw, *spec.queryElement, spec.semantics, opts); break;
    case Task::VE: {
      ElementSet s(fw, std::span<const std::string>(*spec.querySet));
      res.answer = isExtension(fw, s, spec.semantics, opts);
      break;
    }
    case Task::Translate: res.programText = translate(fw).print(); break;
    case Task::Check: res.report = crossCheck(fw, opts); break;
  }
  return res;
}

std::string formatElementSet(const ElementSet& s) {
  std::ostringstream out;
  out << "{";
  auto names = s.names();
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) out << ", ";
    out << names[i];
  }
  out << "}";
  return out.str();
}

namespace {

std::string reportText(const CrossCheckReport& rep) {
  std::ostringstream out;
  out << (rep.pass ? "PASS" : "FAIL") << ": " << rep.direct.size()
      << " complete extension(s) by direct search, " << rep.viaProgram.size()
      << " model(s) through the program route\n";
  for (const auto& e : rep.missingFromProgram)
    out << "  missing from program route: " << formatElementSet(e.accepted) << " / defeats "
        << formatElementSet(e.defeated) << "\n";
  for (const auto& e : rep.extraInProgram)
    out << "  only in program route: " << formatElementSet(e.accepted) << " / defeats "
        << formatElementSet(e.defeated) << "\n";
  return out.str();
}

} // namespace

std::string toText(const Framework& fw, const TaskResult& res) {
  (void)fw;
  std::ostringstream out;
  switch (res.task) {
    case Task::EE:
      for (const auto& e : res.extensions) out << formatElementSet(e.accepted) << "\n";
      break;
    case Task::SE:
      if (res.extensions.empty())
        out << "NO\n";
      else
        out << formatElementSet(res.extensions.front().accepted) << "\n";
      break;
    case Task::DC:
    case Task::DS:
    case Task::VE: out << (*res.answer ? "YES" : "NO") << "\n"; break;
    case Task::Translate: out << res.programText; break;
    case Task::Check: out << reportText(*res.report); break;
  }
  return out.str();
}

std::string toJson(const Framework& fw, const TaskResult& res) {
  (void)fw;
  nlohmann::json j;
  j["task"] = toString(res.task);
  j["semantics"] = toString(res.semantics);
  j["mode"] = toString(res.mode);

  auto pairJson = [](const ExtensionPair& e) {
    return nlohmann::json{{"accepted", e.accepted.names()}, {"defeated", e.defeated.names()}};
  };

  switch (res.task) {
    case Task::EE:
    case Task::SE: {
      auto arr = nlohmann::json::array();
      for (const auto& e : res.extensions) arr.push_back(pairJson(e));
      j["extensions"] = arr;
      if (res.answer) j["answer"] = *res.answer ? "YES" : "NO";
      break;
    }
    case Task::DC:
    case Task::DS:
    case Task::VE: j["answer"] = *res.answer ? "YES" : "NO"; break;
    case Task::Translate: j["program"] = res.programText; break;
    case Task::Check: {
      const auto& rep = *res.report;
      auto arr = [&pairJson](const std::vector<ExtensionPair>& v) {
        auto a = nlohmann::json::array();
        for (const auto& e : v) a.push_back(pairJson(e));
        return a;
      };
      j["report"] = {{"pass", rep.pass},
                     {"direct", arr(rep.direct)},
                     {"viaProgram", arr(rep.viaProgram)},
                     {"missingFromProgram", arr(rep.missingFromProgram)},
                     {"extraInProgram", arr(rep.extraInProgram)}};
      break;
    }
  }
  return j.dump(2) + "\n";
}

} // namespace rbaf
