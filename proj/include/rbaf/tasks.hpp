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
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rbaf/framework.hpp"
#include "rbaf/semantics.hpp"

namespace rbaf {

enum class Task { EE, SE, DC, DS, VE, Translate, Check };

std::string toString(Task task);
std::optional<Task> taskFromString(std::string_view name);

struct TaskSpec {
  Task task = Task::EE;
  SemanticsName semantics = SemanticsName::Complete;
  Mode mode = Mode::General;
  /// DC/DS query element.
  std::optional<std::string> queryElement;
  /// VE query set.
  std::optional<std::vector<std::string>> querySet;
};

/// Two-route comparison: complete extensions by direct search against the
/// partial stable models of the translated program, matched as
/// ⟨accepted, defeated⟩ pairs. Exact set equality, no tolerance.
struct CrossCheckReport {
  bool pass = false;
  std::vector<ExtensionPair> direct;
  std::vector<ExtensionPair> viaProgram;
  std::vector<ExtensionPair> missingFromProgram; // direct-only pairs
  std::vector<ExtensionPair> extraInProgram;     // program-only pairs
};

CrossCheckReport crossCheck(const Framework& fw, const SolveOptions& opts = {});

struct TaskResult {
  Task task;
  SemanticsName semantics;
  Mode mode;
  /// EE: all extensions; SE: at most one (lexicographically least accepted
  /// set).
  std::vector<ExtensionPair> extensions;
  /// DC/DS/VE verdict; also set for SE (false when no extension exists).
  std::optional<bool> answer;
  std::string programText; // Translate
  std::optional<CrossCheckReport> report;
};

/// Runs one task against a validated framework. Throws Error{Usage} when the
/// query does not fit the task.
TaskResult runTask(const Framework& fw, const TaskSpec& spec, const SolveOptions& opts = {});

/// "{a, b, r1}" — member names sorted, comma-separated.
std::string formatElementSet(const ElementSet& s);

/// Text form of a result, one extension (accepted set) per line for EE/SE,
/// YES/NO for decision tasks, the program text for Translate, a PASS/FAIL
/// report for Check.
std::string toText(const Framework& fw, const TaskResult& result);

/// Structured form: fields task, semantics, mode, and per task extensions
/// (objects with accepted/defeated name arrays), answer, program, or report.
std::string toJson(const Framework& fw, const TaskResult& result);

} // namespace rbaf
