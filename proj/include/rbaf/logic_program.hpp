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
#include <string_view>
#include <unordered_map>
#include <vector>

#include "rbaf/framework.hpp"

namespace rbaf {

struct Literal {
  int atom;
  bool positive;

  bool operator==(const Literal&) const = default;
};

/// Disjunction of literals; never empty, no duplicate literals.
struct Clause {
  std::vector<Literal> disjuncts;

  bool operator==(const Clause&) const = default;
};

/// head <- C1 /\ ... /\ Ck. An empty body is a fact.
struct Rule {
  int head;
  std::vector<Clause> body;

  bool operator==(const Rule&) const = default;
};

/// A propositional program whose rule bodies are conjunctions of clauses.
/// `normal()` reports whether every clause is a single literal.
///
/// Text form, one statement per line ('%' starts a comment):
///   fact.
///   head :- not a, (b | not c).
class LogicProgram {
public:
  int addAtom(std::string name);
  int ensureAtom(std::string_view name);

  int atomCount() const { return static_cast<int>(atomNames_.size()); }
  const std::string& atomName(int atom) const { return atomNames_[atom]; }
  std::optional<int> findAtom(std::string_view name) const;

  void addRule(Rule rule);

  const std::vector<Rule>& rules() const { return rules_; }
  const std::vector<int>& rulesForHead(int atom) const { return headRules_[atom]; }

  bool normal() const { return normal_; }

  std::string print() const;
  /// Parses the text form. Throws Error{SyntaxError} with line:column info.
  static LogicProgram parse(std::string_view text);

private:
  std::vector<std::string> atomNames_;
  std::unordered_map<std::string, int> atomIds_;
  std::vector<Rule> rules_;
  std::vector<std::vector<int>> headRules_;
  bool normal_ = true;
};

/// Derives the program of a validated framework; one rule per universe
/// element, with the defining atom order equal to Framework::universe().
///
///   AF     a <- /\ {not b : attack b → a}
///   AFN    adds a positive conjunct c per support c ⇒ a
///   AFD    adds a positive conjunct c per support a ⇒ c
///   RAFN   X <- /\ {(not α | not s(α)) : t(α)=X} /\ {(not β | s(β)) : t(β)=X}
///   RAFD   like RAFN but support clauses are keyed on s(β)=X with disjunct t(β)
///   ASAF   X <- [s(X) if X is an attack] /\ {not α : t(α)=X}
///             /\ {(not β | s(β)) : t(β)=X}
///   AFRAD  like ASAF with the RAFD-style support clauses
LogicProgram translate(const Framework& fw);

/// Multiplies clause bodies out into normal rules (one per element of the
/// cartesian product of the clauses). Equivalent under the three-valued
/// reading because both sides evaluate to the same min/max combination.
LogicProgram normalize(const LogicProgram& program);

} // namespace rbaf
