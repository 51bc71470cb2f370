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

#include <string>
#include <vector>

#include "rbaf/bits.hpp"
#include "rbaf/logic_program.hpp"

namespace rbaf {

/// Consistent three-valued interpretation: atoms in neither set are
/// undefined.
struct Interpretation {
  Bits tru;
  Bits fls;

  Interpretation() = default;
  explicit Interpretation(int atomCount) : tru(atomCount), fls(atomCount) {}
  Interpretation(Bits t, Bits f);

  int atomCount() const { return tru.size(); }
  bool total() const { return (tru | fls).count() == tru.size(); }

  bool operator==(const Interpretation&) const = default;
  /// Canonical order for deterministic model lists.
  std::strong_ordering operator<=>(const Interpretation& o) const;
  /// Literal-set inclusion.
  bool subsetOf(const Interpretation& o) const {
    return tru.subsetOf(o.tru) && fls.subsetOf(o.fls);
  }
};

/// Rules with positive single-literal bodies only.
struct PositiveProgram {
  struct PRule {
    int head;
    std::vector<int> body;
  };
  int atomCount = 0;
  std::vector<PRule> rules;
};

/// The positive instantiation of a normal program w.r.t. m: drops every rule
/// with a negative literal whose atom is true in m, drops every rule with a
/// body literal undefined in m, then strips the remaining negative literals.
/// Throws Error{NotNormalized} on clause-bodied input.
PositiveProgram reduct(const LogicProgram& program, const Interpretation& m);

/// Least fixpoint of the one-step consequence operator from the empty set.
Bits leastModel(const PositiveProgram& program);

/// Three-valued least model of the program with negative literals replaced by
/// their truth value under m (false < undefined < true pointwise). Works on
/// clause bodies directly.
Interpretation threeValuedLeastModel(const LogicProgram& program, const Interpretation& m);

/// m is a partial stable model iff it equals the three-valued least model of
/// its own instantiation. On total interpretations this agrees with the
/// reduct route: leastModel(reduct(P, m)) == pos(m) plus the negated-head
/// side condition.
bool isPsm(const LogicProgram& program, const Interpretation& m);

/// All partial stable models, found by a three-valued labeling search with
/// forced-value propagation; every leaf is certified through isPsm. Models
/// come back canonically sorted. Throws Error{CapExceeded} beyond `atomCap`.
std::vector<Interpretation> enumeratePsm(const LogicProgram& program, int atomCap = 22);

/// The well-founded model, by the alternating fixpoint of the two-step
/// reduction operator. Equals the least partial stable model.
Interpretation wellFounded(const LogicProgram& program);

enum class ModelClass { PS, WF, MS, TS };

std::string toString(ModelClass cls);

/// PS: identity. MS: maximal models under literal-set inclusion. TS: maximal
/// models that are total. WF: the least element (Error{EmptyInput} when the
/// input set is empty).
std::vector<Interpretation> selectModels(std::vector<Interpretation> models, ModelClass cls);

/// "{a, not b}" with atoms sorted by name; undefined atoms omitted.
std::string formatModel(const LogicProgram& program, const Interpretation& m);

} // namespace rbaf
