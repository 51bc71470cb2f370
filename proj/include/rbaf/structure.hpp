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

#include <utility>
#include <vector>

#include "rbaf/framework.hpp"

namespace rbaf {

/// Flattens a recursive framework into an AFN over A ∪ R ∪ T: every attack α
/// becomes a support s(α) ⇒ α plus an attack α → t(α); every support β
/// becomes supports s(β) ⇒ β and β ⇒ t(β). Derived interaction names get a
/// "_s"/"_t" suffix (extended until fresh).
/// Throws Error{FlavorViolation} for AF/AFN/AFD inputs.
Framework auxBaf(const Framework& fw);

/// AF: trivially true. AFN/AFD: no directed cycle among the support edges.
/// Recursive flavors: the support relation of auxBaf(fw) is acyclic.
bool isSupportAcyclic(const Framework& fw);

/// Arguments lying on a support cycle. For recursive flavors only supports
/// named in `s` form edges; for AFN/AFD the set is independent of `s`.
ElementSet supportCycleMembers(const Framework& fw, const ElementSet& s);

/// Internal form of supportCycleMembers over raw bitsets; `active` marks the
/// supports considered present (ignored for AFN/AFD).
Bits supportCycleMembersBits(const Framework& fw, const Bits& active);

/// Elements whose standing rests on a cycle of positive prerequisites, given
/// that the supports named in `s` are held. Support edges run target→source
/// under the necessity reading and source→target under the deductive one, and
/// under ASAF/AFRAD every attack additionally depends on its own source.
/// For every flavor except AFRAD this coincides with the support cycles of
/// supportCycleMembersBits; under AFRAD an attack can close a cycle.
Bits dependencyCycleMembersBits(const Framework& fw, const Bits& s);

/// True when no dependency cycle can ever activate (and, for recursive
/// flavors, the flattened support relation is acyclic as well).
bool isStructurallyAcyclic(const Framework& fw);

/// Swaps every support's endpoints and toggles AFN ↔ AFD; attacks unchanged.
/// Throws Error{FlavorViolation} for any other flavor.
Framework reverseSupports(const Framework& fw);

/// Attacks implied by support chains on support-acyclic AFN/AFD frameworks:
/// a → b, b ⇒+ c gives (a, c) under AFN; a → b, c ⇒+ b gives (a, c) under
/// AFD. Pairs matching an existing attack's endpoints are omitted. Results
/// are sorted name pairs.
/// Throws Error{FlavorViolation} (wrong flavor) or Error{CyclicSupports}.
std::vector<std::pair<std::string, std::string>> derivedAttacks(const Framework& fw);

} // namespace rbaf
