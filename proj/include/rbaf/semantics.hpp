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

#include <string_view>
#include <vector>

#include "rbaf/framework.hpp"

namespace rbaf {

/// General mode handles support cycles (elements whose standing is circular
/// count as defeated); acyclic mode evaluates the plain recursive operators
/// and is admitted only on support-acyclic frameworks, where the two agree.
enum class Mode { Acyclic, General };

enum class SemanticsName { Grounded, Complete, Stable, Preferred };

std::string toString(Mode mode);
std::string toString(SemanticsName sem);
std::optional<Mode> modeFromString(std::string_view name);
std::optional<SemanticsName> semanticsFromString(std::string_view name);

struct SolveOptions {
  Mode mode = Mode::General;
  /// Universe bound for the direct subset search.
  int enumerationCap = 22;
  /// Beyond the cap, fall back to the program route (bounded by psmAtomCap).
  bool lpFallback = true;
  int psmAtomCap = 26;
};

/// Least fixpoint of the flavor's defeat operator with s fixed: direct
/// defeats seeded by attacks held in s, cycle-defeats in general mode, closed
/// under support propagation (and under ASAF/AFRAD, attacks falling with
/// their source).
ElementSet defeated(const Framework& fw, const ElementSet& s, Mode mode);

/// Least fixpoint of the flavor's acceptability operator, evaluated against
/// defeated(fw, s, mode).
ElementSet acceptable(const Framework& fw, const ElementSet& s, Mode mode);

// Raw-bitset forms used by the enumerators; preconditions must have been
// checked by the caller (see checkMode).
Bits defeatedBits(const Framework& fw, const Bits& s, Mode mode);
Bits acceptableBits(const Framework& fw, const Bits& s, Mode mode);
void checkMode(const Framework& fw, Mode mode);

/// Verification problem. Preferred requires enumerating the complete
/// extensions and is subject to the caps in `opts`.
bool isExtension(const Framework& fw, const ElementSet& s, SemanticsName sem,
                 const SolveOptions& opts = {});

/// Exact σ-extension set as ⟨accepted, defeated⟩ pairs, canonically sorted by
/// (cardinality, accepted names). Grounded bypasses enumeration entirely.
std::vector<ExtensionPair> enumerateExtensions(const Framework& fw, SemanticsName sem,
                                               const SolveOptions& opts = {});

/// Complete extensions by direct search over candidate subsets.
std::vector<ExtensionPair> enumerateCompleteDirect(const Framework& fw, Mode mode,
                                                   int cap = 22);

/// Complete extensions through the program route: translate, enumerate the
/// partial stable models, map atoms back to elements.
std::vector<ExtensionPair> enumerateCompleteViaProgram(const Framework& fw, int atomCap = 26);

/// The unique grounded extension, computed in polynomial time as the
/// well-founded model of the translated program.
ExtensionPair grounded(const Framework& fw, Mode mode = Mode::General);

/// g belongs to at least one / every σ-extension. Skeptical acceptance over
/// an empty extension set is vacuously true.
bool credulous(const Framework& fw, std::string_view g, SemanticsName sem,
               const SolveOptions& opts = {});
bool skeptical(const Framework& fw, std::string_view g, SemanticsName sem,
               const SolveOptions& opts = {});

} // namespace rbaf
