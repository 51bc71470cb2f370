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

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "rbaf/parser.hpp"
#include "rbaf/semantics.hpp"

namespace fixtures {

// Shared demo frameworks. The two wine/menu frameworks come in a plain and a
// recursive version; fig4 extends fig1_right with a second support closing a
// cycle between f and w.

inline constexpr const char* kEx2Af = R"(
flavor(af).
arg(a). arg(b). arg(c). arg(d).
att(r1,a,b). att(r2,b,a).
att(r3,a,c). att(r4,b,c).
att(r5,c,d). att(r6,d,c).
)";

inline constexpr const char* kEx3Afn = R"(
flavor(afn).
arg(fish). arg(meat). arg(white). arg(red).
att(a1,fish,meat). att(a2,meat,fish).
att(a3,white,red). att(a4,red,white).
sup(b1,fish,white).
)";

inline constexpr const char* kEx5Afn = R"(
flavor(afn).
arg(a). arg(b). arg(c). arg(d). arg(e). arg(f).
att(r1,c,d). att(r2,d,e).
sup(s1,a,b). sup(s2,b,a). sup(s3,b,c). sup(s4,e,f).
)";

inline constexpr const char* kFig1RightRafn = R"(
flavor(rafn).
arg(m). arg(f). arg(w). arg(r). arg(s). arg(sb).
att(a1,f,m). att(a2,m,f).
att(a3,r,w). att(a4,w,r).
att(a5,s,sb). att(a6,sb,s).
att(a7,s,a1). att(a8,s,a2).
sup(b1,f,w).
)";

inline constexpr const char* kFig1RightAsaf = R"(
flavor(asaf).
arg(m). arg(f). arg(w). arg(r). arg(s). arg(sb).
att(a1,f,m). att(a2,m,f).
att(a3,r,w). att(a4,w,r).
att(a5,s,sb). att(a6,sb,s).
att(a7,s,a1). att(a8,s,a2).
sup(b1,f,w).
)";

inline constexpr const char* kFig4Rafn = R"(
flavor(rafn).
arg(m). arg(f). arg(w). arg(r). arg(s). arg(sb).
att(a1,f,m). att(a2,m,f).
att(a3,r,w). att(a4,w,r).
att(a5,s,sb). att(a6,sb,s).
att(a7,s,a1). att(a8,s,a2).
sup(b1,f,w).
sup(b2,w,f).
)";

inline constexpr const char* kFig4Asaf = R"(
flavor(asaf).
arg(m). arg(f). arg(w). arg(r). arg(s). arg(sb).
att(a1,f,m). att(a2,m,f).
att(a3,r,w). att(a4,w,r).
att(a5,s,sb). att(a6,sb,s).
att(a7,s,a1). att(a8,s,a2).
sup(b1,f,w).
sup(b2,w,f).
)";

inline rbaf::Framework load(const char* text) { return rbaf::parseFramework(text); }

using NameSet = std::set<std::string>;
using NameSetSet = std::set<NameSet>;
using PairSet = std::set<std::pair<NameSet, NameSet>>;

inline NameSet nameSet(const rbaf::ElementSet& s) {
  auto v = s.names();
  return {v.begin(), v.end()};
}

inline NameSetSet acceptedSets(const std::vector<rbaf::ExtensionPair>& exts) {
  NameSetSet out;
  for (const auto& e : exts) out.insert(nameSet(e.accepted));
  return out;
}

inline PairSet pairSet(const std::vector<rbaf::ExtensionPair>& exts) {
  PairSet out;
  for (const auto& e : exts) out.insert({nameSet(e.accepted), nameSet(e.defeated)});
  return out;
}

inline rbaf::ElementSet setOf(const rbaf::Framework& fw, const NameSet& names) {
  std::vector<std::string> v(names.begin(), names.end());
  return rbaf::ElementSet(fw, std::span<const std::string>(v));
}

} // namespace fixtures
