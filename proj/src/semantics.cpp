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
#include "rbaf/semantics.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_map>

#include "rbaf/logic_program.hpp"
#include "rbaf/psm.hpp"
#include "rbaf/structure.hpp"

namespace rbaf {
namespace {

void requireValidated(const Framework& fw) {
  if (!fw.validated()) throw std::logic_error("framework must be validated first");
}

/// True when the attack seeds a defeat of its target given the candidate set.
bool attackFires(Flavor flavor, const Bits& s, int attack, int source) {
  switch (flavor) {
    case Flavor::AF:
    case Flavor::AFN:
    case Flavor::AFD: return s.test(source);
    case Flavor::RAFN:
    case Flavor::RAFD: return s.test(attack) && s.test(source);
    case Flavor::ASAF:
    case Flavor::AFRAD: return s.test(attack);
  }
  return false;
}

} // namespace

std::string toString(Mode mode) { return mode == Mode::Acyclic ? "acyclic" : "general"; }

std::string toString(SemanticsName sem) {
  switch (sem) {
    case SemanticsName::Grounded: return "gr";
    case SemanticsName::Complete: return "co";
    case SemanticsName::Stable: return "st";
    case SemanticsName::Preferred: return "pr";
  }
  return "?";
}

std::optional<Mode> modeFromString(std::string_view name) {
  if (name == "acyclic") return Mode::Acyclic;
  if (name == "general") return Mode::General;
  return std::nullopt;
}

std::optional<SemanticsName> semanticsFromString(std::string_view name) {
  if (name == "gr" || name == "grounded") return SemanticsName::Grounded;
  if (name == "co" || name == "complete") return SemanticsName::Complete;
  if (name == "st" || name == "stable") return SemanticsName::Stable;
  if (name == "pr" || name == "preferred") return SemanticsName::Preferred;
  return std::nullopt;
}

void checkMode(const Framework& fw, Mode mode) {
  requireValidated(fw);
  if (mode == Mode::Acyclic && !isSupportAcyclic(fw))
    fail(ErrorCode::ModeViolation, "acyclic mode on a framework with support cycles");
}

namespace {

Bits defeatedBitsWith(const Framework& fw, const Bits& s, Mode mode, const Bits* cycleMembers);

} // namespace

Bits defeatedBits(const Framework& fw, const Bits& s, Mode mode) {
  return defeatedBitsWith(fw, s, mode, nullptr);
}

namespace {

Bits defeatedBitsWith(const Framework& fw, const Bits& s, Mode mode, const Bits* cycleMembers) {
  const Flavor flavor = fw.flavor();
  const int n = fw.size();
  Bits d(n);

  if (mode == Mode::General)
    d |= cycleMembers ? *cycleMembers : dependencyCycleMembersBits(fw, s);

  for (int a : fw.attacks()) {
    const Element& e = fw.element(a);
    if (attackFires(flavor, s, a, e.source)) d.set(e.target);
  }

  bool changed = true;
  while (changed) {
    changed = false;
    for (int b : fw.supports()) {
      const Element& e = fw.element(b);
      switch (flavor) {
        case Flavor::AFN:
          if (d.test(e.source) && !d.test(e.target)) { d.set(e.target); changed = true; }
          break;
        case Flavor::AFD:
          if (d.test(e.target) && !d.test(e.source)) { d.set(e.source); changed = true; }
          break;
        case Flavor::RAFN:
        case Flavor::ASAF:
          if (s.test(b) && d.test(e.source) && !d.test(e.target)) {
            d.set(e.target);
            changed = true;
          }
          break;
        case Flavor::RAFD:
        case Flavor::AFRAD:
          if (s.test(b) && d.test(e.target) && !d.test(e.source)) {
            d.set(e.source);
            changed = true;
          }
          break;
        default: break;
      }
    }
    if (flavor == Flavor::ASAF || flavor == Flavor::AFRAD) {
      for (int a : fw.attacks()) {
        const Element& e = fw.element(a);
        if (d.test(e.source) && !d.test(a)) { d.set(a); changed = true; }
      }
    }
  }
  return d;
}

Bits acceptableGiven(const Framework& fw, const Bits& d) {
  const Flavor flavor = fw.flavor();
  const int n = fw.size();
  const bool argsOnly = targetsArgumentsOnly(flavor);

  Bits a(n);
  auto admissibleAt = [&](int x) {
    for (int at : fw.attacksTargeting(x)) {
      const Element& e = fw.element(at);
      switch (flavor) {
        case Flavor::AF:
        case Flavor::AFN:
        case Flavor::AFD:
          if (!d.test(e.source)) return false;
          break;
        case Flavor::RAFN:
        case Flavor::RAFD:
          if (!d.test(at) && !d.test(e.source)) return false;
          break;
        case Flavor::ASAF:
        case Flavor::AFRAD:
          if (!d.test(at)) return false;
          break;
      }
    }
    switch (flavor) {
      case Flavor::AF: break;
      case Flavor::AFN:
        for (int b : fw.supportsTargeting(x))
          if (!a.test(fw.element(b).source)) return false;
        break;
      case Flavor::AFD:
        for (int b : fw.supportsFromSource(x))
          if (!a.test(fw.element(b).target)) return false;
        break;
      case Flavor::RAFN:
      case Flavor::ASAF:
        for (int b : fw.supportsTargeting(x))
          if (!d.test(b) && !a.test(fw.element(b).source)) return false;
        break;
      case Flavor::RAFD:
      case Flavor::AFRAD:
        for (int b : fw.supportsFromSource(x))
          if (!d.test(b) && !a.test(fw.element(b).target)) return false;
        break;
    }
    if ((flavor == Flavor::ASAF || flavor == Flavor::AFRAD) &&
        fw.element(x).kind == ElementKind::Attack && !a.test(fw.element(x).source))
      return false;
    return true;
  };

  bool changed = true;
  while (changed) {
    changed = false;
    for (int x = 0; x < n; ++x) {
      if (a.test(x)) continue;
      if (argsOnly && fw.element(x).kind != ElementKind::Argument) continue;
      if (admissibleAt(x)) {
        a.set(x);
        changed = true;
      }
    }
  }
  return a;
}

} // namespace

Bits acceptableBits(const Framework& fw, const Bits& s, Mode mode) {
  return acceptableGiven(fw, defeatedBits(fw, s, mode));
}

ElementSet defeated(const Framework& fw, const ElementSet& s, Mode mode) {
  checkMode(fw, mode);
  return ElementSet(fw, defeatedBits(fw, s.bits(), mode));
}

ElementSet acceptable(const Framework& fw, const ElementSet& s, Mode mode) {
  checkMode(fw, mode);
  return ElementSet(fw, acceptableBits(fw, s.bits(), mode));
}

std::vector<ExtensionPair> enumerateCompleteDirect(const Framework& fw, Mode mode, int cap) {
  checkMode(fw, mode);
  const auto& uni = fw.universe();
  const int m = static_cast<int>(uni.size());
  if (m > cap)
    fail(ErrorCode::CapExceeded,
         "universe of " + std::to_string(m) + " elements exceeds the direct bound of " +
             std::to_string(cap));

  const int n = fw.size();

  // Subsets that provably fail conflict-freeness: holding an attack together
  // with whatever makes it fire defeats a held target.
  std::vector<std::uint64_t> conflictMasks;
  std::vector<int> uniPos(n, -1);
  for (int i = 0; i < m; ++i) uniPos[uni[i]] = i;
  for (int at : fw.attacks()) {
    const Element& e = fw.element(at);
    std::uint64_t mask = 0;
    bool usable = true;
    auto add = [&](int id) {
      if (uniPos[id] < 0)
        usable = false;
      else
        mask |= std::uint64_t{1} << uniPos[id];
    };
    switch (fw.flavor()) {
      case Flavor::AF:
      case Flavor::AFN:
      case Flavor::AFD:
        add(e.source);
        add(e.target);
        break;
      case Flavor::RAFN:
      case Flavor::RAFD:
        add(at);
        add(e.source);
        add(e.target);
        break;
      case Flavor::ASAF:
      case Flavor::AFRAD:
        add(at);
        add(e.target);
        break;
    }
    if (usable) conflictMasks.push_back(mask);
  }

  // Under AFN/AFD every support-cycle member is always defeated, so any
  // candidate holding one is dead on arrival.
  std::uint64_t cycleMask = 0;
  if (mode == Mode::General && targetsArgumentsOnly(fw.flavor())) {
    Bits none(n);
    dependencyCycleMembersBits(fw, none).forEach([&](int id) {
      if (uniPos[id] >= 0) cycleMask |= std::uint64_t{1} << uniPos[id];
    });
  }

  // Cycle membership depends on the held supports only, so memoize it per
  // support-submask; most of the subset space shares a handful of entries.
  std::uint64_t supportMask = 0;
  for (int b : fw.supports())
    if (uniPos[b] >= 0) supportMask |= std::uint64_t{1} << uniPos[b];
  std::unordered_map<std::uint64_t, Bits> cycleCache;

  std::vector<ExtensionPair> out;
  const std::uint64_t limit = std::uint64_t{1} << m;
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    if (mask & cycleMask) continue;
    bool pruned = false;
    for (std::uint64_t cm : conflictMasks)
      if ((mask & cm) == cm) {
        pruned = true;
        break;
      }
    if (pruned) continue;

    Bits s(n);
    for (int i = 0; i < m; ++i)
      if (mask & (std::uint64_t{1} << i)) s.set(uni[i]);

    const Bits* cycle = nullptr;
    if (mode == Mode::General) {
      auto [it, fresh] = cycleCache.try_emplace(mask & supportMask);
      if (fresh) it->second = dependencyCycleMembersBits(fw, s);
      cycle = &it->second;
    }

    Bits d = defeatedBitsWith(fw, s, mode, cycle);
    if (d.intersects(s)) continue;
    if (acceptableGiven(fw, d) == s) out.emplace_back(ElementSet(fw, s), ElementSet(fw, d));
  }
  return out;
}

std::vector<ExtensionPair> enumerateCompleteViaProgram(const Framework& fw, int atomCap) {
  requireValidated(fw);
  LogicProgram p = translate(fw);
  const auto& uni = fw.universe();
  std::vector<ExtensionPair> out;
  for (const Interpretation& m : enumeratePsm(p, atomCap)) {
    Bits acc(fw.size()), def(fw.size());
    m.tru.forEach([&](int atom) { acc.set(uni[atom]); });
    m.fls.forEach([&](int atom) { def.set(uni[atom]); });
    out.emplace_back(ElementSet(fw, acc), ElementSet(fw, def));
  }
  return out;
}

namespace {

void sortCanonical(std::vector<ExtensionPair>& exts) {
  std::sort(exts.begin(), exts.end(), [](const ExtensionPair& a, const ExtensionPair& b) {
    if (a.accepted.count() != b.accepted.count()) return a.accepted.count() < b.accepted.count();
    auto an = a.accepted.names(), bn = b.accepted.names();
    if (an != bn) return an < bn;
    return a.defeated.names() < b.defeated.names();
  });
}

std::vector<ExtensionPair> completeSet(const Framework& fw, const SolveOptions& opts) {
  const int m = static_cast<int>(fw.universe().size());
  if (m <= opts.enumerationCap) return enumerateCompleteDirect(fw, opts.mode, opts.enumerationCap);
  // checkMode has admitted the mode already, and on support-acyclic input the
  // program route computes the same set, so the fallback serves both modes.
  if (opts.lpFallback) return enumerateCompleteViaProgram(fw, opts.psmAtomCap);
  fail(ErrorCode::CapExceeded,
       "universe of " + std::to_string(m) + " elements exceeds the enumeration bound");
}

bool isTotal(const Framework& fw, const ExtensionPair& e) {
  return (e.accepted.bits() | e.defeated.bits()) == fw.universeMask();
}

} // namespace

ExtensionPair grounded(const Framework& fw, Mode mode) {
  requireValidated(fw);
  (void)mode; // The two modes agree wherever acyclic mode is admissible.
  LogicProgram p = translate(fw);
  Interpretation wf = wellFounded(p);
  const auto& uni = fw.universe();
  Bits acc(fw.size()), def(fw.size());
  wf.tru.forEach([&](int atom) { acc.set(uni[atom]); });
  wf.fls.forEach([&](int atom) { def.set(uni[atom]); });
  return ExtensionPair(ElementSet(fw, acc), ElementSet(fw, def));
}

std::vector<ExtensionPair> enumerateExtensions(const Framework& fw, SemanticsName sem,
                                               const SolveOptions& opts) {
  checkMode(fw, opts.mode);
  if (sem == SemanticsName::Grounded) return {grounded(fw, opts.mode)};

  std::vector<ExtensionPair> complete = completeSet(fw, opts);
  std::vector<ExtensionPair> out;
  switch (sem) {
    case SemanticsName::Complete: out = std::move(complete); break;
    case SemanticsName::Stable:
      for (auto& e : complete)
        if (isTotal(fw, e)) out.push_back(std::move(e));
      break;
    case SemanticsName::Preferred:
      for (const auto& e : complete) {
        bool maximal = true;
        for (const auto& other : complete)
          if (!(other.accepted == e.accepted) && e.accepted.bits().subsetOf(other.accepted.bits())) {
            maximal = false;
            break;
          }
        if (maximal) out.push_back(e);
      }
      break;
    case SemanticsName::Grounded: break; // handled above
  }
  sortCanonical(out);
  return out;
}

bool isExtension(const Framework& fw, const ElementSet& s, SemanticsName sem,
                 const SolveOptions& opts) {
  checkMode(fw, opts.mode);
  Bits d = defeatedBits(fw, s.bits(), opts.mode);
  if (d.intersects(s.bits())) return false;
  if (!(acceptableBits(fw, s.bits(), opts.mode) == s.bits())) return false;
  switch (sem) {
    case SemanticsName::Complete: return true;
    case SemanticsName::Stable: return (s.bits() | d) == fw.universeMask();
    case SemanticsName::Grounded: return grounded(fw, opts.mode).accepted == s;
    case SemanticsName::Preferred: {
      for (const auto& other : completeSet(fw, opts))
        if (!(other.accepted == s) && s.bits().subsetOf(other.accepted.bits())) return false;
      return true;
    }
  }
  return false;
}

bool credulous(const Framework& fw, std::string_view g, SemanticsName sem,
               const SolveOptions& opts) {
  int id = fw.require(g);
  if (sem == SemanticsName::Grounded) return grounded(fw, opts.mode).accepted.containsId(id);
  for (const auto& e : enumerateExtensions(fw, sem, opts))
    if (e.accepted.containsId(id)) return true;
  return false;
}

bool skeptical(const Framework& fw, std::string_view g, SemanticsName sem,
               const SolveOptions& opts) {
  int id = fw.require(g);
  if (sem == SemanticsName::Grounded) return grounded(fw, opts.mode).accepted.containsId(id);
  for (const auto& e : enumerateExtensions(fw, sem, opts))
    if (!e.accepted.containsId(id)) return false;
  return true;
}

} // namespace rbaf
