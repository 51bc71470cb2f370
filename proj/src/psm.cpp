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
#include "rbaf/psm.hpp"

#include <algorithm>
#include <sstream>

namespace rbaf {

Interpretation::Interpretation(Bits t, Bits f) : tru(std::move(t)), fls(std::move(f)) {
  if (tru.size() != fls.size()) throw std::logic_error("interpretation size mismatch");
  if (tru.intersects(fls)) throw std::logic_error("inconsistent interpretation");
}

std::strong_ordering Interpretation::operator<=>(const Interpretation& o) const {
  if (auto c = tru <=> o.tru; c != 0) return c;
  return fls <=> o.fls;
}

std::string toString(ModelClass cls) {
  switch (cls) {
    case ModelClass::PS: return "ps";
    case ModelClass::WF: return "wf";
    case ModelClass::MS: return "ms";
    case ModelClass::TS: return "ts";
  }
  return "?";
}

PositiveProgram reduct(const LogicProgram& program, const Interpretation& m) {
  if (!program.normal())
    fail(ErrorCode::NotNormalized, "the positive instantiation is defined on normal programs");
  if (m.atomCount() != program.atomCount())
    throw std::logic_error("interpretation does not match the program's atoms");

  PositiveProgram out;
  out.atomCount = program.atomCount();
  for (const Rule& r : program.rules()) {
    bool keep = true;
    std::vector<int> body;
    for (const Clause& c : r.body) {
      const Literal& l = c.disjuncts.front();
      bool defined = m.tru.test(l.atom) || m.fls.test(l.atom);
      if (!defined) { keep = false; break; }            // undefined body literal
      if (!l.positive && m.tru.test(l.atom)) { keep = false; break; } // false negative literal
      if (l.positive) body.push_back(l.atom);           // negatives are stripped
    }
    if (keep) out.rules.push_back({r.head, std::move(body)});
  }
  return out;
}

Bits leastModel(const PositiveProgram& program) {
  Bits derived(program.atomCount);
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& r : program.rules) {
      if (derived.test(r.head)) continue;
      bool ok = true;
      for (int b : r.body)
        if (!derived.test(b)) { ok = false; break; }
      if (ok) {
        derived.set(r.head);
        changed = true;
      }
    }
  }
  return derived;
}

namespace {

constexpr std::uint8_t kFalse = 0, kUndef = 1, kTrue = 2;

std::uint8_t valueIn(const Interpretation& m, int atom) {
  if (m.tru.test(atom)) return kTrue;
  if (m.fls.test(atom)) return kFalse;
  return kUndef;
}

/// Three-valued least-model values of the program with negative literals
/// frozen to their value under m.
std::vector<std::uint8_t> leastModelValues(const LogicProgram& p, const Interpretation& m) {
  const int n = p.atomCount();
  std::vector<std::uint8_t> v(n, kFalse);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int a = 0; a < n; ++a) {
      std::uint8_t best = kFalse;
      for (int ri : p.rulesForHead(a)) {
        const Rule& r = p.rules()[ri];
        std::uint8_t body = kTrue;
        for (const Clause& c : r.body) {
          std::uint8_t cl = kFalse;
          for (const Literal& l : c.disjuncts) {
            std::uint8_t lv = l.positive ? v[l.atom]
                                         : static_cast<std::uint8_t>(kTrue - valueIn(m, l.atom));
            cl = std::max(cl, lv);
            if (cl == kTrue) break;
          }
          body = std::min(body, cl);
          if (body == kFalse) break;
        }
        best = std::max(best, body);
        if (best == kTrue) break;
      }
      if (best > v[a]) {
        v[a] = best;
        changed = true;
      }
    }
  }
  return v;
}

} // namespace

Interpretation threeValuedLeastModel(const LogicProgram& program, const Interpretation& m) {
  auto v = leastModelValues(program, m);
  Interpretation out(program.atomCount());
  for (int a = 0; a < program.atomCount(); ++a) {
    if (v[a] == kTrue) out.tru.set(a);
    if (v[a] == kFalse) out.fls.set(a);
  }
  return out;
}

bool isPsm(const LogicProgram& program, const Interpretation& m) {
  if (m.atomCount() != program.atomCount())
    throw std::logic_error("interpretation does not match the program's atoms");
  return threeValuedLeastModel(program, m) == m;
}

namespace {

struct PsmSearch {
  const LogicProgram& p;
  int n;
  std::vector<Interpretation> found;

  explicit PsmSearch(const LogicProgram& program) : p(program), n(program.atomCount()) {}

  // Interval of an atom's value over all completions of the partial
  // assignment (-1 = unassigned), per the supported-value equation
  // v(a) = max over rules of min over clauses of max over literals.
  std::pair<int, int> headInterval(const std::vector<int8_t>& val, int a) const {
    int lo = 0, hi = 0;
    bool first = true;
    for (int ri : p.rulesForHead(a)) {
      const Rule& r = p.rules()[ri];
      int blo = 2, bhi = 2;
      for (const Clause& c : r.body) {
        int clo = 0, chi = 0;
        for (const Literal& l : c.disjuncts) {
          int llo, lhi;
          if (val[l.atom] < 0) {
            llo = 0;
            lhi = 2;
          } else {
            llo = lhi = l.positive ? val[l.atom] : 2 - val[l.atom];
          }
          clo = std::max(clo, llo);
          chi = std::max(chi, lhi);
        }
        blo = std::min(blo, clo);
        bhi = std::min(bhi, chi);
      }
      if (first) {
        lo = blo;
        hi = bhi;
        first = false;
      } else {
        lo = std::max(lo, blo);
        hi = std::max(hi, bhi);
      }
    }
    return {lo, hi};
  }

  bool propagate(std::vector<int8_t>& val) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int a = 0; a < n; ++a) {
        auto [lo, hi] = headInterval(val, a);
        if (val[a] >= 0) {
          if (val[a] < lo || val[a] > hi) return false;
        } else if (lo == hi) {
          val[a] = static_cast<int8_t>(lo);
          changed = true;
        }
      }
    }
    return true;
  }

  void search(std::vector<int8_t> val) {
    if (!propagate(val)) return;
    int branch = -1;
    for (int a = 0; a < n; ++a)
      if (val[a] < 0) {
        branch = a;
        break;
      }
    if (branch < 0) {
      Interpretation m(n);
      for (int a = 0; a < n; ++a) {
        if (val[a] == kTrue) m.tru.set(a);
        if (val[a] == kFalse) m.fls.set(a);
      }
      if (isPsm(p, m)) found.push_back(std::move(m));
      return;
    }
    for (int8_t v = 0; v <= 2; ++v) {
      std::vector<int8_t> child = val;
      child[branch] = v;
      search(std::move(child));
    }
  }
};

} // namespace

std::vector<Interpretation> enumeratePsm(const LogicProgram& program, int atomCap) {
  if (program.atomCount() > atomCap)
    fail(ErrorCode::CapExceeded, std::to_string(program.atomCount()) +
                                     " atoms exceed the model-search bound of " +
                                     std::to_string(atomCap));
  PsmSearch s(program);
  s.search(std::vector<int8_t>(program.atomCount(), -1));
  std::sort(s.found.begin(), s.found.end());
  return std::move(s.found);
}

namespace {

/// Least model of the program reduced by the guess j: a negative literal
/// holds iff its atom is outside j; clause bodies are evaluated directly.
Bits reducedLeastModel(const LogicProgram& p, const Bits& j) {
  Bits derived(p.atomCount());
  bool changed = true;
  while (changed) {
    changed = false;
    for (const Rule& r : p.rules()) {
      if (derived.test(r.head)) continue;
      bool ok = true;
      for (const Clause& c : r.body) {
        bool sat = false;
        for (const Literal& l : c.disjuncts) {
          if (l.positive ? derived.test(l.atom) : !j.test(l.atom)) {
            sat = true;
            break;
          }
        }
        if (!sat) { ok = false; break; }
      }
      if (ok) {
        derived.set(r.head);
        changed = true;
      }
    }
  }
  return derived;
}

} // namespace

Interpretation wellFounded(const LogicProgram& program) {
  Bits t(program.atomCount());
  while (true) {
    Bits u = reducedLeastModel(program, t);
    Bits t2 = reducedLeastModel(program, u);
    if (t2 == t) return Interpretation(std::move(t), u.complement());
    t = std::move(t2);
  }
}

std::vector<Interpretation> selectModels(std::vector<Interpretation> models, ModelClass cls) {
  std::sort(models.begin(), models.end());
  switch (cls) {
    case ModelClass::PS: return models;
    case ModelClass::MS:
    case ModelClass::TS: {
      std::vector<Interpretation> out;
      for (const auto& m : models) {
        bool maximal = true;
        for (const auto& other : models)
          if (!(other == m) && m.subsetOf(other)) {
            maximal = false;
            break;
          }
        if (maximal && (cls == ModelClass::MS || m.total())) out.push_back(m);
      }
      return out;
    }
    case ModelClass::WF: {
      if (models.empty())
        fail(ErrorCode::EmptyInput, "least-model selection over an empty model set");
      for (const auto& m : models) {
        bool least = true;
        for (const auto& other : models)
          if (!m.subsetOf(other)) {
            least = false;
            break;
          }
        if (least) return {m};
      }
      throw std::logic_error("model set has no least element");
    }
  }
  return {};
}

std::string formatModel(const LogicProgram& program, const Interpretation& m) {
  std::vector<std::pair<std::string, bool>> lits;
  m.tru.forEach([&](int a) { lits.emplace_back(program.atomName(a), true); });
  m.fls.forEach([&](int a) { lits.emplace_back(program.atomName(a), false); });
  std::sort(lits.begin(), lits.end());
  std::ostringstream out;
  out << "{";
  for (std::size_t i = 0; i < lits.size(); ++i) {
    if (i) out << ", ";
    if (!lits[i].second) out << "not ";
    out << lits[i].first;
  }
  out << "}";
  return out.str();
}

} // namespace rbaf
