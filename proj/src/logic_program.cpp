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
#include "rbaf/logic_program.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace rbaf {

int LogicProgram::addAtom(std::string name) {
  auto it = atomIds_.find(name);
  if (it != atomIds_.end()) return it->second;
  int id = atomCount();
  atomIds_.emplace(name, id);
  atomNames_.push_back(std::move(name));
  headRules_.emplace_back();
  return id;
}

int LogicProgram::ensureAtom(std::string_view name) { return addAtom(std::string(name)); }

std::optional<int> LogicProgram::findAtom(std::string_view name) const {
  auto it = atomIds_.find(std::string(name));
  return it == atomIds_.end() ? std::nullopt : std::optional<int>(it->second);
}

void LogicProgram::addRule(Rule rule) {
  auto checkAtom = [this](int atom) {
    if (atom < 0 || atom >= atomCount()) throw std::logic_error("rule references unknown atom");
  };
  checkAtom(rule.head);
  for (auto& clause : rule.body) {
    if (clause.disjuncts.empty()) throw std::logic_error("empty clause");
    // Drop duplicate literals, keep first occurrences.
    std::vector<Literal> unique;
    for (const Literal& l : clause.disjuncts) {
      checkAtom(l.atom);
      if (std::find(unique.begin(), unique.end(), l) == unique.end()) unique.push_back(l);
    }
    clause.disjuncts = std::move(unique);
    if (clause.disjuncts.size() > 1) normal_ = false;
  }
  headRules_[rule.head].push_back(static_cast<int>(rules_.size()));
  rules_.push_back(std::move(rule));
}

std::string LogicProgram::print() const {
  std::ostringstream out;
  for (const Rule& r : rules_) {
    out << atomNames_[r.head];
    if (!r.body.empty()) {
      out << " :- ";
      for (std::size_t ci = 0; ci < r.body.size(); ++ci) {
        if (ci) out << ", ";
        const auto& lits = r.body[ci].disjuncts;
        if (lits.size() > 1) out << "(";
        for (std::size_t li = 0; li < lits.size(); ++li) {
          if (li) out << " | ";
          if (!lits[li].positive) out << "not ";
          out << atomNames_[lits[li].atom];
        }
        if (lits.size() > 1) out << ")";
      }
    }
    out << ".\n";
  }
  return out.str();
}

namespace {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;
  int line = 1;
  int col = 1;

  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorCode::SyntaxError, std::to_string(line) + ":" + std::to_string(col) + ": " + what);
  }

  void advance() {
    if (text[pos] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++pos;
  }

  void skipSpace() {
    while (pos < text.size()) {
      if (std::isspace(static_cast<unsigned char>(text[pos]))) {
        advance();
      } else if (text[pos] == '%') {
        while (pos < text.size() && text[pos] != '\n') advance();
      } else {
        break;
      }
    }
  }

  bool done() {
    skipSpace();
    return pos >= text.size();
  }

  char peek() const { return text[pos]; }

  bool tryConsume(char c) {
    skipSpace();
    if (pos < text.size() && text[pos] == c) {
      advance();
      return true;
    }
    return false;
  }

  bool tryConsume(std::string_view word) {
    skipSpace();
    if (text.substr(pos, word.size()) != word) return false;
    std::size_t after = pos + word.size();
    if (after < text.size()) {
      char c = text[after];
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') return false;
    }
    for (std::size_t i = 0; i < word.size(); ++i) advance();
    return true;
  }

  void consume(char c, const char* what) {
    if (!tryConsume(c)) error(std::string("expected '") + c + "' " + what);
  }

  std::string identifier(const char* what) {
    skipSpace();
    if (pos >= text.size()) error(std::string("expected ") + what + ", got end of input");
    char c = text[pos];
    if (!std::isalpha(static_cast<unsigned char>(c)) && c != '_')
      error(std::string("expected ") + what);
    std::string name;
    while (pos < text.size()) {
      c = text[pos];
      if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') break;
      name.push_back(c);
      advance();
    }
    return name;
  }
};

} // namespace

LogicProgram LogicProgram::parse(std::string_view text) {
  LogicProgram p;
  Cursor cur{text, 0, 1, 1};
  while (!cur.done()) {
    std::string head = cur.identifier("rule head");
    Rule rule;
    rule.head = p.ensureAtom(head);
    if (!cur.tryConsume('.')) {
      cur.consume(':', "after rule head");
      cur.consume('-', "after ':'");
      while (true) {
        Clause clause;
        bool parens = cur.tryConsume('(');
        while (true) {
          Literal lit;
          lit.positive = !cur.tryConsume("not");
          lit.atom = p.ensureAtom(cur.identifier("atom"));
          clause.disjuncts.push_back(lit);
          if (!parens || !cur.tryConsume('|')) break;
        }
        if (parens) cur.consume(')', "to close clause");
        rule.body.push_back(std::move(clause));
        if (!cur.tryConsume(',')) break;
      }
      cur.consume('.', "to end rule");
    }
    p.addRule(std::move(rule));
  }
  return p;
}

LogicProgram translate(const Framework& fw) {
  if (!fw.validated()) throw std::logic_error("framework must be validated first");
  const Flavor flavor = fw.flavor();
  LogicProgram p;
  const auto& uni = fw.universe();

  std::vector<int> atomOf(fw.size(), -1);
  for (int id : uni) atomOf[id] = p.addAtom(fw.element(id).name);

  auto pos = [&](int id) { return Literal{atomOf[id], true}; };
  auto neg = [&](int id) { return Literal{atomOf[id], false}; };

  for (int id : uni) {
    Rule rule;
    rule.head = atomOf[id];
    std::vector<Clause> body;

    if ((flavor == Flavor::ASAF || flavor == Flavor::AFRAD) &&
        fw.element(id).kind == ElementKind::Attack)
      body.push_back(Clause{{pos(fw.element(id).source)}});

    for (int at : fw.attacksTargeting(id)) {
      const Element& e = fw.element(at);
      switch (flavor) {
        case Flavor::AF:
        case Flavor::AFN:
        case Flavor::AFD: body.push_back(Clause{{neg(e.source)}}); break;
        case Flavor::RAFN:
        case Flavor::RAFD: body.push_back(Clause{{neg(at), neg(e.source)}}); break;
        case Flavor::ASAF:
        case Flavor::AFRAD: body.push_back(Clause{{neg(at)}}); break;
      }
    }

    switch (flavor) {
      case Flavor::AF: break;
      case Flavor::AFN:
        for (int b : fw.supportsTargeting(id)) body.push_back(Clause{{pos(fw.element(b).source)}});
        break;
      case Flavor::AFD:
        for (int b : fw.supportsFromSource(id)) body.push_back(Clause{{pos(fw.element(b).target)}});
        break;
      case Flavor::RAFN:
      case Flavor::ASAF:
        for (int b : fw.supportsTargeting(id))
          body.push_back(Clause{{neg(b), pos(fw.element(b).source)}});
        break;
      case Flavor::RAFD:
      case Flavor::AFRAD:
        for (int b : fw.supportsFromSource(id))
          body.push_back(Clause{{neg(b), pos(fw.element(b).target)}});
        break;
    }

    // Identical clauses add nothing to a conjunction.
    for (auto& clause : body)
      if (std::find(rule.body.begin(), rule.body.end(), clause) == rule.body.end())
        rule.body.push_back(std::move(clause));
    p.addRule(std::move(rule));
  }
  return p;
}

LogicProgram normalize(const LogicProgram& program) {
  if (program.normal()) return program;

  LogicProgram out;
  for (int a = 0; a < program.atomCount(); ++a) out.addAtom(program.atomName(a));

  for (const Rule& r : program.rules()) {
    std::size_t combinations = 1;
    for (const Clause& c : r.body) {
      combinations *= c.disjuncts.size();
      if (combinations > (std::size_t{1} << 20))
        fail(ErrorCode::CapExceeded, "clause distribution would exceed 2^20 rules");
    }

    std::vector<Rule> generated;
    std::vector<std::size_t> choice(r.body.size(), 0);
    while (true) {
      Rule flat;
      flat.head = r.head;
      for (std::size_t ci = 0; ci < r.body.size(); ++ci) {
        Clause single{{r.body[ci].disjuncts[choice[ci]]}};
        if (std::find(flat.body.begin(), flat.body.end(), single) == flat.body.end())
          flat.body.push_back(std::move(single));
      }
      if (std::find(generated.begin(), generated.end(), flat) == generated.end())
        generated.push_back(std::move(flat));

      // Next element of the cartesian product.
      std::size_t ci = 0;
      for (; ci < choice.size(); ++ci) {
        if (++choice[ci] < r.body[ci].disjuncts.size()) break;
        choice[ci] = 0;
      }
      if (ci == choice.size()) break;
    }
    for (Rule& g : generated) out.addRule(std::move(g));
  }
  return out;
}

} // namespace rbaf
