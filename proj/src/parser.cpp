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
#include "rbaf/parser.hpp"

#include <cctype>
#include <optional>
#include <sstream>
#include <vector>

namespace rbaf {
namespace {

struct Pos {
  int line = 1;
  int col = 1;
};

struct Scanner {
  std::string_view text;
  std::size_t pos = 0;
  Pos at;

  [[noreturn]] void error(const Pos& where, const std::string& what) const {
    fail(ErrorCode::SyntaxError,
         std::to_string(where.line) + ":" + std::to_string(where.col) + ": " + what);
  }
  [[noreturn]] void error(const std::string& what) const { error(at, what); }

  void advance() {
    if (text[pos] == '\n') {
      ++at.line;
      at.col = 1;
    } else {
      ++at.col;
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

  void consume(char c) {
    skipSpace();
    if (pos >= text.size() || text[pos] != c)
      error(std::string("expected '") + c + "'");
    advance();
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

struct Declaration {
  enum Kind { Arg, Att, Sup } kind;
  std::string name, source, target;
  Pos where;
};

} // namespace

Framework parseFramework(std::string_view text) {
  Scanner sc{text, 0, Pos{}};
  std::optional<Flavor> flavor;
  Pos flavorPos;
  std::vector<Declaration> decls;

  while (!sc.done()) {
    sc.skipSpace();
    Pos stmtPos = sc.at;
    std::string kw = sc.identifier("statement keyword");
    if (kw == "flavor") {
      sc.consume('(');
      Pos namePos = sc.at;
      std::string name = sc.identifier("flavor name");
      sc.consume(')');
      sc.consume('.');
      auto f = flavorFromString(name);
      if (!f) sc.error(namePos, "unknown flavor '" + name + "'");
      if (flavor) sc.error(stmtPos, "duplicate flavor directive");
      flavor = *f;
    } else if (kw == "arg" || kw == "att" || kw == "sup") {
      Declaration d;
      d.kind = kw == "arg" ? Declaration::Arg : kw == "att" ? Declaration::Att : Declaration::Sup;
      d.where = stmtPos;
      sc.consume('(');
      d.name = sc.identifier("element name");
      if (d.kind != Declaration::Arg) {
        sc.consume(',');
        d.source = sc.identifier("source name");
        sc.consume(',');
        d.target = sc.identifier("target name");
      }
      sc.consume(')');
      sc.consume('.');
      decls.push_back(std::move(d));
    } else {
      sc.error(stmtPos, "unknown statement '" + kw + "'");
    }
  }

  if (!flavor) fail(ErrorCode::MissingFlavor, "input declares no flavor");

  Framework fw(*flavor);
  for (const Declaration& d : decls) {
    switch (d.kind) {
      case Declaration::Arg: fw.addArgument(d.name); break;
      case Declaration::Att: fw.addAttack(d.name, d.source, d.target); break;
      case Declaration::Sup: fw.addSupport(d.name, d.source, d.target); break;
    }
  }
  fw.validate();
  return fw;
}

std::string printFramework(const Framework& fw) {
  std::ostringstream out;
  out << "flavor(" << toString(fw.flavor()) << ").\n";
  for (int i = 0; i < fw.size(); ++i) {
    const Element& e = fw.element(i);
    switch (e.kind) {
      case ElementKind::Argument: out << "arg(" << e.name << ").\n"; break;
      case ElementKind::Attack:
        out << "att(" << e.name << "," << e.sourceName << "," << e.targetName << ").\n";
        break;
      case ElementKind::Support:
        out << "sup(" << e.name << "," << e.sourceName << "," << e.targetName << ").\n";
        break;
    }
  }
  return out.str();
}

} // namespace rbaf
