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

#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "rbaf/bits.hpp"
#include "rbaf/errors.hpp"

namespace rbaf {

/// The seven framework variants handled by the library.
///
/// AF          plain attack graphs.
/// AFN / AFD   bipolar frameworks, supports read as necessities / deductively.
/// RAFN / ASAF recursive bipolar frameworks with necessary supports; they
///             differ in how the standing of an attack is determined.
/// RAFD/AFRAD  the deductive-support counterparts of RAFN / ASAF.
enum class Flavor { AF, AFN, AFD, RAFN, ASAF, RAFD, AFRAD };

std::string toString(Flavor flavor);
std::optional<Flavor> flavorFromString(std::string_view name);

/// True for RAFN/ASAF/RAFD/AFRAD, where attacks and supports are first-class
/// targets.
bool isRecursive(Flavor flavor);
/// True for AF/AFN/AFD, where every interaction targets an argument and
/// candidate sets range over arguments only.
bool targetsArgumentsOnly(Flavor flavor);

enum class ElementKind { Argument, Attack, Support };

std::string toString(ElementKind kind);

struct Element {
  std::string name;
  ElementKind kind;
  // Declared endpoint names (attacks/supports only).
  std::string sourceName;
  std::string targetName;
  // Resolved by Framework::validate().
  int source = -1;
  int target = -1;
};

/// A framework over named arguments, attacks and supports. Elements are added
/// freely, then validate() resolves endpoints and checks the structural rules
/// of the flavor. Once validated, the framework is frozen; every query and
/// every operation in the library takes validated frameworks by const
/// reference and is safe to use concurrently.
class Framework {
public:
  explicit Framework(Flavor flavor) : flavor_(flavor) {}

  Flavor flavor() const { return flavor_; }

  void addArgument(std::string name);
  void addAttack(std::string name, std::string source, std::string target);
  void addSupport(std::string name, std::string source, std::string target);

  /// Resolves endpoints and checks all structural invariants:
  ///  - names unique across arguments, attacks and supports,
  ///  - sources and targets name declared elements,
  ///  - sources are arguments,
  ///  - targets are arguments under AF/AFN/AFD,
  ///  - AF declares no supports.
  /// Throws Error{DuplicateName|DanglingEndpoint|FlavorViolation}.
  void validate();
  bool validated() const { return validated_; }

  int size() const { return static_cast<int>(elements_.size()); }
  const Element& element(int id) const { return elements_[id]; }

  std::optional<int> find(std::string_view name) const;
  /// Like find(), but throws Error{UnknownElement}.
  int require(std::string_view name) const;

  const std::vector<int>& arguments() const { return arguments_; }
  const std::vector<int>& attacks() const { return attacks_; }
  const std::vector<int>& supports() const { return supports_; }

  // Adjacency prepared by validate().
  const std::vector<int>& attacksTargeting(int id) const { return attacksIn_[id]; }
  const std::vector<int>& supportsTargeting(int id) const { return supportsIn_[id]; }
  const std::vector<int>& supportsFromSource(int id) const { return supportsOut_[id]; }

  /// Candidate universe of the flavor: arguments for AF/AFN/AFD, every
  /// element otherwise.
  const std::vector<int>& universe() const;
  Bits universeMask() const;

  /// Structural equality: same flavor and the same named elements with the
  /// same endpoints (declaration order does not matter).
  bool sameStructure(const Framework& other) const;

private:
  void addElement(Element e);
  void requireMutable() const;

  Flavor flavor_;
  bool validated_ = false;
  std::vector<Element> elements_;
  std::unordered_map<std::string, int> byName_;
  std::vector<int> arguments_, attacks_, supports_, allIds_;
  std::vector<std::vector<int>> attacksIn_, supportsIn_, supportsOut_;
};

/// Free-function form of the validation operation.
inline void validate(Framework& fw) { fw.validate(); }

/// A subset of the framework's elements. For AF/AFN/AFD flavors members must
/// be arguments; recursive flavors admit any element.
class ElementSet {
public:
  ElementSet() = default;
  ElementSet(const Framework& fw, Bits bits);
  ElementSet(const Framework& fw, std::span<const std::string> names);
  ElementSet(const Framework& fw, std::initializer_list<std::string_view> names);

  static ElementSet empty(const Framework& fw) { return ElementSet(fw, Bits(fw.size())); }

  const Framework* framework() const { return fw_; }
  const Bits& bits() const { return bits_; }
  int count() const { return bits_.count(); }
  bool contains(std::string_view name) const;
  bool containsId(int id) const { return bits_.test(id); }

  /// Member names, sorted.
  std::vector<std::string> names() const;

  bool operator==(const ElementSet& o) const { return bits_ == o.bits_; }

private:
  void checkMembers() const;

  const Framework* fw_ = nullptr;
  Bits bits_;
};

/// An extension presented together with the set it defeats.
struct ExtensionPair {
  ElementSet accepted;
  ElementSet defeated;

  ExtensionPair() = default;
  ExtensionPair(ElementSet acc, ElementSet def);

  bool operator==(const ExtensionPair& o) const {
    return accepted == o.accepted && defeated == o.defeated;
  }
};

} // namespace rbaf
