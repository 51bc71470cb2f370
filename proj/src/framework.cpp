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
#include "rbaf/framework.hpp"

#include <algorithm>

namespace rbaf {

std::string toString(Flavor flavor) {
  switch (flavor) {
    case Flavor::AF: return "af";
    case Flavor::AFN: return "afn";
    case Flavor::AFD: return "afd";
    case Flavor::RAFN: return "rafn";
    case Flavor::ASAF: return "asaf";
    case Flavor::RAFD: return "rafd";
    case Flavor::AFRAD: return "afrad";
  }
  return "?";
}

std::optional<Flavor> flavorFromString(std::string_view name) {
  for (Flavor f : {Flavor::AF, Flavor::AFN, Flavor::AFD, Flavor::RAFN, Flavor::ASAF,
                   Flavor::RAFD, Flavor::AFRAD})
    if (name == toString(f)) return f;
  return std::nullopt;
}

bool isRecursive(Flavor flavor) {
  switch (flavor) {
    case Flavor::RAFN:
    case Flavor::ASAF:
    case Flavor::RAFD:
    case Flavor::AFRAD: return true;
    default: return false;
  }
}

bool targetsArgumentsOnly(Flavor flavor) { return !isRecursive(flavor); }

std::string toString(ElementKind kind) {
  switch (kind) {
    case ElementKind::Argument: return "argument";
    case ElementKind::Attack: return "attack";
    case ElementKind::Support: return "support";
  }
  return "?";
}

void Framework::requireMutable() const {
  if (validated_) throw std::logic_error("framework is frozen after validation");
}

void Framework::addElement(Element e) {
  requireMutable();
  elements_.push_back(std::move(e));
}

void Framework::addArgument(std::string name) {
  addElement(Element{std::move(name), ElementKind::Argument, {}, {}});
}

void Framework::addAttack(std::string name, std::string source, std::string target) {
  addElement(Element{std::move(name), ElementKind::Attack, std::move(source), std::move(target)});
}

void Framework::addSupport(std::string name, std::string source, std::string target) {
  addElement(Element{std::move(name), ElementKind::Support, std::move(source), std::move(target)});
}

void Framework::validate() {
  if (validated_) return;

  byName_.clear();
  byName_.reserve(elements_.size());
  for (int i = 0; i < size(); ++i) {
    auto [it, fresh] = byName_.emplace(elements_[i].name, i);
    if (!fresh) fail(ErrorCode::DuplicateName, "'" + elements_[i].name + "' declared twice");
  }

  arguments_.clear();
  attacks_.clear();
  supports_.clear();
  for (int i = 0; i < size(); ++i) {
    switch (elements_[i].kind) {
      case ElementKind::Argument: arguments_.push_back(i); break;
      case ElementKind::Attack: attacks_.push_back(i); break;
      case ElementKind::Support: supports_.push_back(i); break;
    }
  }

  if (flavor_ == Flavor::AF && !supports_.empty())
    fail(ErrorCode::FlavorViolation,
         "af declares support '" + elements_[supports_.front()].name + "'");

  for (int i = 0; i < size(); ++i) {
    Element& e = elements_[i];
    if (e.kind == ElementKind::Argument) continue;
    auto src = find(e.sourceName);
    if (!src)
      fail(ErrorCode::DanglingEndpoint,
           toString(e.kind) + std::string(" '") + e.name + "' has undeclared source '" +
               e.sourceName + "'");
    auto tgt = find(e.targetName);
    if (!tgt)
      fail(ErrorCode::DanglingEndpoint,
           toString(e.kind) + std::string(" '") + e.name + "' has undeclared target '" +
               e.targetName + "'");
    e.source = *src;
    e.target = *tgt;
    if (elements_[e.source].kind != ElementKind::Argument)
      fail(ErrorCode::FlavorViolation,
           toString(e.kind) + std::string(" '") + e.name + "' has non-argument source '" +
               e.sourceName + "'");
    if (targetsArgumentsOnly(flavor_) && elements_[e.target].kind != ElementKind::Argument)
      fail(ErrorCode::FlavorViolation,
           std::string(toString(flavor_)) + " " + toString(e.kind) + " '" + e.name +
               "' targets non-argument '" + e.targetName + "'");
  }

  attacksIn_.assign(size(), {});
  supportsIn_.assign(size(), {});
  supportsOut_.assign(size(), {});
  for (int i : attacks_) attacksIn_[elements_[i].target].push_back(i);
  for (int i : supports_) {
    supportsIn_[elements_[i].target].push_back(i);
    supportsOut_[elements_[i].source].push_back(i);
  }

  allIds_.resize(size());
  for (int i = 0; i < size(); ++i) allIds_[i] = i;

  validated_ = true;
}

std::optional<int> Framework::find(std::string_view name) const {
  // byName_ is filled by validate(); fall back to a scan before that.
  if (!byName_.empty() || elements_.empty()) {
    auto it = byName_.find(std::string(name));
    return it == byName_.end() ? std::nullopt : std::optional<int>(it->second);
  }
  for (int i = 0; i < size(); ++i)
    if (elements_[i].name == name) return i;
  return std::nullopt;
}

int Framework::require(std::string_view name) const {
  if (auto id = find(name)) return *id;
  fail(ErrorCode::UnknownElement, "'" + std::string(name) + "' is not declared");
}

const std::vector<int>& Framework::universe() const {
  return targetsArgumentsOnly(flavor_) ? arguments_ : allIds_;
}

Bits Framework::universeMask() const {
  Bits m(size());
  for (int id : universe()) m.set(id);
  return m;
}

bool Framework::sameStructure(const Framework& other) const {
  if (flavor_ != other.flavor_ || size() != other.size()) return false;
  for (const Element& e : elements_) {
    auto id = other.find(e.name);
    if (!id) return false;
    const Element& o = other.element(*id);
    if (o.kind != e.kind) return false;
    if (e.kind != ElementKind::Argument &&
        (o.sourceName != e.sourceName || o.targetName != e.targetName))
      return false;
  }
  return true;
}

ElementSet::ElementSet(const Framework& fw, Bits bits) : fw_(&fw), bits_(std::move(bits)) {
  if (bits_.size() != fw.size()) throw std::logic_error("element set size mismatch");
  checkMembers();
}

ElementSet::ElementSet(const Framework& fw, std::span<const std::string> names)
    : fw_(&fw), bits_(fw.size()) {
  for (const auto& n : names) bits_.set(fw.require(n));
  checkMembers();
}

ElementSet::ElementSet(const Framework& fw, std::initializer_list<std::string_view> names)
    : fw_(&fw), bits_(fw.size()) {
  for (auto n : names) bits_.set(fw.require(n));
  checkMembers();
}

void ElementSet::checkMembers() const {
  if (!targetsArgumentsOnly(fw_->flavor())) return;
  bool bad = false;
  std::string offender;
  bits_.forEach([&](int id) {
    if (!bad && fw_->element(id).kind != ElementKind::Argument) {
      bad = true;
      offender = fw_->element(id).name;
    }
  });
  if (bad)
    fail(ErrorCode::FlavorViolation,
         "candidate sets range over arguments only under " +
             std::string(toString(fw_->flavor())) + "; got '" + offender + "'");
}

bool ElementSet::contains(std::string_view name) const {
  auto id = fw_->find(name);
  return id && bits_.test(*id);
}

std::vector<std::string> ElementSet::names() const {
  std::vector<std::string> out;
  bits_.forEach([&](int id) { out.push_back(fw_->element(id).name); });
  std::sort(out.begin(), out.end());
  return out;
}

ExtensionPair::ExtensionPair(ElementSet acc, ElementSet def)
    : accepted(std::move(acc)), defeated(std::move(def)) {
  if (accepted.bits().intersects(defeated.bits()))
    throw std::logic_error("extension pair is not conflict-free");
}

} // namespace rbaf
