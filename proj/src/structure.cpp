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
#include "rbaf/structure.hpp"

#include <algorithm>
#include <set>

namespace rbaf {
namespace {

void requireValidated(const Framework& fw) {
  if (!fw.validated()) throw std::logic_error("framework must be validated first");
}

struct Edge {
  int from;
  int to;
  int guard; // support id, or -1 when the edge is always active
};

/// Nodes in a cycle of the given edge list (self-loops count).
Bits cycleNodes(int n, const std::vector<Edge>& edges, const Bits* active) {
  std::vector<std::vector<int>> adj(n);
  Bits members(n);
  for (const Edge& e : edges) {
    if (e.guard >= 0 && active && !active->test(e.guard)) continue;
    if (e.from == e.to) {
      members.set(e.from);
      continue;
    }
    adj[e.from].push_back(e.to);
  }

  // Iterative Tarjan.
  std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
  std::vector<int> stack, frameNode, frameIter;
  std::vector<bool> onStack(n, false);
  std::vector<int> compSize;
  int next = 0;

  for (int start = 0; start < n; ++start) {
    if (index[start] != -1) continue;
    frameNode.push_back(start);
    frameIter.push_back(0);
    index[start] = low[start] = next++;
    stack.push_back(start);
    onStack[start] = true;
    while (!frameNode.empty()) {
      int v = frameNode.back();
      if (frameIter.back() < static_cast<int>(adj[v].size())) {
        int w = adj[v][frameIter.back()++];
        if (index[w] == -1) {
          index[w] = low[w] = next++;
          stack.push_back(w);
          onStack[w] = true;
          frameNode.push_back(w);
          frameIter.push_back(0);
        } else if (onStack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
      } else {
        frameNode.pop_back();
        frameIter.pop_back();
        if (!frameNode.empty()) low[frameNode.back()] = std::min(low[frameNode.back()], low[v]);
        if (low[v] == index[v]) {
          int id = static_cast<int>(compSize.size());
          compSize.push_back(0);
          int w;
          do {
            w = stack.back();
            stack.pop_back();
            onStack[w] = false;
            comp[w] = id;
            ++compSize[id];
          } while (w != v);
        }
      }
    }
  }
  for (int v = 0; v < n; ++v)
    if (compSize[comp[v]] > 1) members.set(v);
  return members;
}

std::vector<Edge> supportGraphEdges(const Framework& fw) {
  std::vector<Edge> edges;
  for (int b : fw.supports()) {
    const Element& e = fw.element(b);
    if (fw.element(e.target).kind != ElementKind::Argument) continue;
    edges.push_back({e.source, e.target, isRecursive(fw.flavor()) ? b : -1});
  }
  return edges;
}

} // namespace

Framework auxBaf(const Framework& fw) {
  requireValidated(fw);
  if (!isRecursive(fw.flavor()))
    fail(ErrorCode::FlavorViolation,
         std::string("auxiliary flattening applies to recursive flavors, not ") +
             toString(fw.flavor()));

  Framework out(Flavor::AFN);
  std::set<std::string> used;
  for (int i = 0; i < fw.size(); ++i) {
    out.addArgument(fw.element(i).name);
    used.insert(fw.element(i).name);
  }
  auto fresh = [&used](std::string base) {
    while (used.count(base)) base += "_";
    used.insert(base);
    return base;
  };
  for (int a : fw.attacks()) {
    const Element& e = fw.element(a);
    out.addSupport(fresh(e.name + "_s"), e.sourceName, e.name);
    out.addAttack(fresh(e.name + "_t"), e.name, e.targetName);
  }
  for (int b : fw.supports()) {
    const Element& e = fw.element(b);
    out.addSupport(fresh(e.name + "_s"), e.sourceName, e.name);
    out.addSupport(fresh(e.name + "_t"), e.name, e.targetName);
  }
  out.validate();
  return out;
}

bool isSupportAcyclic(const Framework& fw) {
  requireValidated(fw);
  if (fw.flavor() == Flavor::AF) return true;
  if (isRecursive(fw.flavor())) return isSupportAcyclic(auxBaf(fw));
  return cycleNodes(fw.size(), supportGraphEdges(fw), nullptr).none();
}

Bits supportCycleMembersBits(const Framework& fw, const Bits& active) {
  requireValidated(fw);
  auto edges = supportGraphEdges(fw);
  if (isRecursive(fw.flavor())) return cycleNodes(fw.size(), edges, &active);
  return cycleNodes(fw.size(), edges, nullptr);
}

ElementSet supportCycleMembers(const Framework& fw, const ElementSet& s) {
  return ElementSet(fw, supportCycleMembersBits(fw, s.bits()));
}

Bits dependencyCycleMembersBits(const Framework& fw, const Bits& s) {
  requireValidated(fw);
  std::vector<Edge> edges;
  const bool deductive = fw.flavor() == Flavor::AFD || fw.flavor() == Flavor::RAFD ||
                         fw.flavor() == Flavor::AFRAD;
  const bool rec = isRecursive(fw.flavor());
  for (int b : fw.supports()) {
    const Element& e = fw.element(b);
    // The prerequisite of t(β) is s(β) under necessity; of s(β) it is t(β)
    // under the deductive reading.
    if (deductive)
      edges.push_back({e.source, e.target, rec ? b : -1});
    else
      edges.push_back({e.target, e.source, rec ? b : -1});
  }
  if (fw.flavor() == Flavor::ASAF || fw.flavor() == Flavor::AFRAD)
    for (int a : fw.attacks()) edges.push_back({a, fw.element(a).source, -1});
  return cycleNodes(fw.size(), edges, rec ? &s : nullptr);
}

bool isStructurallyAcyclic(const Framework& fw) {
  requireValidated(fw);
  if (!isSupportAcyclic(fw)) return false;
  Bits all(fw.size());
  for (int b : fw.supports()) all.set(b);
  return dependencyCycleMembersBits(fw, all).none();
}

Framework reverseSupports(const Framework& fw) {
  requireValidated(fw);
  Flavor target;
  if (fw.flavor() == Flavor::AFN)
    target = Flavor::AFD;
  else if (fw.flavor() == Flavor::AFD)
    target = Flavor::AFN;
  else
    fail(ErrorCode::FlavorViolation,
         std::string("support reversal is an afn/afd duality; got ") + toString(fw.flavor()));

  Framework out(target);
  for (int i = 0; i < fw.size(); ++i) {
    const Element& e = fw.element(i);
    switch (e.kind) {
      case ElementKind::Argument: out.addArgument(e.name); break;
      case ElementKind::Attack: out.addAttack(e.name, e.sourceName, e.targetName); break;
      case ElementKind::Support: out.addSupport(e.name, e.targetName, e.sourceName); break;
    }
  }
  out.validate();
  return out;
}

std::vector<std::pair<std::string, std::string>> derivedAttacks(const Framework& fw) {
  requireValidated(fw);
  if (fw.flavor() != Flavor::AFN && fw.flavor() != Flavor::AFD)
    fail(ErrorCode::FlavorViolation,
         std::string("derived attacks are defined for afn/afd; got ") + toString(fw.flavor()));
  if (!isSupportAcyclic(fw))
    fail(ErrorCode::CyclicSupports, "derived-attack rewriting needs acyclic supports");

  const int n = fw.size();
  // reach[a] = arguments reachable from a over support edges (one or more
  // steps).
  std::vector<Bits> reach(n, Bits(n));
  bool changed = true;
  for (int b : fw.supports()) {
    const Element& e = fw.element(b);
    reach[e.source].set(e.target);
  }
  while (changed) {
    changed = false;
    for (int b : fw.supports()) {
      const Element& e = fw.element(b);
      Bits merged = reach[e.source] | reach[e.target];
      if (!(merged == reach[e.source])) {
        reach[e.source] = std::move(merged);
        changed = true;
      }
    }
  }

  std::set<std::pair<int, int>> existing;
  for (int a : fw.attacks()) {
    const Element& e = fw.element(a);
    existing.insert({e.source, e.target});
  }

  std::set<std::pair<std::string, std::string>> out;
  for (int a : fw.attacks()) {
    const Element& e = fw.element(a);
    // AFN: attacking b also attacks what b enables downstream. AFD: attacking
    // b also attacks whatever would entail b.
    if (fw.flavor() == Flavor::AFN) {
      reach[e.target].forEach([&](int c) {
        if (!existing.count({e.source, c}))
          out.insert({fw.element(e.source).name, fw.element(c).name});
      });
    } else {
      for (int c : fw.arguments())
        if (reach[c].test(e.target) && !existing.count({e.source, c}))
          out.insert({fw.element(e.source).name, fw.element(c).name});
    }
  }
  return {out.begin(), out.end()};
}

} // namespace rbaf
