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
#include "rbaf/random.hpp"

#include <random>
#include <string>
#include <vector>

#include "rbaf/structure.hpp"

namespace rbaf {

Framework randomFramework(Flavor flavor, std::uint64_t seed, const RandomOptions& opt) {
  std::mt19937_64 rng(seed);
  // rng() % k directly, to stay reproducible across standard libraries.
  auto roll = [&rng](int k) { return k > 0 ? static_cast<int>(rng() % k) : 0; };

  for (int attempt = 0; attempt < 10000; ++attempt) {
    int total = opt.minElements + roll(opt.maxElements - opt.minElements + 1);
    int nArgs = total == 0 ? 0 : 1 + roll(total);
    int rest = total - nArgs;
    int nAtt = flavor == Flavor::AF ? rest : roll(rest + 1);
    int nSup = flavor == Flavor::AF ? 0 : rest - nAtt;

    std::vector<std::string> args, atts, sups;
    for (int i = 0; i < nArgs; ++i) args.push_back("a" + std::to_string(i));
    for (int i = 0; i < nAtt; ++i) atts.push_back("r" + std::to_string(i));
    for (int i = 0; i < nSup; ++i) sups.push_back("s" + std::to_string(i));

    std::vector<std::string> all = args;
    all.insert(all.end(), atts.begin(), atts.end());
    all.insert(all.end(), sups.begin(), sups.end());

    Framework fw(flavor);
    for (const auto& a : args) fw.addArgument(a);
    auto target = [&]() -> const std::string& {
      if (targetsArgumentsOnly(flavor)) return args[roll(static_cast<int>(args.size()))];
      return all[roll(static_cast<int>(all.size()))];
    };
    for (const auto& r : atts) fw.addAttack(r, args[roll(nArgs)], target());
    for (const auto& s : sups) fw.addSupport(s, args[roll(nArgs)], target());
    fw.validate();

    if (opt.requireAcyclic && !isStructurallyAcyclic(fw)) continue;
    return fw;
  }
  throw std::logic_error("random framework generation kept producing cyclic instances");
}

} // namespace rbaf
