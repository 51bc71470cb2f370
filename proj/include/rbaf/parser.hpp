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

#include <string>
#include <string_view>

#include "rbaf/framework.hpp"

namespace rbaf {

/// Parses the framework text format into a validated Framework.
///
/// Statements end with '.', '%' starts a comment, whitespace is free:
///   flavor(af | afn | afd | rafn | asaf | rafd | afrad).
///   arg(name).
///   att(name, source, target).
///   sup(name, source, target).
///
/// Exactly one flavor directive is required. Names are [A-Za-z_][A-Za-z0-9_]*.
/// Diagnostics carry line:column positions and the usual load errors
/// (DuplicateName, DanglingEndpoint, FlavorViolation, MissingFlavor).
Framework parseFramework(std::string_view text);

/// Canonical text form; parseFramework(printFramework(fw)) reproduces the
/// framework structurally.
std::string printFramework(const Framework& fw);

} // namespace rbaf
