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
#include "rbaf/errors.hpp"

namespace rbaf {

std::string toString(ErrorCode code) {
  switch (code) {
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::MissingFlavor: return "MissingFlavor";
    case ErrorCode::DuplicateName: return "DuplicateName";
    case ErrorCode::DanglingEndpoint: return "DanglingEndpoint";
    case ErrorCode::FlavorViolation: return "FlavorViolation";
    case ErrorCode::UnknownElement: return "UnknownElement";
    case ErrorCode::ModeViolation: return "ModeViolation";
    case ErrorCode::CyclicSupports: return "CyclicSupports";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::Usage: return "Usage";
  }
  return "Error";
}

} // namespace rbaf
