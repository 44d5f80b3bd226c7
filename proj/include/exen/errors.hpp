// Copyright 2026 The exen Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef EXEN_ERRORS_HPP_
#define EXEN_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace exen {

// Malformed textual input (graph6, edge lists, family specs, corpus files).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (at offset " + std::to_string(offset) + ")"),
        offset_(offset) {}
  explicit ParseError(const std::string& what)
      : std::runtime_error(what), offset_(std::string::npos) {}

  // Byte offset (or line number for line-oriented formats); npos if unknown.
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// Eigensolver non-convergence, non-finite input, or a violated numeric
// post-condition.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace exen

#endif  // EXEN_ERRORS_HPP_
