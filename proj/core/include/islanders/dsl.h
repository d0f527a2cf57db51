// Copyright 2026 The Islanders Authors
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

// Reader and writer for the .puz puzzle language. See docs/grammar.md.

#ifndef ISLANDERS_DSL_H_
#define ISLANDERS_DSL_H_

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "islanders/puzzle.h"

namespace islanders {

struct SourceSpan {
  int line = 1;    // 1-based
  int column = 1;  // 1-based, in bytes
  int length = 0;

  friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(SourceSpan span, std::string message,
             std::vector<std::string> expected = {});

  const SourceSpan& span() const { return span_; }
  const std::string& message() const { return message_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  SourceSpan span_;
  std::string message_;
  std::vector<std::string> expected_;
};

// Parses and validates a puzzle. Every failure, including violated puzzle
// invariants, is reported as a ParseError.
Puzzle ParsePuzzle(std::string_view text);

// Canonical text form; ParsePuzzle(SerializePuzzle(p)) == p.
std::string SerializePuzzle(const Puzzle& puzzle);

}  // namespace islanders

#endif  // ISLANDERS_DSL_H_
