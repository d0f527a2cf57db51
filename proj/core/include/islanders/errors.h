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

#ifndef ISLANDERS_ERRORS_H_
#define ISLANDERS_ERRORS_H_

#include <stdexcept>
#include <string>

namespace islanders {

// A formula or world names a person, statement or atom that does not exist.
struct ReferenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A puzzle violates one of its structural invariants.
struct InvalidPuzzleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The candidate space of a puzzle exceeds the configured ceiling.
struct SearchSpaceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Invalid knowledge world or simulation configuration.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A strategy was asked to run on a world that violates its premises.
struct PreconditionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace islanders

#endif  // ISLANDERS_ERRORS_H_
