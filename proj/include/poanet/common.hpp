// Copyright 2026 The poanet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef POANET_COMMON_HPP
#define POANET_COMMON_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace poanet {

/// Error raised on malformed or inconsistent user input.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// Error raised when an enumeration or search would exceed its configured cap.
/// Carries the exact size that was requested.
class CapacityError : public std::runtime_error {
 public:
  CapacityError(const std::string& what, std::uint64_t requested, std::uint64_t cap)
      : std::runtime_error(what), requested_(requested), cap_(cap) {}
  std::uint64_t requested() const { return requested_; }
  std::uint64_t cap() const { return cap_; }

 private:
  std::uint64_t requested_;
  std::uint64_t cap_;
};

/// Error raised when a verified postcondition or cross-check fails.
class InvariantError : public std::runtime_error {
 public:
  explicit InvariantError(const std::string& what) : std::runtime_error(what) {}
};

/// Error raised on solver-internal failures (numerical breakdown, statuses
/// that are impossible for well-formed inputs).
class InternalError : public std::runtime_error {
 public:
  explicit InternalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace poanet

#endif  // POANET_COMMON_HPP
