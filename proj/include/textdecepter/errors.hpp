// Copyright 2026 The TextDecepter Authors
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

#ifndef TEXTDECEPTER_ERRORS_HPP_
#define TEXTDECEPTER_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace textdecepter {

// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Empty or whitespace-only input where a document was required.
class EmptyDocumentError : public Error {
 public:
  using Error::Error;
};

// A substitution addressed a position outside the document's word sequence.
class InvalidPositionError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

// Malformed input file; carries the 1-based line number when known.
class FormatError : public Error {
 public:
  FormatError(const std::string& what, std::size_t line)
      : Error(what + " (line " + std::to_string(line) + ")"), line_(line) {}
  explicit FormatError(const std::string& what) : Error(what), line_(0) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Requested word is not a row of the similarity matrix.
class UnknownWordError : public Error {
 public:
  using Error::Error;
};

// Remote oracle could not be reached after the configured retries.
class OracleUnavailableError : public Error {
 public:
  using Error::Error;
};

// Remote oracle replied with something other than the documented schema.
class OracleProtocolError : public Error {
 public:
  using Error::Error;
};

// Raised internally when the per-attack query budget is used up.
class BudgetExhaustedError : public Error {
 public:
  using Error::Error;
};

class EmptyCampaignError : public Error {
 public:
  using Error::Error;
};

}  // namespace textdecepter

#endif  // TEXTDECEPTER_ERRORS_HPP_
