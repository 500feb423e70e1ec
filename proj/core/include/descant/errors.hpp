// Copyright 2026 The Descant Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace descant {

/// Base class for all descant errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or truncated audio container.
class DecodeError : public Error {
 public:
  using Error::Error;
};

/// Container is structurally valid but the codec is not supported.
class UnsupportedFormatError : public DecodeError {
 public:
  using DecodeError::DecodeError;
};

/// A caller handed over arguments that violate a documented precondition.
class InvalidInputError : public Error {
 public:
  using Error::Error;
};

/// The signal is too short for the requested measurement.
class TooShortError : public Error {
 public:
  using Error::Error;
};

/// Caption text that does not match the descriptor-tail grammar.
/// `offset` is the byte position of the offending segment.
class CaptionParseError : public Error {
 public:
  CaptionParseError(const std::string& what, std::size_t offset)
      : Error(what), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_ = 0;
};

/// Manifest file problems; `line` is 1-based.
class ManifestError : public Error {
 public:
  ManifestError(const std::string& what, std::size_t line)
      : Error(what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_ = 0;
};

/// Unusable pipeline configuration or output location.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace descant
