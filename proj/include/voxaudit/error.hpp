// Copyright 2026 The voxaudit Authors.
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

#ifndef VOXAUDIT_ERROR_HPP_
#define VOXAUDIT_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace voxaudit {

// Base for everything thrown by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Bad or missing configuration: unknown columns, absent lexicon files,
// invalid thresholds. Always a caller mistake, never a data problem.
class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& what) : Error(what) {}
};

// Filesystem-level failures: unreadable or unwritable files.
class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error(what) {}
};

// Structurally unusable input data, e.g. a manifest with zero data rows.
class EmptyInputError : public Error {
 public:
  explicit EmptyInputError(const std::string& what) : Error(what) {}
};

// Undecodable or malformed audio content.
class AudioError : public Error {
 public:
  explicit AudioError(const std::string& what) : Error(what) {}
};

// Audio shorter than one analysis frame.
class TooShortAudioError : public AudioError {
 public:
  explicit TooShortAudioError(const std::string& what) : AudioError(what) {}
};

// Non-finite samples or other numerically invalid audio.
class InvalidAudioError : public AudioError {
 public:
  explicit InvalidAudioError(const std::string& what) : AudioError(what) {}
};

}  // namespace voxaudit

#endif  // VOXAUDIT_ERROR_HPP_
