// Copyright 2026 The gaussbell Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace gaussbell {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A parameter lies outside its domain (n = 0, T outside [0,1], mu < 1, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Detector efficiency outside (0, 1].
class InvalidEfficiency : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// Matrix has the wrong shape to be a covariance matrix (odd or
/// non-square dimension, non-finite entries).
class MalformedCovariance : public Error {
 public:
  using Error::Error;
};

/// Too few modes for the requested partition or measurement.
class InsufficientModes : public Error {
 public:
  using Error::Error;
};

/// A block that must be positive definite is not. The message names the
/// violated condition.
class InvalidCovariance : public Error {
 public:
  using Error::Error;
};

}  // namespace gaussbell
