// Copyright 2026 The condlo Authors
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
#include <utility>

namespace condlo {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed structured text: bad syntax, missing or unknown fields, wrong
/// value types.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A device description that is syntactically fine but physically invalid.
/// `component()` names the first invariant that failed, e.g. "ModeUnitary",
/// "partition", "AncillaDecomposition", "DetectionSignature".
class ValidationError : public Error {
 public:
  ValidationError(std::string component, const std::string& detail)
      : Error(component + ": " + detail), component_(std::move(component)) {}

  const std::string& component() const noexcept { return component_; }

 private:
  std::string component_;
};

/// Input term exceeded the configured photon-number cap in lifting.
class PhotonCapExceeded : public Error {
 public:
  using Error::Error;
};

/// The conditional map is undefined because d(rho) vanished.
class ZeroProbabilityError : public Error {
 public:
  using Error::Error;
};

/// No outcome ever heralds success, or the heralded image is empty.
class DegenerateDeviceError : public Error {
 public:
  using Error::Error;
};

}  // namespace condlo
