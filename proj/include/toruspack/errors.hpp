// Copyright 2026 The toruspack Authors.
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

namespace toruspack {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DegenerateLattice : public Error {
 public:
  explicit DegenerateLattice(const std::string& what) : Error(what) {}
};

class OutOfModuliStrip : public Error {
 public:
  explicit OutOfModuliStrip(const std::string& what) : Error(what) {}
};

class OverlapDetected : public Error {
 public:
  explicit OverlapDetected(const std::string& what) : Error(what) {}
};

class AlphaOutOfRange : public Error {
 public:
  explicit AlphaOutOfRange(const std::string& what) : Error(what) {}
};

class UnsupportedN : public Error {
 public:
  explicit UnsupportedN(const std::string& what) : Error(what) {}
};

class InconsistentLengths : public Error {
 public:
  explicit InconsistentLengths(const std::string& what) : Error(what) {}
};

}  // namespace toruspack
