// Copyright 2026 The rpcheck Authors
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

#ifndef RPCHECK_ERRORS_H_
#define RPCHECK_ERRORS_H_

#include <stdexcept>
#include <string>

namespace rpcheck {

// Base of every error thrown by the library. The CLI maps all of these to
// exit code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or inconsistent caller input (bad index, infeasible quotas, ...).
class InputError : public Error {
 public:
  using Error::Error;
};

// A configured enumeration guard would be exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

// An operation's documented precondition does not hold.
class ContractError : public Error {
 public:
  using Error::Error;
};

// A table rule was queried at a profile it does not cover.
class LookupError : public Error {
 public:
  using Error::Error;
};

// A file or string could not be parsed.
class ParseError : public Error {
 public:
  using Error::Error;
};

// The mechanism is not defined for this kind of instance.
class UnsupportedInputError : public Error {
 public:
  using Error::Error;
};

}  // namespace rpcheck

#endif  // RPCHECK_ERRORS_H_
