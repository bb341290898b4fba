// Copyright 2026 The dialect-tod Authors.
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

#ifndef DIALECT_ERROR_H_
#define DIALECT_ERROR_H_

#include <stdexcept>
#include <string>

namespace dialect {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed corpus input. Carries the offending sentence id (may be empty
// when the id has not been seen yet) and the 1-based line number.
class ParseError : public Error {
 public:
  ParseError(std::string sent_id, int line, const std::string& message);

  const std::string& sent_id() const { return sent_id_; }
  int line() const { return line_; }

 private:
  std::string sent_id_;
  int line_;
};

}  // namespace dialect

#endif  // DIALECT_ERROR_H_
