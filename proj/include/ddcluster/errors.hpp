// Copyright 2026 The ddcluster Authors
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

#ifndef DDCLUSTER_ERRORS_HPP_
#define DDCLUSTER_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace ddc {

// A caller broke a documented precondition.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& detail, const std::string& source = {})
      : std::runtime_error((source.empty() ? "" : source + ": ") + "line " +
                           std::to_string(line) + ": " + detail),
        line_(line),
        detail_(detail) {}
  int line() const { return line_; }
  const std::string& detail() const { return detail_; }

 private:
  int line_;
  std::string detail_;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define DDC_REQUIRE(cond, msg)                                   \
  do {                                                           \
    if (!(cond)) throw ::ddc::ContractViolation(std::string(msg)); \
  } while (0)

}  // namespace ddc

#endif  // DDCLUSTER_ERRORS_HPP_
