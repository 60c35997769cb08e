// Copyright 2026 The Authors.
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

#ifndef KMB_ERRORS_HPP_
#define KMB_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace kmb {

enum class Errc {
  bad_parameters,
  bad_index,
  negative_cost,
  isolated_customer,
  uncoverable_element,
  parameter_out_of_range,
  infeasible,
  budget_exhausted,
  too_large,
  precondition_violated,
  internal_invariant,
  infeasible_fractional,
  parse_error,
  io_error,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::bad_parameters: return "bad_parameters";
    case Errc::bad_index: return "bad_index";
    case Errc::negative_cost: return "negative_cost";
    case Errc::isolated_customer: return "isolated_customer";
    case Errc::uncoverable_element: return "uncoverable_element";
    case Errc::parameter_out_of_range: return "parameter_out_of_range";
    case Errc::infeasible: return "infeasible";
    case Errc::budget_exhausted: return "budget_exhausted";
    case Errc::too_large: return "too_large";
    case Errc::precondition_violated: return "precondition_violated";
    case Errc::internal_invariant: return "internal_invariant";
    case Errc::infeasible_fractional: return "infeasible_fractional";
    case Errc::parse_error: return "parse_error";
    case Errc::io_error: return "io_error";
  }
  return "unknown";
}

/// Library-wide exception type carrying a machine-readable error code.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) {
  throw Error(code, msg);
}

}  // namespace kmb

#endif  // KMB_ERRORS_HPP_
