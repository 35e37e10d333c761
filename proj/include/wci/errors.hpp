// Copyright (c) the wcikit authors. All rights reserved.
// Licensed under the Apache 2.0 License.

#pragma once

#include <stdexcept>
#include <string>

namespace wci {

/// A caller violated a documented precondition.
class precondition_error : public std::invalid_argument {
 public:
  explicit precondition_error(const std::string& what)
      : std::invalid_argument(what) {}
};

/// An operation would exceed its configured memory/node budget.
/// Raised instead of ever returning a wrong or truncated answer.
class resource_error : public std::runtime_error {
 public:
  explicit resource_error(const std::string& what)
      : std::runtime_error(what) {}
};

/// An internal invariant that is guaranteed by a proved statement failed.
/// Carries the decision trace that led to the failure.
class contract_error : public std::logic_error {
 public:
  explicit contract_error(const std::string& what) : std::logic_error(what) {}
  contract_error(const std::string& what, const std::string& trace)
      : std::logic_error(what + "\ntrace:\n" + trace), trace_(trace) {}
  const std::string& trace() const noexcept { return trace_; }

 private:
  std::string trace_;
};

}  // namespace wci
