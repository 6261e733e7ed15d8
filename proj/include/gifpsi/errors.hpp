#pragma once

#include <stdexcept>
#include <string>

namespace gifpsi {

/// Input outside the mathematical domain of an operation (e.g. a t-norm
/// argument outside [0,1], a non-positive time parameter).
class domain_error : public std::invalid_argument {
 public:
  explicit domain_error(const std::string& what) : std::invalid_argument(what) {}
};

/// Vector dimension does not match the space the value belongs to.
class shape_error : public std::invalid_argument {
 public:
  explicit shape_error(const std::string& what) : std::invalid_argument(what) {}
};

/// A grid/refinement search ran out of candidates without finding a witness.
class search_exhausted_error : public std::runtime_error {
 public:
  explicit search_exhausted_error(const std::string& what) : std::runtime_error(what) {}
};

/// Bisection bracket expansion hit its cap before the membership level was
/// reached.
class unreachable_level_error : public std::runtime_error {
 public:
  explicit unreachable_level_error(const std::string& what) : std::runtime_error(what) {}
};

/// Input vectors were expected to be linearly independent but are not.
class rank_error : public std::invalid_argument {
 public:
  explicit rank_error(const std::string& what) : std::invalid_argument(what) {}
};

/// A coordinate of the sequence grew beyond the configured cap; no
/// subsequence extraction is attempted.
class unbounded_error : public std::runtime_error {
 public:
  explicit unbounded_error(const std::string& what) : std::runtime_error(what) {}
};

/// Coordinate tails failed the Cauchy-gap control, so no limit can be
/// reconstructed from them.
class reconstruction_error : public std::runtime_error {
 public:
  explicit reconstruction_error(const std::string& what) : std::runtime_error(what) {}
};

/// A caller-supplied object violates a documented precondition (e.g. a
/// family member that does not converge to the announced point).
class precondition_error : public std::invalid_argument {
 public:
  explicit precondition_error(const std::string& what) : std::invalid_argument(what) {}
};

/// The requested combination of inputs is outside what the implementation
/// supports (reported rather than guessed).
class unsupported_error : public std::runtime_error {
 public:
  explicit unsupported_error(const std::string& what) : std::runtime_error(what) {}
};

/// Configuration rejected; `field` carries the path to the offending entry.
class config_error : public std::runtime_error {
 public:
  config_error(std::string field_path, const std::string& constraint)
      : std::runtime_error(field_path + ": " + constraint), field(std::move(field_path)) {}

  std::string field;
};

}  // namespace gifpsi
