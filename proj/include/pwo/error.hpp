#ifndef PWO_ERROR_HPP
#define PWO_ERROR_HPP

#include <stdexcept>
#include <string>

namespace pwo {

/// Base class for every error raised by the library.
class error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A word or permutation that violates its invariants (duplicates, gaps, empty).
class invalid_word_error : public error {
public:
  using error::error;
};

/// Malformed matrix contents or dimensions.
class invalid_matrix_error : public error {
public:
  using error::error;
};

/// Mismatched lengths or shapes between arguments.
class arity_error : public error {
public:
  using error::error;
};

/// Argument outside the mathematical domain of an operation.
class domain_error : public error {
public:
  using error::error;
};

/// A position outside the bounds of a shaped matrix.
class bounds_error : public error {
public:
  using error::error;
};

/// An exhaustive search or enumeration that would exceed its configured cap.
class resource_error : public error {
public:
  using error::error;
};

/// G(M) does not have the shape an operation requires.
class shape_error : public error {
public:
  using error::error;
};

/// Odd number of -1 entries where an even number is required.
class parity_error : public error {
public:
  using error::error;
};

/// A cell walk that breaks the succession rules; `index` is the offending step.
class walk_error : public error {
public:
  walk_error(const std::string& what, std::size_t index)
      : error(what), index_(index) {}

  std::size_t index() const noexcept { return index_; }

private:
  std::size_t index_;
};

/// Internal invariant failure in the batch generator. Never repaired silently.
class consistency_error : public error {
public:
  using error::error;
};

/// Unparseable text input.
class parse_error : public error {
public:
  using error::error;
};

}  // namespace pwo

#endif  // PWO_ERROR_HPP
