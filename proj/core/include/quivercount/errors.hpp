#ifndef QUIVERCOUNT_ERRORS_HPP
#define QUIVERCOUNT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace quivercount {

/// Malformed or out-of-contract input (bad quiver, duplicate abscissa, ...).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A configured guard (maximum d, search-space size, ...) was exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal identity that must hold exactly did not hold
/// (non-integral orbit coefficient, non-monic Kac polynomial, ...).
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace quivercount

#endif  // QUIVERCOUNT_ERRORS_HPP
