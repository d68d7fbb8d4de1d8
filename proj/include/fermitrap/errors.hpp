#pragma once

#include <stdexcept>
#include <string>

namespace fermitrap {

/// Argument outside an operation's mathematical domain.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Both positions sit where the densities vanish; the two-point state is undefined.
class DegeneratePointError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Kernel combination that would yield a non-PSD density matrix.
class InvalidKernelError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Matrix that is not a valid two-spin density matrix.
class InvalidStateError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class InvalidParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Zero gap together with a level sitting exactly at the Fermi energy.
class DegenerateLevelError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Concurrence never vanishes (single occupied level), so there is no finite distance.
class InfiniteDistanceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class RootNotFoundError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace fermitrap
