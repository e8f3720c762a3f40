#pragma once

#include <stdexcept>
#include <string>

namespace lvpoly {

/// Malformed input: bad ids, broken rotation systems, inconsistent regions.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operation was asked for on an object outside its domain
/// (pinch vertex where a surface is required, non-cellular input, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class CapExceeded : public std::length_error {
 public:
  CapExceeded(const std::string& what, int size, int cap)
      : std::length_error(what + ": size " + std::to_string(size) + " exceeds cap " +
                          std::to_string(cap)),
        size_(size),
        cap_(cap) {}
  int size() const { return size_; }
  int cap() const { return cap_; }

 private:
  int size_;
  int cap_;
};

}  // namespace lvpoly
