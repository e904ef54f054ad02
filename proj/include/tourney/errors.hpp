#pragma once

#include <stdexcept>
#include <string>

namespace tourney {

/// Input violates a structural precondition (bad bitstring, bad vertex, bad file).
class MalformedInputError : public std::runtime_error {
public:
  explicit MalformedInputError(const std::string& what) : std::runtime_error(what) {}
};

/// Requested size exceeds what an exact algorithm supports.
class UnsupportedSizeError : public std::runtime_error {
public:
  explicit UnsupportedSizeError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace tourney
