#pragma once

#include <stdexcept>
#include <string>

namespace paralg {

// Malformed input: unknown names, bad indices, schema violations, misuse of
// an operation outside its stated precondition. CLI maps this to exit 2.
class structural_error : public std::runtime_error {
 public:
  explicit structural_error(const std::string& what) : std::runtime_error(what) {}
};

// A computation refused because it exceeds a configured bound (dimension cap,
// eigensolver size, empty safe subspace). CLI maps this to exit 3.
class resource_error : public std::runtime_error {
 public:
  explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace paralg
