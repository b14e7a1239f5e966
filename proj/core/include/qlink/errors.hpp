#pragma once

#include <stdexcept>
#include <string>

namespace qlink {

class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

struct ArgumentError : Error {
  explicit ArgumentError(const std::string& w) : Error("argument", w) {}
};
struct CapacityError : Error {
  explicit CapacityError(const std::string& w) : Error("capacity", w) {}
};
struct StructuralError : Error {
  explicit StructuralError(const std::string& w) : Error("structural", w) {}
};
struct HypothesisError : Error {
  explicit HypothesisError(const std::string& w) : Error("hypothesis", w) {}
};
struct AdmissibilityError : Error {
  explicit AdmissibilityError(const std::string& w) : Error("admissibility", w) {}
};
// Raised when an exact identity that must hold fails; indicates a bug.
struct ConsistencyError : Error {
  explicit ConsistencyError(const std::string& w) : Error("consistency", w) {}
};

}  // namespace qlink
