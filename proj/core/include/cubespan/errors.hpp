#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace cubespan {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Mismatched bit-string lengths or out-of-range coordinates.
struct DimensionError : Error {
  using Error::Error;
};

// Malformed vertex text, edge lists, or config documents.
struct ParseError : Error {
  using Error::Error;
};

// A request exceeds a configured materialization or sweep budget.
struct CapacityError : Error {
  using Error::Error;
};

// Invalid construction parameters; carries the itemized violations.
struct ParameterError : Error {
  explicit ParameterError(std::vector<std::string> items)
      : Error(join(items)), violations(std::move(items)) {}
  std::vector<std::string> violations;

 private:
  static std::string join(const std::vector<std::string>& items) {
    std::string out = "invalid parameters";
    for (const auto& s : items) {
      out += "; ";
      out += s;
    }
    return out;
  }
};

}  // namespace cubespan
