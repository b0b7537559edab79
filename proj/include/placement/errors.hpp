#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace placement {

struct Violation {
  std::string entityId;
  std::string message;

  bool operator==(const Violation&) const = default;
};

using ValidationReport = std::vector<Violation>;

// Data failed its type invariants; carries the full report.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(ValidationReport report, const std::string& what = "validation failed")
      : std::runtime_error(what), report_(std::move(report)) {}

  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

// Malformed document: wrong JSON type, unknown field, bad enum literal.
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotFoundError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConflictError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An operation's precondition on its input data does not hold (for example
// a mission without annotations).
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A long-running job was asked to stop.
class CancelledError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace placement
