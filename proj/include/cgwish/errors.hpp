#pragma once

#include <stdexcept>
#include <string>

namespace cgwish {

/// Base class for all library errors. `kind()` gives a stable short tag
/// used by the CLI to map failures onto exit codes.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

// Validation errors: bad inputs, violated preconditions.
struct NotDecomposableError : Error {
  explicit NotDecomposableError(const std::string& w) : Error("NotDecomposable", w) {}
};
struct NotHomogeneousError : Error {
  explicit NotHomogeneousError(const std::string& w) : Error("NotHomogeneous", w) {}
};
struct NotInPGError : Error {
  explicit NotInPGError(const std::string& w) : Error("NotInPG", w) {}
};
struct DimensionMismatchError : Error {
  explicit DimensionMismatchError(const std::string& w) : Error("DimensionMismatch", w) {}
};
struct DimensionCapError : Error {
  explicit DimensionCapError(const std::string& w) : Error("DimensionCapExceeded", w) {}
};
struct EdgeNotPresentError : Error {
  explicit EdgeNotPresentError(const std::string& w) : Error("EdgeNotPresent", w) {}
};
struct NonIntegrableError : Error {
  explicit NonIntegrableError(const std::string& w) : Error("NonIntegrable", w) {}
};
struct InsufficientDataError : Error {
  explicit InsufficientDataError(const std::string& w) : Error("InsufficientData", w) {}
};
struct MomentDoesNotExistError : Error {
  explicit MomentDoesNotExistError(const std::string& w) : Error("MomentDoesNotExist", w) {}
};
struct InvalidParamsError : Error {
  explicit InvalidParamsError(const std::string& w) : Error("InvalidParams", w) {}
};
struct ParseError : Error {
  explicit ParseError(const std::string& w) : Error("ParseError", w) {}
};

// Numerical errors: structurally valid input, computation broke down.
struct NotPositiveDefiniteError : Error {
  explicit NotPositiveDefiniteError(const std::string& w) : Error("NotPositiveDefinite", w) {}
};
struct CliqueNotPositiveDefiniteError : Error {
  explicit CliqueNotPositiveDefiniteError(const std::string& w)
      : Error("CliqueNotPositiveDefinite", w) {}
};
struct SingularPrecisionError : Error {
  explicit SingularPrecisionError(const std::string& w) : Error("SingularPrecision", w) {}
};

/// true for errors that indicate numerical breakdown rather than bad input
inline bool is_numerical_error(const Error& e) {
  return e.kind() == "NotPositiveDefinite" || e.kind() == "CliqueNotPositiveDefinite" ||
         e.kind() == "SingularPrecision";
}

}  // namespace cgwish
