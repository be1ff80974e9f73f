#pragma once

#include <stdexcept>
#include <string>

namespace tracealg {

struct MissingVariable : std::runtime_error {
  explicit MissingVariable(const std::string& m) : std::runtime_error("MissingVariable: " + m) {}
};
struct DenominatorVanishes : std::runtime_error {
  explicit DenominatorVanishes(const std::string& m = "")
      : std::runtime_error("DenominatorVanishes" + (m.empty() ? "" : ": " + m)) {}
};
struct IndexOutOfRange : std::runtime_error {
  explicit IndexOutOfRange(const std::string& m) : std::runtime_error("IndexOutOfRange: " + m) {}
};
struct SizeMismatch : std::runtime_error {
  explicit SizeMismatch(const std::string& m) : std::runtime_error("SizeMismatch: " + m) {}
};
struct NotSymmetric : std::runtime_error {
  explicit NotSymmetric(const std::string& m = "matrix is not symmetric")
      : std::runtime_error("NotSymmetric: " + m) {}
};
struct MissingImage : std::runtime_error {
  explicit MissingImage(const std::string& m) : std::runtime_error("MissingImage: " + m) {}
};
struct DEvenRejected : std::runtime_error {
  DEvenRejected() : std::runtime_error("DEvenRejected: block multiplicity d must be odd") {}
};
struct MTooLarge : std::runtime_error {
  explicit MTooLarge(const std::string& m) : std::runtime_error("MTooLarge: " + m) {}
};
struct OddDimension : std::runtime_error {
  OddDimension() : std::runtime_error("OddDimension: symplectic involution needs even size") {}
};
struct NotLinearInAuxiliary : std::runtime_error {
  NotLinearInAuxiliary()
      : std::runtime_error("NotLinearInAuxiliary: Reynolds lift lost linearity") {}
};
struct BadIndex : std::runtime_error {
  explicit BadIndex(const std::string& m) : std::runtime_error("BadIndex: " + m) {}
};
struct ModeMismatch : std::runtime_error {
  explicit ModeMismatch(const std::string& m) : std::runtime_error("ModeMismatch: " + m) {}
};
struct DimensionMismatch : std::runtime_error {
  explicit DimensionMismatch(const std::string& m)
      : std::runtime_error("DimensionMismatch: " + m) {}
};
struct WrongSize : std::runtime_error {
  explicit WrongSize(const std::string& m) : std::runtime_error("WrongSize: " + m) {}
};
struct SyntaxError : std::runtime_error {
  SyntaxError(int line, int col, const std::string& m)
      : std::runtime_error("SyntaxError at " + std::to_string(line) + ":" + std::to_string(col) +
                           ": " + m),
        line(line), col(col) {}
  int line, col;
};

}  // namespace tracealg
