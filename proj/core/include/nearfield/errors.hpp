#pragma once

#include <stdexcept>
#include <string>

namespace nearfield {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ZeroVectorError : Error {
  ZeroVectorError() : Error("cannot project a (near-)zero vector onto the sphere") {}
};

struct InvalidFocusError : Error {
  using Error::Error;
};

struct InvalidParameterError : Error {
  using Error::Error;
};

struct MassOutOfRangeError : Error {
  using Error::Error;
};

struct ApexQueryError : Error {
  ApexQueryError() : Error("cone membership queried at the apex itself") {}
};

struct DisconnectedApertureError : Error {
  using Error::Error;
};

/// Carving stalled: best coverage estimate stayed below the noise floor for
/// three consecutive refinement rounds while the residual was above threshold.
struct NoProgressError : Error {
  std::string state_dump;
  NoProgressError(const std::string& msg, std::string dump)
      : Error(msg), state_dump(std::move(dump)) {}
};

/// Pairwise cell cone-disjointness hypothesis failed for cells (i, j).
struct HypothesisViolatedError : Error {
  int cell_i, cell_j;
  double witness[3];
  HypothesisViolatedError(const std::string& msg, int i, int j, double wx, double wy, double wz)
      : Error(msg), cell_i(i), cell_j(j), witness{wx, wy, wz} {}
};

struct EnergyMismatchError : Error {
  int cell_index;
  EnergyMismatchError(const std::string& msg, int idx) : Error(msg), cell_index(idx) {}
};

struct ConfigError : Error {
  using Error::Error;
};

}  // namespace nearfield
