#pragma once

#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace gsw {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
using IntVector = Eigen::VectorXi;

inline constexpr const char* kVersion = "0.1.0";

// Absolute tolerances on unit-scale data (instance norms are <= 1).
inline constexpr double kTolOrth = 1e-8;
inline constexpr double kTolResid = 1e-8;
inline constexpr double kTolNorm = 1e-9;

// A coordinate with |x| >= 1 - kTolFrozen is frozen and snapped to +-1.
inline constexpr double kTolFrozen = 1e-9;

// Relative singular-value threshold for numerical rank decisions.
inline constexpr double kRankTol = 1e-10;

// Invalid caller-supplied data: bad dimensions or violated invariants.
struct InputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// The requested linear system has no solution within tolerance.
struct InfeasibleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A numerical subroutine produced an inconsistent result.
struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace gsw
