#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace exosynth {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A derived segment length came out <= 0 for the given signs.
struct NonPositiveComposite : Error {
    using Error::Error;
};

/// Newton iteration budget exhausted; unreachable pose or bad geometry.
struct NoConvergence : Error {
    explicit NoConvergence(const std::string& msg, std::size_t path_index = 0)
        : Error(msg), path_index(path_index) {}
    std::size_t path_index;  // set when raised inside a sweep
};

/// Loop Jacobian rank-deficient at an iterate; mechanism singularity.
struct SingularIteration : Error {
    using Error::Error;
};

/// J_Cp condition number above cap; passive-joint singularity.
struct PassiveSingular : Error {
    using Error::Error;
};

/// The reduced 2x2 output matrix is singular.
struct OutputSingular : Error {
    using Error::Error;
};

/// torque_ratio with tau2 == 0.
struct RatioUndefined : Error {
    using Error::Error;
};

/// A +/-delta perturbed geometry failed to close at the study pose.
struct UnsolvablePerturbation : Error {
    using Error::Error;
};

/// Grasp equilibrium minimizer failed to converge (jammed configuration).
struct NoEquilibrium : Error {
    explicit NoEquilibrium(const std::string& msg, std::size_t step_index = 0)
        : Error(msg), step_index(step_index) {}
    std::size_t step_index;
};

/// Both optimizer filters eliminated every candidate.
struct NoFeasibleCandidate : Error {
    using Error::Error;
};

/// Malformed config file or unusable run configuration.
struct ConfigError : Error {
    using Error::Error;
};

}  // namespace exosynth
