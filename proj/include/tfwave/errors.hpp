#pragma once

#include <stdexcept>
#include <string>

namespace tfwave {

/// Base class for all tfwave errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Arithmetic or transform between grid functions with different GridSpec.
struct SpecMismatch : Error {
    using Error::Error;
};

/// Operation applied to a function with the wrong domain tag.
struct DomainMismatch : Error {
    using Error::Error;
};

/// Exponent outside the Banach range [1, inf].
struct UnsupportedExponent : Error {
    using Error::Error;
};

/// Amalgam norms require a compactly supported window.
struct WindowNotCompactlySupported : Error {
    using Error::Error;
};

/// Lattice steps do not divide the grid.
struct IncompatibleLattice : Error {
    using Error::Error;
};

/// Exponent numerology of a product/Lipschitz estimate is violated.
struct ExponentMismatch : Error {
    using Error::Error;
};

/// Embedding condition d/q - d/r < 1 fails.
struct EmbeddingConditionFailed : Error {
    using Error::Error;
};

/// Input function carries too much mass outside the stated support ball.
struct SupportTooLarge : Error {
    using Error::Error;
};

/// Symbol parameters outside the admissible set (sin-power: 0 < alpha <= 1, delta <= alpha).
struct InvalidSymbolParams : Error {
    using Error::Error;
};

/// Picard iteration failed to contract within the iteration cap.
struct ContractionFailure : Error {
    using Error::Error;
};

/// Reference integrator detected norm blowup.
struct BlowupDetected : Error {
    using Error::Error;
};

/// Invalid experiment or solver configuration.
struct ConfigError : Error {
    using Error::Error;
};

/// Calibration store lookup/record failure.
struct CalibrationError : Error {
    using Error::Error;
};

/// File input/output failure.
struct IoError : Error {
    using Error::Error;
};

}  // namespace tfwave
