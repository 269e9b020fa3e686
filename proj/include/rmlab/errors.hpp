#pragma once
#include <stdexcept>
#include <string>

namespace rmlab {

// Base class for every failure the library reports. Each subclass names the
// operation-level failure mode it stands for; catching Error catches all.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// -- special ---------------------------------------------------------------
class PoleAtNonPositiveInteger : public Error { using Error::Error; };
class NoConvergence            : public Error { using Error::Error; };
class DegenerateParameters     : public Error { using Error::Error; };

// Umbrella for failures propagated out of the hypergeometric kernel.
class HypergeometricFailure    : public Error { using Error::Error; };

// -- model -----------------------------------------------------------------
class DegeneratePoint          : public Error { using Error::Error; };

// -- rootfind --------------------------------------------------------------
class BoundaryZero             : public Error { using Error::Error; };
class MaxDepthExceeded         : public Error { using Error::Error; };
class NewtonStall              : public Error { using Error::Error; };
class FitDiverged              : public Error { using Error::Error; };

// -- numerics --------------------------------------------------------------
class NotConverged             : public Error { using Error::Error; };
class ScaledSingularity        : public Error { using Error::Error; };
class NoConvergenceQR          : public Error { using Error::Error; };

// -- spectral --------------------------------------------------------------
class WronskianVanishes        : public Error { using Error::Error; };
class QuadratureNotConverged   : public Error { using Error::Error; };
class DefectiveSpectrum        : public Error { using Error::Error; };
class NotYetUncovered          : public Error { using Error::Error; };

// -- cli -------------------------------------------------------------------
class ConfigError              : public Error { using Error::Error; };

} // namespace rmlab
