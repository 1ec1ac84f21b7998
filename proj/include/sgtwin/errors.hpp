#ifndef SGTWIN_ERRORS_HPP
#define SGTWIN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sgtwin {

// A projective stage left no state to renormalize (or an evolved branch
// has vanishing norm).
struct DegenerateStateError : std::runtime_error {
    explicit DegenerateStateError(const std::string& what) : std::runtime_error(what) {}
};

// Least-squares inversion of a scan could not produce a usable estimate.
struct FitError : std::runtime_error {
    explicit FitError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace sgtwin

#endif
