#ifndef QHERM_ERRORS_HPP
#define QHERM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qherm {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exact division failed. Load-bearing: quasi-invariance tests and the
// deformed-operator "safe class" checks branch on this.
struct NotDivisible : Error {
    using Error::Error;
};

// collapse() called on an element that does not commute with the S_N action.
struct NotInvariant : Error {
    using Error::Error;
};

struct NotSymmetric : Error {
    using Error::Error;
};

struct NotQuasiInvariant : Error {
    using Error::Error;
};

struct SingularGram : Error {
    using Error::Error;
};

struct PoleAtAlpha : Error {
    using Error::Error;
};

// Berest iteration left a root factor uncancelled; indicates a bug, the
// construction guarantees a polynomial result.
struct NonPolynomialResult : Error {
    using Error::Error;
};

struct EigenCheckFailed : Error {
    using Error::Error;
};

struct ExtensionFailed : Error {
    using Error::Error;
};

} // namespace qherm

#endif
