#pragma once

#include <stdexcept>
#include <string>

namespace hopfgal {

/// Matrix inversion or a forced-invertible construction hit a singular matrix.
struct SingularMatrix : std::runtime_error {
    explicit SingularMatrix(const std::string& what) : std::runtime_error(what) {}
};

/// A map failed to restrict/corestrict/descend; carries a textual witness
/// (offending basis vector and where its image escapes).
struct NotWellDefined : std::runtime_error {
    std::string witness;
    NotWellDefined(const std::string& what, std::string w)
        : std::runtime_error(what + " [witness: " + w + "]"), witness(std::move(w)) {}
};

/// Canonical map beta is not bijective: the (co)extension is not Hopf Galois.
struct NotGalois : std::runtime_error {
    explicit NotGalois(const std::string& what) : std::runtime_error(what) {}
};

/// Multiplication table failed a group axiom; message names the witness triple.
struct NotAGroup : std::runtime_error {
    explicit NotAGroup(const std::string& what) : std::runtime_error(what) {}
};

struct NotSubalgebra : std::runtime_error {
    explicit NotSubalgebra(const std::string& what) : std::runtime_error(what) {}
};

/// The computed subspace I failed the two-sided coideal conditions.
struct NotCoideal : std::runtime_error {
    explicit NotCoideal(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// An input bundle parsed but failed an axiom validator.
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

struct UnsupportedCommand : std::runtime_error {
    explicit UnsupportedCommand(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hopfgal
