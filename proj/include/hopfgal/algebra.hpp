#pragma once

#include <string>
#include <vector>

#include "hopfgal/linalg.hpp"
#include "hopfgal/report.hpp"
#include "hopfgal/tensor.hpp"

namespace hopfgal {

/// Finite-dimensional associative unital algebra as structure constants.
/// mult : A⊗A -> A is dim x dim^2, unit : k -> A is dim x 1.
struct AlgebraData {
    std::size_t dim = 0;
    std::vector<std::string> basis;
    Mat mult;
    Mat unit;
};

/// Finite-dimensional coassociative counital coalgebra.
/// comult : C -> C⊗C is dim^2 x dim, counit : C -> k is 1 x dim.
struct CoalgebraData {
    std::size_t dim = 0;
    std::vector<std::string> basis;
    Mat comult;
    Mat counit;
};

/// Left-to-right iterated product A^{⊗n} -> A; n = 1 is the identity.
inline Mat iterated_product(const AlgebraData& a, std::size_t n) {
    Mat m = Mat::identity(a.dim);
    for (std::size_t k = 1; k < n; ++k) m = a.mult * kron(m, Mat::identity(a.dim));
    return m;
}

/// Leftmost-slot iterated coproduct C -> C^{⊗(n+1)}; n = 0 is the identity.
/// Coassociativity makes the expansion slot immaterial; tests assert that
/// rather than assume it.
inline Mat iterated_coproduct(const CoalgebraData& c, std::size_t n) {
    Mat m = Mat::identity(c.dim);
    for (std::size_t k = 0; k < n; ++k) {
        // expand the leftmost slot: (Δ ⊗ id^{⊗k}) ∘ m
        std::size_t rest = 1;
        for (std::size_t i = 0; i < k; ++i) rest *= c.dim;
        m = kron(c.comult, Mat::identity(rest)) * m;
    }
    return m;
}

/// Convolution product in Hom(src, dst): mult ∘ (f⊗g) ∘ comult.
inline Mat convolution(const Mat& f, const Mat& g, const CoalgebraData& src,
                       const AlgebraData& dst) {
    return dst.mult * kron(f, g) * src.comult;
}

/// Convolution unit u∘ε.
inline Mat convolution_unit(const CoalgebraData& src, const AlgebraData& dst) {
    return dst.unit * src.counit;
}

inline Report validate_algebra(const AlgebraData& a, const std::string& prefix = "alg.") {
    Report rep;
    const Mat id = Mat::identity(a.dim);
    check_equal(rep, prefix + "assoc", a.mult * kron(a.mult, id), a.mult * kron(id, a.mult),
                {a.dim, a.dim, a.dim});
    check_equal(rep, prefix + "unit_left", a.mult * kron(a.unit, id), id, {a.dim});
    check_equal(rep, prefix + "unit_right", a.mult * kron(id, a.unit), id, {a.dim});
    return rep;
}

inline Report validate_coalgebra(const CoalgebraData& c, const std::string& prefix = "coalg.") {
    Report rep;
    const Mat id = Mat::identity(c.dim);
    check_equal(rep, prefix + "coassoc", kron(c.comult, id) * c.comult,
                kron(id, c.comult) * c.comult, {c.dim});
    check_equal(rep, prefix + "counit_left", kron(c.counit, id) * c.comult, id, {c.dim});
    check_equal(rep, prefix + "counit_right", kron(id, c.counit) * c.comult, id, {c.dim});
    return rep;
}

/// Multiplication of the tensor-square algebra (A⊗A as an algebra):
/// (mult⊗mult) ∘ (id⊗tw⊗id).
inline Mat tensor_square_mult(const AlgebraData& a) {
    const Mat id = Mat::identity(a.dim);
    return kron(a.mult, a.mult) * kron(id, kron(tw(a.dim, a.dim), id));
}

/// Coalgebra structure on C⊗C: (id⊗tw⊗id) ∘ (Δ⊗Δ).
inline Mat tensor_square_comult(const CoalgebraData& c) {
    const Mat id = Mat::identity(c.dim);
    return kron(id, kron(tw(c.dim, c.dim), id)) * kron(c.comult, c.comult);
}

}  // namespace hopfgal
