#pragma once

#include "hopfgal/algebra.hpp"

namespace hopfgal {

/// Finite-dimensional Hopf algebra: algebra + coalgebra on the same basis,
/// plus an antipode. Inputs are rejected unless the antipode is invertible:
/// cyclic duality and the Lemma 3.5 machinery need S^{-1}.
struct HopfData {
    AlgebraData algebra;
    CoalgebraData coalgebra;
    Mat antipode;

    std::size_t dim() const { return algebra.dim; }
    const std::vector<std::string>& basis() const { return algebra.basis; }
    const Mat& mult() const { return algebra.mult; }
    const Mat& unit() const { return algebra.unit; }
    const Mat& comult() const { return coalgebra.comult; }
    const Mat& counit() const { return coalgebra.counit; }
};

/// Full axiom sweep: (co)algebra axioms, bialgebra compatibility, both antipode
/// identities, S bijectivity. Failures are rows with witnesses, never throws.
inline Report validate_hopf(const HopfData& h) {
    Report rep;
    rep.merge(validate_algebra(h.algebra));
    rep.merge(validate_coalgebra(h.coalgebra));

    const std::size_t d = h.dim();
    const Mat id = Mat::identity(d);
    check_true(rep, "bialg.same_dim", h.coalgebra.dim == d && h.antipode.rows == d,
               "algebra/coalgebra/antipode dimensions disagree");

    // Δ and ε are algebra maps; Δ(1) = 1⊗1, ε(1) = 1.
    check_equal(rep, "bialg.comult_mult", h.comult() * h.mult(),
                tensor_square_mult(h.algebra) * kron(h.comult(), h.comult()), {d, d});
    check_equal(rep, "bialg.comult_unit", h.comult() * h.unit(), kron(h.unit(), h.unit()), {1});
    check_equal(rep, "bialg.counit_mult", h.counit() * h.mult(), kron(h.counit(), h.counit()),
                {d, d});
    check_equal(rep, "bialg.counit_unit", h.counit() * h.unit(), Mat::identity(1), {1});

    // m ∘ (S⊗id) ∘ Δ = u∘ε = m ∘ (id⊗S) ∘ Δ
    const Mat ue = h.unit() * h.counit();
    check_equal(rep, "antipode.left", h.mult() * kron(h.antipode, id) * h.comult(), ue, {d});
    check_equal(rep, "antipode.right", h.mult() * kron(id, h.antipode) * h.comult(), ue, {d});

    bool invertible = true;
    try {
        invert(h.antipode);
    } catch (const SingularMatrix&) {
        invertible = false;
    }
    check_true(rep, "antipode.invertible", invertible, "antipode matrix is singular");
    return rep;
}

/// Matrix inverse of the antipode; throws SingularMatrix on degenerate input.
inline Mat antipode_inverse(const HopfData& h) { return invert(h.antipode); }

}  // namespace hopfgal
