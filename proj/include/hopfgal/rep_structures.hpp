#pragma once

#include "hopfgal/hopf.hpp"
#include "hopfgal/tensor.hpp"

namespace hopfgal {

enum class Side { left, right };
enum class Chirality { left_right, right_left };

/// H-module structure on a based space. Right: map is M⊗H -> M; left: H⊗M -> M.
struct ActionData {
    HopfData hopf;
    std::size_t space_dim = 0;
    Side side = Side::right;
    Mat map;
};

/// Comodule structure over a coalgebra (H or D). Right: M -> M⊗C; left: M -> C⊗M.
struct CoactionData {
    CoalgebraData coalg;
    std::size_t space_dim = 0;
    Side side = Side::right;
    Mat map;
};

inline Report validate_action(const ActionData& a, const std::string& prefix = "action.") {
    Report rep;
    const std::size_t d = a.hopf.dim(), m = a.space_dim;
    const Mat idm = Mat::identity(m), idh = Mat::identity(d);
    if (a.side == Side::right) {
        check_equal(rep, prefix + "assoc", a.map * kron(a.map, idh),
                    a.map * kron(idm, a.hopf.mult()), {m, d, d});
        check_equal(rep, prefix + "unit", a.map * kron(idm, a.hopf.unit()), idm, {m});
    } else {
        check_equal(rep, prefix + "assoc", a.map * kron(idh, a.map),
                    a.map * kron(a.hopf.mult(), idm), {d, d, m});
        check_equal(rep, prefix + "unit", a.map * kron(a.hopf.unit(), idm), idm, {m});
    }
    return rep;
}

inline Report validate_coaction(const CoactionData& c, const std::string& prefix = "coaction.") {
    Report rep;
    const std::size_t d = c.coalg.dim, m = c.space_dim;
    const Mat idm = Mat::identity(m), idd = Mat::identity(d);
    if (c.side == Side::right) {
        check_equal(rep, prefix + "coassoc", kron(c.map, idd) * c.map,
                    kron(idm, c.coalg.comult) * c.map, {m});
        check_equal(rep, prefix + "counit", kron(idm, c.coalg.counit) * c.map, idm, {m});
    } else {
        check_equal(rep, prefix + "coassoc", kron(idd, c.map) * c.map,
                    kron(c.coalg.comult, idm) * c.map, {m});
        check_equal(rep, prefix + "counit", kron(c.coalg.counit, idm) * c.map, idm, {m});
    }
    return rep;
}

/// Right H-module coalgebra: Δ(c◁h) = c¹◁h¹ ⊗ c²◁h² and ε(c◁h) = ε(c)ε(h).
inline Report validate_module_coalgebra(const CoalgebraData& c, const ActionData& a) {
    Report rep;
    if (a.side != Side::right) {
        rep.add("modcoalg.side", false, "expected a right action");
        return rep;
    }
    const std::size_t n = c.dim, d = a.hopf.dim();
    const Mat idc = Mat::identity(n);
    Mat rhs = kron(a.map, a.map) * kron(idc, kron(tw(n, d), Mat::identity(d))) *
              kron(c.comult, a.hopf.comult());
    check_equal(rep, "modcoalg.comult", c.comult * a.map, rhs, {n, d});
    check_equal(rep, "modcoalg.counit", c.counit * a.map, kron(c.counit, a.hopf.counit()),
                {n, d});
    return rep;
}

/// Right H-comodule algebra: ρ is an algebra map (multiplicative and unital)
/// and counital.
inline Report validate_comodule_algebra(const AlgebraData& a, const CoactionData& rho,
                                        const HopfData& h) {
    Report rep;
    if (rho.side != Side::right) {
        rep.add("comodalg.side", false, "expected a right coaction");
        return rep;
    }
    const std::size_t n = a.dim, d = h.dim();
    const Mat mult_ah =
        kron(a.mult, h.mult()) * kron(Mat::identity(n), kron(tw(d, n), Mat::identity(d)));
    check_equal(rep, "comodalg.multiplicative", rho.map * a.mult, mult_ah * kron(rho.map, rho.map),
                {n, n});
    check_equal(rep, "comodalg.unit", rho.map * a.unit, kron(a.unit, h.unit()), {1});
    check_equal(rep, "comodalg.counit", kron(Mat::identity(n), h.counit()) * rho.map,
                Mat::identity(n), {n});
    return rep;
}

/// Module + comodule over H with the anti-Yetter-Drinfeld compatibility and
/// stability. left_right: left module, right comodule (Eq.-style used for
/// extensions); right_left: right module, left comodule (coextensions).
struct SaydData {
    HopfData hopf;
    std::size_t space_dim = 0;
    ActionData action;
    CoactionData coaction;
    Chirality chirality = Chirality::right_left;
};

/// AYD + stability as exact matrix identities; witnesses on failure.
inline Report check_sayd(const SaydData& s) {
    Report rep;
    const std::size_t dm = s.space_dim, dh = s.hopf.dim();
    const Mat mult3 = iterated_product(s.hopf.algebra, 3);
    const Mat coprod3 = iterated_coproduct(s.hopf.coalgebra, 2);  // h -> h1⊗h2⊗h3

    if (s.chirality == Chirality::right_left) {
        // (m◁h)_{<-1>} ⊗ (m◁h)_{<0>} = S(h3) m_{<-1>} h1 ⊗ m_{<0>}◁h2
        Mat lhs = s.coaction.map * s.action.map;  // M⊗H -> H⊗M
        Mat rhs = mat_from_columns({dm, dh}, dh * dm, [&](const std::vector<std::size_t>& ix) {
            TensorVec v = TensorVec::basis({dm, dh}, ix);
            v = apply_block(v, 1, 1, coprod3, {dh, dh, dh});       // m,h1,h2,h3
            v = apply_block(v, 0, 1, s.coaction.map, {dh, dm});    // c,m0,h1,h2,h3
            v = apply_map(v, 4, s.hopf.antipode);                  // c,m0,h1,h2,S(h3)
            v = permute_legs(v, {4, 0, 2, 1, 3});                  // S(h3),c,h1,m0,h2
            v = apply_block(v, 0, 3, mult3, {dh});                 // S(h3)c h1, m0, h2
            v = apply_block(v, 1, 2, s.action.map, {dm});          // ..., m0◁h2
            return v;
        });
        check_equal(rep, "sayd.ayd", lhs, rhs, {dm, dh});

        // stability: m_{<0>} ◁ m_{<-1>} = m
        Mat stab = s.action.map * tw(dh, dm) * s.coaction.map;
        check_equal(rep, "sayd.stability", stab, Mat::identity(dm), {dm});
    } else {
        // (h▷m)_{<0>} ⊗ (h▷m)_{<1>} = h2 ▷ m_{<0>} ⊗ h3 m_{<1>} S(h1)
        Mat lhs = s.coaction.map * s.action.map;  // H⊗M -> M⊗H
        Mat rhs = mat_from_columns({dh, dm}, dm * dh, [&](const std::vector<std::size_t>& ix) {
            TensorVec v = TensorVec::basis({dh, dm}, ix);
            v = apply_block(v, 0, 1, coprod3, {dh, dh, dh});       // h1,h2,h3,m
            v = apply_block(v, 3, 1, s.coaction.map, {dm, dh});    // h1,h2,h3,m0,c
            v = apply_map(v, 0, s.hopf.antipode);                  // S(h1),...
            v = permute_legs(v, {1, 3, 2, 4, 0});                  // h2,m0,h3,c,S(h1)
            v = apply_block(v, 0, 2, s.action.map, {dm});          // h2▷m0, h3,c,S(h1)
            v = apply_block(v, 1, 3, mult3, {dh});                 // ..., h3 c S(h1)
            return v;
        });
        check_equal(rep, "sayd.ayd", lhs, rhs, {dh, dm});

        // stability: m_{<1>} ▷ m_{<0>} = m
        Mat stab = s.action.map * tw(dm, dh) * s.coaction.map;
        check_equal(rep, "sayd.stability", stab, Mat::identity(dm), {dm});
    }
    return rep;
}

/// Trivial right-left SAYD structure on k over any Hopf algebra.
inline SaydData trivial_sayd(const HopfData& h, Chirality chi = Chirality::right_left) {
    SaydData s;
    s.hopf = h;
    s.space_dim = 1;
    if (chi == Chirality::right_left) {
        s.action = {h, 1, Side::right, h.counit()};
        s.coaction = {h.coalgebra, 1, Side::left, h.unit()};
    } else {
        s.action = {h, 1, Side::left, h.counit()};
        s.coaction = {h.coalgebra, 1, Side::right, h.unit()};
    }
    s.chirality = chi;
    return s;
}

}  // namespace hopfgal
