#pragma once

#include <string>
#include <vector>

#include "hopfgal/hopf.hpp"
#include "hopfgal/rep_structures.hpp"

namespace hopfgal {
namespace zoo {

using MultTable = std::vector<std::vector<std::size_t>>;

/// Group algebra from a multiplication table (table[i][j] = index of g_i g_j).
/// Checks the group axioms; the basis is group-like and the antipode is the
/// inversion permutation.
inline HopfData group_algebra_from_table(const MultTable& table,
                                         std::vector<std::string> names = {}) {
    const std::size_t n = table.size();
    for (const auto& row : table)
        if (row.size() != n) throw NotAGroup("multiplication table is not square");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (table[i][j] >= n) throw NotAGroup("table entry out of range");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (table[table[i][j]][k] != table[i][table[j][k]])
                    throw NotAGroup("associativity fails at triple (" + std::to_string(i) + "," +
                                    std::to_string(j) + "," + std::to_string(k) + ")");
    std::size_t e = n;
    for (std::size_t c = 0; c < n && e == n; ++c) {
        bool id = true;
        for (std::size_t i = 0; i < n; ++i)
            if (table[c][i] != i || table[i][c] != i) {
                id = false;
                break;
            }
        if (id) e = c;
    }
    if (e == n) throw NotAGroup("no identity element");
    std::vector<std::size_t> inv(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            if (table[i][j] == e && table[j][i] == e) {
                inv[i] = j;
                break;
            }
        if (inv[i] == n) throw NotAGroup("element " + std::to_string(i) + " has no inverse");
    }

    if (names.empty())
        for (std::size_t i = 0; i < n; ++i) names.push_back("g" + std::to_string(i));

    HopfData h;
    h.algebra.dim = h.coalgebra.dim = n;
    h.algebra.basis = h.coalgebra.basis = names;
    h.algebra.mult = Mat(n, n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) h.algebra.mult.col[i * n + j][table[i][j]] = 1;
    h.algebra.unit = Mat(n, 1);
    h.algebra.unit.col[0][e] = 1;
    h.coalgebra.comult = Mat(n * n, n);
    for (std::size_t i = 0; i < n; ++i) h.coalgebra.comult.col[i][i * n + i] = 1;
    h.coalgebra.counit = Mat(1, n);
    for (std::size_t i = 0; i < n; ++i) h.coalgebra.counit.col[i][0] = 1;
    h.antipode = Mat(n, n);
    for (std::size_t i = 0; i < n; ++i) h.antipode.col[i][inv[i]] = 1;
    return h;
}

/// kC_n, the cyclic group algebra; n = 1 is the trivial Hopf algebra k.
inline HopfData cyclic_group_algebra(std::size_t n) {
    MultTable t(n, std::vector<std::size_t>(n));
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) t[i][j] = (i + j) % n;
        names.push_back(i == 0 ? "1" : (i == 1 ? "g" : "g^" + std::to_string(i)));
    }
    return group_algebra_from_table(t, names);
}

/// Multiplication table of S_3 under permutation composition; element order:
/// e, (12), (13), (23), (123), (132).
inline MultTable s3_table() {
    // permutations as images of {0,1,2}
    const std::vector<std::vector<std::size_t>> perms = {
        {0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
    auto compose = [&](std::size_t a, std::size_t b) {
        std::vector<std::size_t> c(3);
        for (std::size_t x = 0; x < 3; ++x) c[x] = perms[a][perms[b][x]];
        for (std::size_t k = 0; k < perms.size(); ++k)
            if (perms[k] == c) return k;
        return perms.size();
    };
    MultTable t(6, std::vector<std::size_t>(6));
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j) t[i][j] = compose(i, j);
    return t;
}

inline HopfData symmetric_group_algebra_s3() {
    return group_algebra_from_table(s3_table(), {"e", "(12)", "(13)", "(23)", "(123)", "(132)"});
}

/// Sweedler's 4-dimensional Hopf algebra, basis {1, g, x, gx}:
/// g^2 = 1, x^2 = 0, xg = -gx, Δ(g) = g⊗g, Δ(x) = x⊗1 + g⊗x,
/// S(g) = g, S(x) = -gx. S^2 ≠ id, which exercises every antipode-order
/// subtlety in the Lemma 3.5 suite.
inline HopfData sweedler_h4() {
    const std::size_t n = 4;
    enum { one = 0, g = 1, x = 2, gx = 3 };
    HopfData h;
    h.algebra.dim = h.coalgebra.dim = n;
    h.algebra.basis = h.coalgebra.basis = {"1", "g", "x", "gx"};

    h.algebra.mult = Mat(n, n * n);
    auto set_prod = [&](std::size_t i, std::size_t j, std::size_t k, long c) {
        if (c != 0) h.algebra.mult.col[i * n + j][k] = rat(c);
    };
    // products against 1
    for (std::size_t i = 0; i < n; ++i) {
        set_prod(one, i, i, 1);
        if (i != one) set_prod(i, one, i, 1);
    }
    set_prod(g, g, one, 1);
    set_prod(g, x, gx, 1);
    set_prod(g, gx, x, 1);
    set_prod(x, g, gx, -1);
    // x*x = 0, x*gx = 0
    set_prod(gx, g, x, -1);
    // gx*x = 0, gx*gx = 0

    h.algebra.unit = Mat(n, 1);
    h.algebra.unit.col[0][one] = 1;

    h.coalgebra.comult = Mat(n * n, n);
    auto set_co = [&](std::size_t i, std::size_t a, std::size_t b, long c) {
        h.coalgebra.comult.col[i][a * n + b] = rat(c);
    };
    set_co(one, one, one, 1);
    set_co(g, g, g, 1);
    set_co(x, x, one, 1);
    set_co(x, g, x, 1);
    set_co(gx, gx, g, 1);
    set_co(gx, one, gx, 1);

    h.coalgebra.counit = Mat(1, n);
    h.coalgebra.counit.col[one][0] = 1;
    h.coalgebra.counit.col[g][0] = 1;

    h.antipode = Mat(n, n);
    h.antipode.col[one][one] = 1;
    h.antipode.col[g][g] = 1;
    h.antipode.col[x][gx] = rat(-1);
    h.antipode.col[gx][x] = 1;
    return h;
}


/// Canonical coextension input: C = H as a right module coalgebra over itself
/// by multiplication. Then D ≅ k; this is the dual of Example-2.2-style data.
struct CoextInput {
    HopfData hopf;
    CoalgebraData coalg;
    ActionData action;
};

inline CoextInput self_coextension(const HopfData& h) {
    return {h, h.coalgebra, ActionData{h, h.dim(), Side::right, h.mult()}};
}

/// Non-Galois regression input: trivial action c◁h = ε(h)c. The cotensor
/// square collapses to (a copy of) C, so beta cannot be bijective once
/// dim H > 1.
inline CoextInput trivial_action_coextension(const HopfData& h) {
    return {h, h.coalgebra,
            ActionData{h, h.dim(), Side::right, kron(Mat::identity(h.dim()), h.counit())}};
}

/// Nontrivial-D regression fixture: C = Sweedler H4 as a right module
/// coalgebra over its Hopf subalgebra kC2 = span{1,g} by multiplication.
/// I = span{g-1, x+gx}, so dim D = 2 and dim W = 1.
inline CoextInput h4_over_kc2_coextension() {
    HopfData h4 = sweedler_h4();
    HopfData c2 = cyclic_group_algebra(2);
    Mat incl(4, 2);
    incl.col[0][0] = 1;  // 1 -> 1
    incl.col[1][1] = 1;  // g -> g
    Mat act = h4.mult() * kron(Mat::identity(4), incl);  // C⊗kC2 -> C
    return {c2, h4.coalgebra, ActionData{c2, 4, Side::right, act}};
}

/// Canonical extension input: A = H as a right comodule algebra over itself
/// by comultiplication (Example-2.2 data). Then B = k·1.
struct ExtInput {
    HopfData hopf;
    AlgebraData algebra;
    CoactionData rho;
};

inline ExtInput self_extension(const HopfData& h) {
    return {h, h.algebra, CoactionData{h.coalgebra, h.dim(), Side::right, h.comult()}};
}

/// Non-Galois regression input: trivial coaction a -> a⊗1.
inline ExtInput trivial_coaction_extension(const HopfData& h) {
    return {h, h.algebra,
            CoactionData{h.coalgebra, h.dim(), Side::right,
                         kron(Mat::identity(h.dim()), h.unit())}};
}

}  // namespace zoo
}  // namespace hopfgal
