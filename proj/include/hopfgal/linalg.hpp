#pragma once

#include <optional>
#include <set>
#include <vector>

#include "hopfgal/errors.hpp"
#include "hopfgal/matrix.hpp"

namespace hopfgal {

struct RrefResult {
    Mat rref;
    std::vector<std::size_t> pivot_cols;  // ascending
    std::size_t rank = 0;
};

namespace detail {

// Dense Gauss-Jordan. Result is the unique RREF, so pivot strategy only
// affects speed.
inline RrefResult rref_dense(const Mat& m) {
    std::vector<std::vector<Rational>> a(m.rows, std::vector<Rational>(m.cols, Rational(0)));
    for (std::size_t j = 0; j < m.cols; ++j)
        for (const auto& [i, v] : m.col[j]) a[i][j] = v;

    RrefResult res;
    std::size_t pr = 0;  // next pivot row
    for (std::size_t c = 0; c < m.cols && pr < m.rows; ++c) {
        std::size_t sel = pr;
        while (sel < m.rows && a[sel][c] == 0) ++sel;
        if (sel == m.rows) continue;
        std::swap(a[pr], a[sel]);
        const Rational inv = 1 / a[pr][c];
        for (std::size_t j = c; j < m.cols; ++j) a[pr][j] *= inv;
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (i == pr || a[i][c] == 0) continue;
            const Rational f = a[i][c];
            for (std::size_t j = c; j < m.cols; ++j) a[i][j] -= f * a[pr][j];
        }
        res.pivot_cols.push_back(c);
        ++pr;
    }
    res.rank = res.pivot_cols.size();
    res.rref = Mat(m.rows, m.cols);
    for (std::size_t i = 0; i < res.rank; ++i)
        for (std::size_t j = 0; j < m.cols; ++j)
            if (a[i][j] != 0) res.rref.col[j][i] = a[i][j];
    return res;
}

// Sparse row-list elimination with a column-occupancy index; rows ordered by
// pivot column in the output.
inline RrefResult rref_sparse(const Mat& m) {
    using Row = std::map<std::size_t, Rational>;
    std::vector<Row> rows(m.rows);
    std::vector<std::set<std::size_t>> occ(m.cols);  // col -> rows with nonzero
    for (std::size_t j = 0; j < m.cols; ++j)
        for (const auto& [i, v] : m.col[j]) {
            rows[i][j] = v;
            occ[j].insert(i);
        }

    auto row_axpy = [&](std::size_t dst, Rational f, const Row& src) {
        // rows[dst] -= f * src; f taken by value, it may alias an entry of dst
        Row& d = rows[dst];
        for (const auto& [j, v] : src) {
            auto [it, inserted] = d.emplace(j, -f * v);
            if (inserted) {
                occ[j].insert(dst);
            } else {
                it->second -= f * v;
                if (it->second == 0) {
                    d.erase(it);
                    occ[j].erase(dst);
                }
            }
        }
    };

    std::vector<bool> is_pivot_row(m.rows, false);
    RrefResult res;
    std::vector<std::size_t> pivot_row_of;  // parallel to pivot_cols
    for (std::size_t c = 0; c < m.cols; ++c) {
        // candidate: non-pivot row with nonzero at c, fewest entries
        std::size_t best = m.rows;
        for (std::size_t i : occ[c]) {
            if (is_pivot_row[i]) continue;
            if (best == m.rows || rows[i].size() < rows[best].size()) best = i;
        }
        if (best == m.rows) continue;
        Row& p = rows[best];
        const Rational inv = 1 / p.at(c);
        if (inv != 1)
            for (auto& [j, v] : p) v *= inv;
        // eliminate c everywhere else
        std::vector<std::size_t> targets(occ[c].begin(), occ[c].end());
        for (std::size_t i : targets) {
            if (i == best) continue;
            row_axpy(i, rows[i].at(c), p);
        }
        is_pivot_row[best] = true;
        res.pivot_cols.push_back(c);
        pivot_row_of.push_back(best);
    }
    res.rank = res.pivot_cols.size();
    res.rref = Mat(m.rows, m.cols);
    for (std::size_t k = 0; k < res.rank; ++k)
        for (const auto& [j, v] : rows[pivot_row_of[k]]) res.rref.col[j][k] = v;
    return res;
}

}  // namespace detail

/// Reduced row echelon form; unique, with pivot rows packed on top in pivot
/// column order. Dense path for small or dense inputs, sparse otherwise.
inline RrefResult rref(const Mat& m) {
    if (m.rows * m.cols <= 4096 || m.density() > 0.25) return detail::rref_dense(m);
    return detail::rref_sparse(m);
}

inline std::size_t rank(const Mat& m) { return rref(m).rank; }

/// A linear subspace of k^ambient_dim. The inclusion's columns are the
/// canonical basis: reduced column echelon form, pivots at the smallest
/// possible row indices, so equal subspaces compare as equal matrices.
struct Subspace {
    std::size_t ambient_dim = 0;
    Mat inclusion;  // ambient_dim x dim

    std::size_t dim() const { return inclusion.cols; }

    static Subspace zero(std::size_t ambient) {
        Subspace s;
        s.ambient_dim = ambient;
        s.inclusion = Mat(ambient, 0);
        return s;
    }

    static Subspace full(std::size_t ambient) {
        Subspace s;
        s.ambient_dim = ambient;
        s.inclusion = Mat::identity(ambient);
        return s;
    }

    bool operator==(const Subspace& o) const {
        return ambient_dim == o.ambient_dim && inclusion == o.inclusion;
    }

    /// Pivot row of each basis column (first nonzero, value 1).
    std::vector<std::size_t> pivot_rows() const {
        std::vector<std::size_t> p;
        for (std::size_t j = 0; j < inclusion.cols; ++j) p.push_back(inclusion.col[j].begin()->first);
        return p;
    }
};

/// Canonicalizes the span of the given columns into a Subspace
/// (reduced column echelon = transposed RREF of the transpose).
inline Subspace subspace_from_columns(std::size_t ambient_dim, const Mat& columns) {
    auto r = rref(columns.transpose());
    Subspace s;
    s.ambient_dim = ambient_dim;
    s.inclusion = Mat(ambient_dim, r.rank);
    for (std::size_t j = 0; j < columns.rows; ++j)
        for (const auto& [i, v] : r.rref.col[j])
            s.inclusion.col[i][j] = v;  // row i of rref -> column i of basis
    return s;
}

struct Decomposition {
    Mat rref;
    Subspace kernel;
    Subspace image;
    std::size_t rank = 0;
};

/// Kernel and image with canonical bases, plus RREF and rank.
/// rank + dim(kernel) == cols holds exactly.
inline Decomposition decompose(const Mat& m) {
    auto r = rref(m);
    Decomposition d;
    d.rank = r.rank;
    d.rref = r.rref;
    d.image = subspace_from_columns(m.rows, m);

    // kernel basis from the free columns of the RREF
    std::vector<bool> is_pivot(m.cols, false);
    for (auto c : r.pivot_cols) is_pivot[c] = true;
    Mat k(m.cols, m.cols - r.rank);
    std::size_t out = 0;
    for (std::size_t f = 0; f < m.cols; ++f) {
        if (is_pivot[f]) continue;
        k.col[out][f] = 1;
        for (std::size_t p = 0; p < r.rank; ++p) {
            const Rational v = r.rref.at(p, f);
            if (v != 0) k.col[out][r.pivot_cols[p]] = -v;
        }
        ++out;
    }
    d.kernel = subspace_from_columns(m.cols, k);
    return d;
}

inline Subspace kernel_of(const Mat& m) { return decompose(m).kernel; }
inline Subspace image_of(const Mat& m) { return subspace_from_columns(m.rows, m); }

/// Exact inverse; throws SingularMatrix when m is not square or not of full
/// rank (the Galois / antipode bijectivity failures funnel through here).
inline Mat invert(const Mat& m) {
    if (m.rows != m.cols)
        throw SingularMatrix("invert: matrix is " + std::to_string(m.rows) + "x" +
                             std::to_string(m.cols));
    auto r = rref(hstack(m, Mat::identity(m.rows)));
    const bool full = r.rank >= m.rows && (m.rows == 0 || r.pivot_cols[m.rows - 1] < m.cols);
    if (!full)
        throw SingularMatrix("invert: matrix of size " + std::to_string(m.rows) +
                             " has rank below " + std::to_string(m.rows));
    Mat inv(m.rows, m.rows);
    for (std::size_t j = 0; j < m.rows; ++j)
        for (const auto& [i, v] : r.rref.col[m.cols + j]) inv.col[j][i] = v;
    return inv;
}

/// Solves inclusion * X = cols for a canonical subspace inclusion; X is read
/// off the pivot rows and verified. Nullopt (with witness column index) when
/// some column is outside the subspace.
inline std::optional<Mat> coords_in(const Subspace& s, const Mat& cols,
                                    std::size_t* bad_col = nullptr) {
    auto piv = s.pivot_rows();
    Mat x(s.dim(), cols.cols);
    for (std::size_t j = 0; j < cols.cols; ++j)
        for (std::size_t k = 0; k < piv.size(); ++k) {
            const Rational v = cols.at(piv[k], j);
            if (v != 0) x.col[j][k] = v;
        }
    if (!(s.inclusion * x == cols)) {
        if (bad_col) {
            Mat resid = s.inclusion * x - cols;
            for (std::size_t j = 0; j < resid.cols; ++j)
                if (!resid.col[j].empty()) {
                    *bad_col = j;
                    break;
                }
        }
        return std::nullopt;
    }
    return x;
}

inline bool subspace_contains(const Subspace& s, const Mat& cols) {
    return coords_in(s, cols).has_value();
}

inline Subspace subspace_sum(const Subspace& a, const Subspace& b) {
    return subspace_from_columns(a.ambient_dim, hstack(a.inclusion, b.inclusion));
}

/// Tensor product of subspaces. Kron of reduced column echelon inclusions is
/// again reduced column echelon with ascending pivots, so this stays canonical.
inline Subspace subspace_kron(const Subspace& a, const Subspace& b) {
    Subspace s;
    s.ambient_dim = a.ambient_dim * b.ambient_dim;
    s.inclusion = kron(a.inclusion, b.inclusion);
    return s;
}

/// Intersection via the kernel of [A | -B].
inline Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
    if (a.dim() == 0 || b.dim() == 0) return Subspace::zero(a.ambient_dim);
    auto k = kernel_of(hstack(a.inclusion, b.inclusion * Rational(-1)));
    Mat part(a.dim(), k.dim());
    for (std::size_t j = 0; j < k.dim(); ++j)
        for (const auto& [i, v] : k.inclusion.col[j])
            if (i < a.dim()) part.col[j][i] = v;
    return subspace_from_columns(a.ambient_dim, a.inclusion * part);
}

/// Computable quotient k^ambient / W with a deterministic section: the
/// complement spanned by the non-pivot coordinates of W.
struct QuotientData {
    std::size_t ambient_dim = 0;
    Subspace kernel;
    Mat projection;  // dim x ambient
    Mat section;     // ambient x dim

    std::size_t dim() const { return projection.rows; }
};

inline QuotientData quotient(std::size_t ambient_dim, const Subspace& w) {
    QuotientData q;
    q.ambient_dim = ambient_dim;
    q.kernel = w;
    auto piv = w.pivot_rows();
    std::vector<bool> is_piv(ambient_dim, false);
    for (auto r : piv) is_piv[r] = true;
    std::vector<std::size_t> free_rows;
    for (std::size_t r = 0; r < ambient_dim; ++r)
        if (!is_piv[r]) free_rows.push_back(r);

    q.section = Mat(ambient_dim, free_rows.size());
    q.projection = Mat(free_rows.size(), ambient_dim);
    for (std::size_t k = 0; k < free_rows.size(); ++k) {
        q.section.col[k][free_rows[k]] = 1;
        q.projection.col[free_rows[k]][k] = 1;
        for (std::size_t i = 0; i < piv.size(); ++i) {
            const Rational v = w.inclusion.at(free_rows[k], i);
            if (v != 0) q.projection.col[piv[i]][k] = -v;
        }
    }
    return q;
}

namespace detail {
inline std::string escape_witness(const Mat& column, std::size_t index) {
    return "basis vector " + std::to_string(index) + " -> " + column.to_string();
}
}  // namespace detail

/// The unique map making the square commute when M carries dom into cod.
/// dom is a subspace of M's domain ambient; cod a subspace of its codomain.
/// Throws NotWellDefined with a witness when the image escapes cod.
inline Mat restrict_corestrict(const Mat& m, const Subspace& dom, const Subspace& cod) {
    Mat img = m * dom.inclusion;
    std::size_t bad = 0;
    auto x = coords_in(cod, img, &bad);
    if (!x) {
        Mat c(img.rows, 1);
        c.col[0] = img.col[bad];
        throw NotWellDefined("map does not corestrict to the target subspace",
                             detail::escape_witness(c, bad));
    }
    return *x;
}

/// Restriction with quotient codomain: projection ∘ M ∘ inclusion.
inline Mat restrict_to_quotient(const Mat& m, const Subspace& dom, const QuotientData& cod) {
    return cod.projection * m * dom.inclusion;
}

/// Induced map on quotients: checks M carries dom's kernel into cod's kernel
/// (otherwise the descended matrix would depend on the section).
inline Mat descend(const Mat& m, const QuotientData& dom, const QuotientData& cod) {
    Mat on_kernel = cod.projection * m * dom.kernel.inclusion;
    if (!on_kernel.is_zero()) {
        std::size_t bad = 0;
        for (std::size_t j = 0; j < on_kernel.cols; ++j)
            if (!on_kernel.col[j].empty()) {
                bad = j;
                break;
            }
        Mat c(on_kernel.rows, 1);
        c.col[0] = on_kernel.col[bad];
        throw NotWellDefined("map does not descend to the quotient",
                             detail::escape_witness(c, bad));
    }
    return cod.projection * m * dom.section;
}

/// Descended map from a quotient into a plain space.
inline Mat descend_to_plain(const Mat& m, const QuotientData& dom) {
    Mat on_kernel = m * dom.kernel.inclusion;
    if (!on_kernel.is_zero()) {
        std::size_t bad = 0;
        for (std::size_t j = 0; j < on_kernel.cols; ++j)
            if (!on_kernel.col[j].empty()) {
                bad = j;
                break;
            }
        Mat c(on_kernel.rows, 1);
        c.col[0] = on_kernel.col[bad];
        throw NotWellDefined("map does not descend to the quotient",
                             detail::escape_witness(c, bad));
    }
    return m * dom.section;
}

}  // namespace hopfgal
