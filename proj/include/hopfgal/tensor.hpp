#pragma once

#include <cassert>
#include <functional>
#include <map>
#include <vector>

#include "hopfgal/matrix.hpp"

namespace hopfgal {

/// Sparse element of a tensor product of based spaces, kept as explicit
/// multi-indexed terms. Structure maps on big tensor powers (cofaces, cyclic
/// operators, the phi/psi chains) are assembled column by column through these
/// ops, so intermediate spaces of dimension 10^6+ never materialize as
/// matrices.
struct TensorVec {
    std::vector<std::size_t> dims;
    std::map<std::vector<std::size_t>, Rational> terms;

    static TensorVec basis(const std::vector<std::size_t>& dims,
                           const std::vector<std::size_t>& multi) {
        TensorVec v;
        v.dims = dims;
        v.terms[multi] = 1;
        return v;
    }

    void add_term(const std::vector<std::size_t>& multi, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms.emplace(multi, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms.erase(it);
        }
    }
};

/// Applies a block map to `nin` consecutive legs starting at `leg`, replacing
/// them by legs of dimensions `out_dims`. `f` must be prod(out_dims) x
/// prod(in-leg dims); nin = 0 inserts fresh legs at `leg` (f has one column),
/// out_dims = {} contracts to a scalar folded into the coefficient.
inline TensorVec apply_block(const TensorVec& v, std::size_t leg, std::size_t nin,
                             const Mat& f, const std::vector<std::size_t>& out_dims) {
    std::vector<std::size_t> in_dims(v.dims.begin() + leg, v.dims.begin() + leg + nin);
    assert(f.cols == dims_product(in_dims));
    assert(f.rows == dims_product(out_dims));

    TensorVec r;
    r.dims.assign(v.dims.begin(), v.dims.begin() + leg);
    r.dims.insert(r.dims.end(), out_dims.begin(), out_dims.end());
    r.dims.insert(r.dims.end(), v.dims.begin() + leg + nin, v.dims.end());

    std::vector<std::size_t> multi_out;
    for (const auto& [multi, c] : v.terms) {
        std::vector<std::size_t> sub(multi.begin() + leg, multi.begin() + leg + nin);
        const std::size_t in_flat = flatten_index(in_dims, sub);
        for (const auto& [row, w] : f.col[in_flat]) {
            auto out_multi = unflatten_index(out_dims, row);
            multi_out.assign(multi.begin(), multi.begin() + leg);
            multi_out.insert(multi_out.end(), out_multi.begin(), out_multi.end());
            multi_out.insert(multi_out.end(), multi.begin() + leg + nin, multi.end());
            r.add_term(multi_out, c * w);
        }
    }
    return r;
}

/// One-leg matrix application (square or rectangular, single output leg).
inline TensorVec apply_map(const TensorVec& v, std::size_t leg, const Mat& f) {
    return apply_block(v, leg, 1, f, {f.rows});
}

/// Two adjacent legs fused through f into one output leg (mult, action...).
inline TensorVec apply_fuse2(const TensorVec& v, std::size_t leg, const Mat& f) {
    return apply_block(v, leg, 2, f, {f.rows});
}

/// One leg expanded through f into two output legs of dims (d1, d2)
/// (comult, coaction...).
inline TensorVec apply_expand2(const TensorVec& v, std::size_t leg, const Mat& f,
                               std::size_t d1, std::size_t d2) {
    return apply_block(v, leg, 1, f, {d1, d2});
}

/// Contracts one leg by a functional (1 x d matrix), e.g. a counit.
inline TensorVec apply_scalar(const TensorVec& v, std::size_t leg, const Mat& f) {
    return apply_block(v, leg, 1, f, {});
}

/// Inserts a fresh leg at position `leg` with value the column vector u.
inline TensorVec insert_leg(const TensorVec& v, std::size_t leg, const Mat& u) {
    return apply_block(v, leg, 0, u, {u.rows});
}

/// Reorders legs: output position k carries input leg perm[k].
inline TensorVec permute_legs(const TensorVec& v, const std::vector<std::size_t>& perm) {
    TensorVec r;
    r.dims.resize(perm.size());
    for (std::size_t k = 0; k < perm.size(); ++k) r.dims[k] = v.dims[perm[k]];
    std::vector<std::size_t> multi_out(perm.size());
    for (const auto& [multi, c] : v.terms) {
        for (std::size_t k = 0; k < perm.size(); ++k) multi_out[k] = multi[perm[k]];
        r.add_term(multi_out, c);
    }
    return r;
}

/// Flattens into a sparse column vector over the product space.
inline Mat to_column(const TensorVec& v) {
    Mat m(dims_product(v.dims), 1);
    for (const auto& [multi, c] : v.terms) m.col[0][flatten_index(v.dims, multi)] = c;
    return m;
}

/// Assembles the matrix of a map defined column-wise on a tensor power basis.
inline Mat mat_from_columns(const std::vector<std::size_t>& domain_dims,
                            std::size_t codomain_dim,
                            const std::function<TensorVec(const std::vector<std::size_t>&)>& fn) {
    const std::size_t n = dims_product(domain_dims);
    Mat m(codomain_dim, n);
    for (std::size_t j = 0; j < n; ++j) {
        auto multi = unflatten_index(domain_dims, j);
        TensorVec out = fn(multi);
        assert(dims_product(out.dims) == codomain_dim);
        for (const auto& [om, c] : out.terms)
            m.col[j][flatten_index(out.dims, om)] = c;
    }
    return m;
}

}  // namespace hopfgal
