#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "hopfgal/rational.hpp"

namespace hopfgal {

/// Sparse exact-rational matrix, column-major. A Mat is the matrix of a linear
/// map acting on column vectors; composition is operator order (this * rhs
/// applies rhs first). Zero entries are never stored.
///
/// Optional basis labels (domain = columns, codomain = rows) survive identity,
/// kron and composition; everything else drops them. They exist only to make
/// witnesses readable.
struct Mat {
    std::size_t rows = 0, cols = 0;
    std::vector<std::map<std::size_t, Rational>> col;  // col[j]: row -> value
    std::vector<std::string> domain_labels;    // size cols when present
    std::vector<std::string> codomain_labels;  // size rows when present

    Mat() = default;
    Mat(std::size_t r, std::size_t c) : rows(r), cols(c), col(c) {}

    static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.col[i][i] = 1;
        return m;
    }

    static Mat zero(std::size_t r, std::size_t c) { return Mat(r, c); }

    /// Column vector from dense entries.
    static Mat col_vec(const std::vector<Rational>& v) {
        Mat m(v.size(), 1);
        for (std::size_t i = 0; i < v.size(); ++i)
            if (v[i] != 0) m.col[0][i] = v[i];
        return m;
    }

    /// Row vector from dense entries.
    static Mat row_vec(const std::vector<Rational>& v) {
        Mat m(1, v.size());
        for (std::size_t j = 0; j < v.size(); ++j)
            if (v[j] != 0) m.col[j][0] = v[j];
        return m;
    }

    Rational at(std::size_t r, std::size_t c) const {
        auto it = col[c].find(r);
        return it == col[c].end() ? Rational(0) : it->second;
    }

    void set(std::size_t r, std::size_t c, const Rational& v) {
        if (v == 0)
            col[c].erase(r);
        else
            col[c][r] = v;
    }

    void add_to(std::size_t r, std::size_t c, const Rational& v) {
        if (v == 0) return;
        auto [it, inserted] = col[c].emplace(r, v);
        if (!inserted) {
            it->second += v;
            if (it->second == 0) col[c].erase(it);
        }
    }

    std::size_t nnz() const {
        std::size_t n = 0;
        for (const auto& c : col) n += c.size();
        return n;
    }

    double density() const {
        return rows * cols == 0 ? 0.0 : double(nnz()) / double(rows) / double(cols);
    }

    bool is_zero() const {
        for (const auto& c : col)
            if (!c.empty()) return false;
        return true;
    }

    bool operator==(const Mat& o) const {
        return rows == o.rows && cols == o.cols && col == o.col;
    }
    bool operator!=(const Mat& o) const { return !(*this == o); }

    Mat operator+(const Mat& o) const {
        Mat r = *this;
        r.domain_labels.clear();
        r.codomain_labels.clear();
        for (std::size_t j = 0; j < cols; ++j)
            for (const auto& [i, v] : o.col[j]) r.add_to(i, j, v);
        return r;
    }

    Mat operator-(const Mat& o) const {
        Mat r = *this;
        r.domain_labels.clear();
        r.codomain_labels.clear();
        for (std::size_t j = 0; j < cols; ++j)
            for (const auto& [i, v] : o.col[j]) r.add_to(i, j, -v);
        return r;
    }

    Mat operator*(const Rational& s) const {
        Mat r(rows, cols);
        if (s == 0) return r;
        for (std::size_t j = 0; j < cols; ++j)
            for (const auto& [i, v] : col[j]) r.col[j][i] = v * s;
        return r;
    }

    /// Composition: (*this) applied after rhs.
    Mat operator*(const Mat& rhs) const {
        Mat r(rows, rhs.cols);
        for (std::size_t j = 0; j < rhs.cols; ++j)
            for (const auto& [k, v] : rhs.col[j])
                for (const auto& [i, w] : col[k]) r.add_to(i, j, w * v);
        if (!codomain_labels.empty()) r.codomain_labels = codomain_labels;
        if (!rhs.domain_labels.empty()) r.domain_labels = rhs.domain_labels;
        return r;
    }

    Mat transpose() const {
        Mat r(cols, rows);
        for (std::size_t j = 0; j < cols; ++j)
            for (const auto& [i, v] : col[j]) r.col[i][j] = v;
        r.domain_labels = codomain_labels;
        r.codomain_labels = domain_labels;
        return r;
    }

    /// Sorted sparse triple list [row, col, value]; the canonical serialization.
    std::vector<std::tuple<std::size_t, std::size_t, Rational>> triples() const {
        std::vector<std::tuple<std::size_t, std::size_t, Rational>> t;
        for (std::size_t j = 0; j < cols; ++j)
            for (const auto& [i, v] : col[j]) t.emplace_back(i, j, v);
        std::sort(t.begin(), t.end(),
                  [](const auto& a, const auto& b) {
                      return std::tie(std::get<0>(a), std::get<1>(a)) <
                             std::tie(std::get<0>(b), std::get<1>(b));
                  });
        return t;
    }

    std::string to_string() const {
        std::string s = std::to_string(rows) + "x" + std::to_string(cols) + " [";
        bool first = true;
        for (const auto& [i, j, v] : triples()) {
            if (!first) s += ", ";
            first = false;
            s += "(" + std::to_string(i) + "," + std::to_string(j) + ")=" + rat_str(v);
        }
        return s + "]";
    }
};

/// Kronecker product, left factor most significant: (A⊗B)(v⊗w) = Av ⊗ Bw with
/// basis e_i⊗e_j at flat index i*dim_B + j.
inline Mat kron(const Mat& a, const Mat& b) {
    Mat r(a.rows * b.rows, a.cols * b.cols);
    for (std::size_t ja = 0; ja < a.cols; ++ja)
        for (const auto& [ia, va] : a.col[ja])
            for (std::size_t jb = 0; jb < b.cols; ++jb)
                for (const auto& [ib, vb] : b.col[jb])
                    r.col[ja * b.cols + jb][ia * b.rows + ib] = va * vb;
    if (!a.domain_labels.empty() && !b.domain_labels.empty()) {
        for (std::size_t ja = 0; ja < a.cols; ++ja)
            for (std::size_t jb = 0; jb < b.cols; ++jb)
                r.domain_labels.push_back(a.domain_labels[ja] + "⊗" + b.domain_labels[jb]);
    }
    if (!a.codomain_labels.empty() && !b.codomain_labels.empty()) {
        for (std::size_t ia = 0; ia < a.rows; ++ia)
            for (std::size_t ib = 0; ib < b.rows; ++ib)
                r.codomain_labels.push_back(a.codomain_labels[ia] + "⊗" + b.codomain_labels[ib]);
    }
    return r;
}

/// Side-by-side concatenation [a | b]; domains stack.
inline Mat hstack(const Mat& a, const Mat& b) {
    Mat r(a.rows, a.cols + b.cols);
    for (std::size_t j = 0; j < a.cols; ++j) r.col[j] = a.col[j];
    for (std::size_t j = 0; j < b.cols; ++j) r.col[a.cols + j] = b.col[j];
    return r;
}

/// Vertical concatenation [a; b]; codomains stack.
inline Mat vstack(const Mat& a, const Mat& b) {
    Mat r(a.rows + b.rows, a.cols);
    for (std::size_t j = 0; j < a.cols; ++j) {
        r.col[j] = a.col[j];
        for (const auto& [i, v] : b.col[j]) r.col[j][a.rows + i] = v;
    }
    return r;
}

inline std::size_t dims_product(const std::vector<std::size_t>& dims) {
    std::size_t p = 1;
    for (auto d : dims) p *= d;
    return p;
}

inline std::size_t flatten_index(const std::vector<std::size_t>& dims,
                                 const std::vector<std::size_t>& multi) {
    std::size_t f = 0;
    for (std::size_t k = 0; k < dims.size(); ++k) f = f * dims[k] + multi[k];
    return f;
}

inline std::vector<std::size_t> unflatten_index(const std::vector<std::size_t>& dims,
                                                std::size_t flat) {
    std::vector<std::size_t> multi(dims.size());
    for (std::size_t k = dims.size(); k-- > 0;) {
        multi[k] = flat % dims[k];
        flat /= dims[k];
    }
    return multi;
}

/// Permutation matrix reordering tensor legs: output position k carries input
/// leg perm[k]. Only for modest total dimensions; big spaces go through
/// TensorVec evaluation instead.
inline Mat leg_permutation(const std::vector<std::size_t>& dims,
                           const std::vector<std::size_t>& perm) {
    const std::size_t total = dims_product(dims);
    std::vector<std::size_t> out_dims(perm.size());
    for (std::size_t k = 0; k < perm.size(); ++k) out_dims[k] = dims[perm[k]];
    Mat r(total, total);
    std::vector<std::size_t> out_multi(perm.size());
    for (std::size_t f = 0; f < total; ++f) {
        auto multi = unflatten_index(dims, f);
        for (std::size_t k = 0; k < perm.size(); ++k) out_multi[k] = multi[perm[k]];
        r.col[f][flatten_index(out_dims, out_multi)] = 1;
    }
    return r;
}

/// Swap map tw : V⊗W -> W⊗V.
inline Mat tw(std::size_t dim_v, std::size_t dim_w) {
    return leg_permutation({dim_v, dim_w}, {1, 0});
}

inline std::string format_basis_index(std::size_t flat, const std::vector<std::size_t>& dims) {
    auto multi = unflatten_index(dims, flat);
    std::string s = "(";
    for (std::size_t k = 0; k < multi.size(); ++k) {
        if (k) s += ",";
        s += std::to_string(multi[k]);
    }
    return s + ")";
}

}  // namespace hopfgal
