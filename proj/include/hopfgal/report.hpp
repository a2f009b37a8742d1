#pragma once

#include <string>
#include <vector>

#include "hopfgal/matrix.hpp"

namespace hopfgal {

/// One named verification row. Mathematical failures are rows, not exceptions.
struct CheckRow {
    std::string name;
    bool pass = false;
    std::string witness;  // empty on pass
};

struct Report {
    std::vector<CheckRow> rows;

    bool ok() const {
        for (const auto& r : rows)
            if (!r.pass) return false;
        return true;
    }

    void add(std::string name, bool pass, std::string witness = "") {
        rows.push_back({std::move(name), pass, std::move(witness)});
    }

    void merge(const Report& o, const std::string& prefix = "") {
        for (const auto& r : o.rows) rows.push_back({prefix + r.name, r.pass, r.witness});
    }

    const CheckRow* find(const std::string& name) const {
        for (const auto& r : rows)
            if (r.name == name) return &r;
        return nullptr;
    }
};

/// Asserts lhs == rhs as a named report row; on mismatch the witness carries
/// the first differing column (decoded through domain dims when provided) and
/// both evaluated sides.
inline void check_equal(Report& rep, const std::string& name, const Mat& lhs, const Mat& rhs,
                        const std::vector<std::size_t>& domain_dims = {}) {
    if (lhs.rows != rhs.rows || lhs.cols != rhs.cols) {
        rep.add(name, false,
                "shape mismatch " + std::to_string(lhs.rows) + "x" + std::to_string(lhs.cols) +
                    " vs " + std::to_string(rhs.rows) + "x" + std::to_string(rhs.cols));
        return;
    }
    if (lhs == rhs) {
        rep.add(name, true);
        return;
    }
    for (std::size_t j = 0; j < lhs.cols; ++j) {
        if (lhs.col[j] == rhs.col[j]) continue;
        Mat l(lhs.rows, 1), r(rhs.rows, 1);
        l.col[0] = lhs.col[j];
        r.col[0] = rhs.col[j];
        std::string where = "input column " + std::to_string(j);
        if (!domain_dims.empty()) where += " = basis " + format_basis_index(j, domain_dims);
        if (!lhs.domain_labels.empty() && j < lhs.domain_labels.size())
            where += " (" + lhs.domain_labels[j] + ")";
        rep.add(name, false, where + ": lhs = " + l.to_string() + ", rhs = " + r.to_string());
        return;
    }
}

inline void check_true(Report& rep, const std::string& name, bool pass,
                       const std::string& witness = "") {
    rep.add(name, pass, pass ? "" : witness);
}

}  // namespace hopfgal
