#pragma once

// Coordinates for symmetric tensors / quadratic forms in k variables.
// A SymVec is a length k(k+1)/2 vector indexed by pairs i <= j in
// lexicographic order: (0,0),(0,1),...,(0,k-1),(1,1),...,(k-1,k-1).
// The same coordinates serve quadratic forms sum q_ij x_i x_j and
// symmetric bilinear tensors, paired by the plain dot product
// <Q,S> = sum_{i<=j} q_ij s_ij, under which <Q, l^x2> = Q(l).

#include <cstdint>
#include <vector>

#include "quadhull/linalg.hpp"

namespace qh {

struct SymIndex {
    size_t k = 0;
    std::vector<std::pair<size_t, size_t>> pairs;  // (i,j) with i <= j

    explicit SymIndex(size_t k_in) : k(k_in) {
        pairs.reserve(k * (k + 1) / 2);
        for (size_t i = 0; i < k; ++i)
            for (size_t j = i; j < k; ++j) pairs.emplace_back(i, j);
    }
    size_t dim() const { return pairs.size(); }
    size_t index(size_t i, size_t j) const {
        if (i > j) std::swap(i, j);
        return i * k - i * (i - 1) / 2 + (j - i);
    }
};

inline size_t sym_dim(size_t k) { return k * (k + 1) / 2; }

// l^x2 coordinates (l_i l_j)_{i<=j} for a linear form l.
inline Vec elementary_tensor(const Fq& f, const SymIndex& sx, const Vec& l) {
    Vec t(sx.dim());
    for (size_t idx = 0; idx < sx.dim(); ++idx) {
        auto [i, j] = sx.pairs[idx];
        t[idx] = f.mul(l[i], l[j]);
    }
    return t;
}

// Q(x) for a point with field coordinates.
inline FqElem sym_eval(const Fq& f, const SymIndex& sx, const Vec& form, const Vec& x) {
    FqElem acc = f.zero();
    for (size_t idx = 0; idx < sx.dim(); ++idx) {
        auto [i, j] = sx.pairs[idx];
        acc = f.add(acc, f.mul(form[idx], f.mul(x[i], x[j])));
    }
    return acc;
}

inline FqElem sym_pair(const Fq& f, const SymIndex& sx, const Vec& form, const Vec& tensor) {
    FqElem acc = f.zero();
    for (size_t idx = 0; idx < sx.dim(); ++idx)
        acc = f.add(acc, f.mul(form[idx], tensor[idx]));
    return acc;
}

// Coordinates of q(Ux) where U is k x k (rows give the substituted linear
// forms of the new variables). Expansion on monomials, valid in any
// characteristic.
inline Vec sym_substitute(const Fq& f, const SymIndex& sx, const Vec& form, const Mat& u) {
    Vec out(sx.dim(), f.zero());
    for (size_t idx = 0; idx < sx.dim(); ++idx) {
        FqElem q = form[idx];
        if (q == f.zero()) continue;
        auto [i, j] = sx.pairs[idx];
        for (size_t a = 0; a < sx.k; ++a)
            for (size_t b = 0; b < sx.k; ++b) {
                FqElem c = f.mul(q, f.mul(u.at(i, a), u.at(j, b)));
                out[sx.index(a, b)] = f.add(out[sx.index(a, b)], c);
            }
    }
    return out;
}

}  // namespace qh
