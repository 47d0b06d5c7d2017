#pragma once

#include <random>

#include "quadhull/quadhull.hpp"

namespace qhtest {

using namespace qh;

inline Mat random_matrix(std::mt19937& rng, const Fq& f, size_t rows, size_t cols) {
    Mat m(f, rows, cols);
    std::uniform_int_distribution<uint32_t> dist(0, f.q() - 1);
    for (auto& e : m.a) e = FqElem{dist(rng)};
    return m;
}

inline Vec random_vec(std::mt19937& rng, const Fq& f, size_t n) {
    Vec v(n);
    std::uniform_int_distribution<uint32_t> dist(0, f.q() - 1);
    for (auto& e : v) e = FqElem{dist(rng)};
    return v;
}

inline Mat random_invertible(std::mt19937& rng, const Fq& f, size_t n) {
    while (true) {
        Mat m = random_matrix(rng, f, n, n);
        if (rank(m) == n) return m;
    }
}

// Naive polynomial multiply-then-divide oracle for field arithmetic,
// independent of the log/exp table path.
inline std::vector<uint8_t> polymul_mod_oracle(const std::vector<uint8_t>& a,
                                               const std::vector<uint8_t>& b,
                                               const std::vector<uint8_t>& mod, uint32_t p) {
    std::vector<uint32_t> prod(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    size_t dm = mod.size() - 1;
    for (size_t top = prod.size(); top-- > dm;) {
        uint32_t lead = prod[top];
        if (!lead) continue;
        for (size_t i = 0; i <= dm; ++i) {
            size_t pos = top - dm + i;
            prod[pos] = (prod[pos] + p * p - lead * mod[i] % p) % p;
        }
    }
    std::vector<uint8_t> out(dm, 0);
    for (size_t i = 0; i < dm && i < prod.size(); ++i) out[i] = static_cast<uint8_t>(prod[i]);
    return out;
}

// Bilinear evaluation of a SymVec tensor: the matrix with the stored
// upper triangle (and its mirror) applied to (x, y).
inline FqElem symvec_bilinear(const Fq& f, const SymIndex& sx, const Vec& s, const Vec& x,
                              const Vec& y) {
    FqElem acc = f.zero();
    for (size_t idx = 0; idx < sx.dim(); ++idx) {
        auto [i, j] = sx.pairs[idx];
        FqElem term = f.mul(s[idx], f.mul(x[i], y[j]));
        if (i != j) term = f.add(term, f.mul(s[idx], f.mul(x[j], y[i])));
        acc = f.add(acc, term);
    }
    return acc;
}

inline std::vector<Vec> projective_points(const Fq& f, size_t k) {
    std::vector<Vec> pts;
    Vec x(k, f.zero());
    for (size_t lead = 0; lead < k; ++lead) {
        for (size_t i = 0; i < lead; ++i) x[i] = f.zero();
        x[lead] = f.one();
        uint64_t total = 1;
        for (size_t i = lead + 1; i < k; ++i) total *= f.q();
        for (uint64_t idx = 0; idx < total; ++idx) {
            uint64_t t = idx;
            for (size_t i = lead + 1; i < k; ++i) {
                x[i] = f.from_index(static_cast<uint32_t>(t % f.q()));
                t /= f.q();
            }
            pts.push_back(x);
        }
    }
    return pts;
}

inline MultReduction karatsuba_f4() {
    Algebra a4 = make_gfext(2, 2);
    Algebra b = make_vec_algebra(2, 3);
    Mat phi(a4.field, 2, 3);
    uint32_t rows[2][3] = {{1, 0, 1}, {0, 1, 1}};
    for (size_t r = 0; r < 2; ++r)
        for (size_t c = 0; c < 3; ++c) phi.at(r, c) = FqElem{rows[r][c]};
    return make_reduction(std::move(a4), std::move(b), std::move(phi));
}

inline Mat f7_example_generator(const Fq& f7) {
    Mat g(f7, 4, 7);
    uint32_t rows[4][7] = {{1, 1, 1, 1, 1, 1, 1},
                           {0, 1, 1, 0, 0, 1, 1},
                           {0, 0, 0, 1, 1, 1, 1},
                           {0, 1, 6, 1, 6, 3, 4}};
    for (size_t r = 0; r < 4; ++r)
        for (size_t c = 0; c < 7; ++c) g.at(r, c) = FqElem{rows[r][c]};
    return g;
}

}  // namespace qhtest
