#pragma once

// Exact dense linear algebra over an Fq: reduced row echelon form, rank,
// kernels, solves, and canonical subspaces. Rows over GF(2) are packed
// into 64-bit words; the generic element path stays available so the two
// can be tested against each other.

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "quadhull/fq.hpp"

namespace qh {

using Vec = std::vector<FqElem>;

struct Mat {
    Fq field;
    size_t rows = 0, cols = 0;
    std::vector<FqElem> a;  // row-major

    Mat() = default;
    Mat(Fq f, size_t r, size_t c) : field(std::move(f)), rows(r), cols(c), a(r * c, FqElem{0}) {}

    FqElem& at(size_t r, size_t c) { return a[r * cols + c]; }
    FqElem at(size_t r, size_t c) const { return a[r * cols + c]; }

    Vec row(size_t r) const { return Vec(a.begin() + r * cols, a.begin() + (r + 1) * cols); }
    void set_row(size_t r, const Vec& v) {
        for (size_t c = 0; c < cols; ++c) at(r, c) = v[c];
    }

    static Mat identity(const Fq& f, size_t n) {
        Mat m(f, n, n);
        for (size_t i = 0; i < n; ++i) m.at(i, i) = f.one();
        return m;
    }
    static Mat from_rows(const Fq& f, const std::vector<Vec>& rows_in, size_t cols) {
        Mat m(f, rows_in.size(), cols);
        for (size_t r = 0; r < rows_in.size(); ++r) m.set_row(r, rows_in[r]);
        return m;
    }

    friend bool operator==(const Mat& x, const Mat& y) {
        return x.field == y.field && x.rows == y.rows && x.cols == y.cols && x.a == y.a;
    }
};

struct RrefResult {
    Mat rref;
    size_t rank = 0;
    std::vector<size_t> pivots;
};

namespace detail {

inline RrefResult rref_generic(Mat m) {
    const Fq& f = m.field;
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < m.cols && r < m.rows; ++c) {
        size_t sel = r;
        while (sel < m.rows && m.at(sel, c) == f.zero()) ++sel;
        if (sel == m.rows) continue;
        if (sel != r)
            for (size_t j = 0; j < m.cols; ++j) std::swap(m.at(sel, j), m.at(r, j));
        FqElem inv = f.inv(m.at(r, c));
        for (size_t j = c; j < m.cols; ++j) m.at(r, j) = f.mul(m.at(r, j), inv);
        for (size_t i = 0; i < m.rows; ++i) {
            if (i == r) continue;
            FqElem fac = m.at(i, c);
            if (fac == f.zero()) continue;
            for (size_t j = c; j < m.cols; ++j)
                m.at(i, j) = f.sub(m.at(i, j), f.mul(fac, m.at(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), pivots.size(), std::move(pivots)};
}

inline RrefResult rref_gf2(const Mat& m) {
    if (m.cols > 64) throw std::invalid_argument("GF(2) packed path requires cols <= 64");
    std::vector<uint64_t> w(m.rows, 0);
    for (size_t r = 0; r < m.rows; ++r)
        for (size_t c = 0; c < m.cols; ++c)
            if (m.at(r, c).v) w[r] |= uint64_t(1) << c;
    std::vector<size_t> pivots;
    size_t rank = 0;
    for (size_t c = 0; c < m.cols && rank < m.rows; ++c) {
        size_t sel = rank;
        while (sel < m.rows && !(w[sel] >> c & 1)) ++sel;
        if (sel == m.rows) continue;
        std::swap(w[sel], w[rank]);
        for (size_t i = 0; i < m.rows; ++i)
            if (i != rank && (w[i] >> c & 1)) w[i] ^= w[rank];
        pivots.push_back(c);
        ++rank;
    }
    Mat out(m.field, m.rows, m.cols);
    for (size_t r = 0; r < m.rows; ++r)
        for (size_t c = 0; c < m.cols; ++c)
            out.at(r, c) = FqElem{static_cast<uint32_t>(w[r] >> c & 1)};
    return {std::move(out), rank, std::move(pivots)};
}

}  // namespace detail

inline RrefResult rref(const Mat& m) {
    if (m.field.q() == 2 && m.cols <= 64) return detail::rref_gf2(m);
    return detail::rref_generic(m);
}

inline size_t rank(const Mat& m) { return rref(m).rank; }

// Canonical representative of a row space: nonzero RREF rows plus pivots.
struct Subspace {
    Fq field;
    size_t ambient = 0;
    Mat basis;                   // RREF rows, all nonzero
    std::vector<size_t> pivots;

    size_t dim() const { return basis.rows; }

    // Reduce v against the echelon basis; zero remainder means membership.
    Vec reduce(Vec v) const {
        const Fq& f = field;
        for (size_t r = 0; r < basis.rows; ++r) {
            FqElem fac = v[pivots[r]];
            if (fac == f.zero()) continue;
            for (size_t c = 0; c < ambient; ++c)
                v[c] = f.sub(v[c], f.mul(fac, basis.at(r, c)));
        }
        return v;
    }
    bool member(const Vec& v) const {
        Vec r = reduce(v);
        for (auto e : r)
            if (e != field.zero()) return false;
        return true;
    }

    std::vector<uint32_t> signature() const {
        std::vector<uint32_t> s;
        s.reserve(2 + basis.a.size());
        s.push_back(static_cast<uint32_t>(ambient));
        s.push_back(static_cast<uint32_t>(basis.rows));
        for (auto e : basis.a) s.push_back(e.v);
        return s;
    }
    friend bool operator==(const Subspace& x, const Subspace& y) {
        return x.ambient == y.ambient && x.basis == y.basis;
    }
};

inline Subspace row_space(const Mat& m) {
    auto r = rref(m);
    Mat b(m.field, r.rank, m.cols);
    for (size_t i = 0; i < r.rank; ++i)
        for (size_t c = 0; c < m.cols; ++c) b.at(i, c) = r.rref.at(i, c);
    return Subspace{m.field, m.cols, std::move(b), std::move(r.pivots)};
}

inline Subspace span_of(const Fq& f, const std::vector<Vec>& vecs, size_t ambient) {
    return row_space(Mat::from_rows(f, vecs, ambient));
}

inline Subspace zero_subspace(const Fq& f, size_t ambient) {
    return Subspace{f, ambient, Mat(f, 0, ambient), {}};
}

inline bool member(const Subspace& s, const Vec& v) { return s.member(v); }

inline Subspace span_join(const Subspace& s, const Vec& v) {
    Mat m(s.field, s.basis.rows + 1, s.ambient);
    for (size_t r = 0; r < s.basis.rows; ++r)
        for (size_t c = 0; c < s.ambient; ++c) m.at(r, c) = s.basis.at(r, c);
    m.set_row(s.basis.rows, v);
    return row_space(m);
}

inline bool subspace_leq(const Subspace& a, const Subspace& b) {
    for (size_t r = 0; r < a.basis.rows; ++r)
        if (!b.member(a.basis.row(r))) return false;
    return true;
}

// Right null space {x : m x = 0}, canonical basis.
inline Subspace kernel(const Mat& m) {
    auto r = rref(m);
    const Fq& f = m.field;
    std::vector<bool> is_pivot(m.cols, false);
    for (auto p : r.pivots) is_pivot[p] = true;
    std::vector<Vec> basis;
    for (size_t c = 0; c < m.cols; ++c) {
        if (is_pivot[c]) continue;
        Vec v(m.cols, f.zero());
        v[c] = f.one();
        for (size_t i = 0; i < r.rank; ++i)
            v[r.pivots[i]] = f.neg(r.rref.at(i, c));
        basis.push_back(std::move(v));
    }
    return span_of(f, basis, m.cols);
}

// Any solution of m x = rhs, free variables set to zero; nullopt when
// inconsistent.
inline std::optional<Vec> solve(const Mat& m, const Vec& rhs) {
    const Fq& f = m.field;
    Mat aug(f, m.rows, m.cols + 1);
    for (size_t r = 0; r < m.rows; ++r) {
        for (size_t c = 0; c < m.cols; ++c) aug.at(r, c) = m.at(r, c);
        aug.at(r, m.cols) = rhs[r];
    }
    auto rr = rref(aug);
    Vec x(m.cols, f.zero());
    for (size_t i = 0; i < rr.rank; ++i) {
        if (rr.pivots[i] == m.cols) return std::nullopt;  // pivot in rhs column
        x[rr.pivots[i]] = rr.rref.at(i, m.cols);
    }
    return x;
}

// Columns solved jointly: m X = rhs (rhs has one column per solve).
inline std::optional<Mat> solve_matrix(const Mat& m, const Mat& rhs) {
    const Fq& f = m.field;
    Mat x(f, m.cols, rhs.cols);
    for (size_t c = 0; c < rhs.cols; ++c) {
        Vec b(m.rows);
        for (size_t r = 0; r < m.rows; ++r) b[r] = rhs.at(r, c);
        auto sol = solve(m, b);
        if (!sol) return std::nullopt;
        for (size_t r = 0; r < m.cols; ++r) x.at(r, c) = (*sol)[r];
    }
    return x;
}

inline Vec mat_vec_rowform(const Mat& m, const Vec& x) {
    // Row-vector convention: returns x * m (x has m.rows entries).
    const Fq& f = m.field;
    Vec out(m.cols, f.zero());
    for (size_t r = 0; r < m.rows; ++r) {
        if (x[r] == f.zero()) continue;
        for (size_t c = 0; c < m.cols; ++c)
            out[c] = f.add(out[c], f.mul(x[r], m.at(r, c)));
    }
    return out;
}

inline Mat mat_mul(const Mat& a, const Mat& b) {
    if (a.cols != b.rows) throw std::invalid_argument("matrix dimension mismatch");
    const Fq& f = a.field;
    Mat r(f, a.rows, b.cols);
    for (size_t i = 0; i < a.rows; ++i)
        for (size_t k = 0; k < a.cols; ++k) {
            FqElem e = a.at(i, k);
            if (e == f.zero()) continue;
            for (size_t j = 0; j < b.cols; ++j)
                r.at(i, j) = f.add(r.at(i, j), f.mul(e, b.at(k, j)));
        }
    return r;
}

inline Mat mat_transpose(const Mat& m) {
    Mat r(m.field, m.cols, m.rows);
    for (size_t i = 0; i < m.rows; ++i)
        for (size_t j = 0; j < m.cols; ++j) r.at(j, i) = m.at(i, j);
    return r;
}

inline std::optional<Mat> mat_inverse(const Mat& m) {
    if (m.rows != m.cols) throw std::invalid_argument("inverse requires a square matrix");
    auto inv = solve_matrix(m, Mat::identity(m.field, m.rows));
    return inv;
}

// ---------------------------------------------------------------------------
// Text format: first line "q rows cols", then one row per line with entries
// as little-endian base-p digit strings separated by spaces.

inline std::string mat_to_text(const Mat& m) {
    std::ostringstream os;
    os << m.field.q() << ' ' << m.rows << ' ' << m.cols << '\n';
    for (size_t r = 0; r < m.rows; ++r) {
        for (size_t c = 0; c < m.cols; ++c) {
            if (c) os << ' ';
            os << m.field.to_string(m.at(r, c));
        }
        os << '\n';
    }
    return os.str();
}

inline Mat mat_from_text(const std::string& text) {
    std::istringstream is(text);
    uint32_t q;
    size_t rows, cols;
    if (!(is >> q >> rows >> cols)) throw std::invalid_argument("bad matrix header");
    Fq f = field_of_order(q);
    Mat m(f, rows, cols);
    for (size_t r = 0; r < rows; ++r)
        for (size_t c = 0; c < cols; ++c) {
            std::string tok;
            if (!(is >> tok)) throw std::invalid_argument("matrix entry missing");
            m.at(r, c) = f.parse(tok);
        }
    return m;
}

}  // namespace qh
