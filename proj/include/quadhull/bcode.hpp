#pragma once

// B-codes: linear subspaces C of an algebra B, carried with an explicit
// ordered basis (generator matrices are basis-dependent). Squares,
// quadratic kernels I_2(C), non-degeneracy, extensions, hyperplane
// sections, and minimum distance for B = F^n.

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "quadhull/algebra.hpp"
#include "quadhull/errors.hpp"
#include "quadhull/linalg.hpp"
#include "quadhull/symmetric.hpp"

namespace qh {

struct BCode {
    Algebra b;
    Mat basis;           // k x dim(B), rows are the code basis c_1..c_k
    std::string b_spec;  // algebra spec string when known (serialization)

    size_t k() const { return basis.rows; }
    size_t ambient() const { return basis.cols; }
};

inline BCode make_bcode(Algebra b, Mat basis, std::string b_spec = "") {
    if (basis.cols != b.k) throw std::invalid_argument("basis width does not match algebra dimension");
    if (rank(basis) != basis.rows) throw std::invalid_argument("code basis is not independent");
    return BCode{std::move(b), std::move(basis), std::move(b_spec)};
}

// Plain [n,k] code over F_q^n from a generator matrix.
inline BCode bcode_from_generator(const Mat& g) {
    return make_bcode(make_vec_algebra(g.field.q(), g.cols), g,
                      "vec:" + std::to_string(g.field.q()) + ":" + std::to_string(g.cols));
}

// Rows c_i c_j (i <= j) of the pairwise-product matrix; shared by the
// square span and the quadratic kernel.
inline Mat pair_product_matrix(const BCode& c) {
    SymIndex sx(c.k());
    Mat m(c.basis.field, sx.dim(), c.ambient());
    for (size_t idx = 0; idx < sx.dim(); ++idx) {
        auto [i, j] = sx.pairs[idx];
        m.set_row(idx, c.b.mul(c.basis.row(i), c.basis.row(j)));
    }
    return m;
}

inline Subspace square_code(const BCode& c) { return row_space(pair_product_matrix(c)); }

// I_2(C) = ker(S^2 C -> C^(2)) as a subspace of SymVec coordinates: the
// forms q with sum_{i<=j} q_ij c_i c_j = 0 in B.
inline Subspace i2_code(const BCode& c) {
    return kernel(mat_transpose(pair_product_matrix(c)));
}

// Non-degeneracy: every local factor sees a unit in the projected span.
inline bool nondegenerate(const BCode& c) {
    if (c.b.factors.empty()) throw std::invalid_argument("nondegenerate requires a factor list");
    uint64_t combos = 1;
    for (size_t i = 0; i < c.k(); ++i) {
        combos *= c.basis.field.q();
        if (combos > 4096) throw BudgetExceeded("unit search cap q^k <= 4096 exceeded");
    }
    for (const auto& fac : c.b.factors) {
        Mat projected = mat_mul(c.basis, fac.proj);  // k x dim(factor)
        bool found = false;
        for (uint64_t idx = 1; idx < combos && !found; ++idx) {
            Vec coeff(c.k());
            uint64_t t = idx;
            for (size_t i = 0; i < c.k(); ++i) {
                coeff[i] = c.basis.field.from_index(static_cast<uint32_t>(t % c.basis.field.q()));
                t /= c.basis.field.q();
            }
            if (fac.alg->is_unit(mat_vec_rowform(projected, coeff))) found = true;
        }
        if (!found) return false;
    }
    return true;
}

// Extension by a projective point P (nonzero column vector): generator
// matrix (G | P) over B x F_q.
inline BCode extend_code(const BCode& c, const Vec& p) {
    const Fq& f = c.basis.field;
    if (p.size() != c.k()) throw std::invalid_argument("point dimension mismatch");
    bool nonzero = false;
    for (auto e : p)
        if (e != f.zero()) nonzero = true;
    if (!nonzero) throw std::invalid_argument("extension point must be nonzero");
    Algebra bext = product(c.b, make_gfext(f.q(), 1));
    Mat basis(f, c.k(), c.ambient() + 1);
    for (size_t r = 0; r < c.k(); ++r) {
        for (size_t col = 0; col < c.ambient(); ++col) basis.at(r, col) = c.basis.at(r, col);
        basis.at(r, c.ambient()) = p[r];
    }
    return BCode{std::move(bext), std::move(basis), ""};
}

struct HyperplaneData {
    Subspace h;   // image of linear forms vanishing at P
    Subspace hc;  // span of h * c
    Subspace h2;  // span of h * h'
};

inline HyperplaneData hyperplane_data(const BCode& c, const Vec& p) {
    const Fq& f = c.basis.field;
    if (p.size() != c.k()) throw std::invalid_argument("point dimension mismatch");
    bool nonzero = false;
    for (auto e : p)
        if (e != f.zero()) nonzero = true;
    if (!nonzero) throw std::invalid_argument("hyperplane point must be nonzero");

    // Forms l with l . P = 0.
    Mat pm(f, 1, c.k());
    pm.set_row(0, p);
    Subspace lker = kernel(pm);
    std::vector<Vec> hrows;
    for (size_t r = 0; r < lker.dim(); ++r)
        hrows.push_back(mat_vec_rowform(c.basis, lker.basis.row(r)));
    Subspace h = span_of(f, hrows, c.ambient());

    std::vector<Vec> hc_rows, h2_rows;
    for (size_t i = 0; i < hrows.size(); ++i) {
        for (size_t j = 0; j < c.k(); ++j) hc_rows.push_back(c.b.mul(hrows[i], c.basis.row(j)));
        for (size_t j = i; j < hrows.size(); ++j) h2_rows.push_back(c.b.mul(hrows[i], hrows[j]));
    }
    return {std::move(h), span_of(f, hc_rows, c.ambient()), span_of(f, h2_rows, c.ambient())};
}

// Minimum Hamming weight over the q^k - 1 nonzero codewords; B = F^n only.
inline size_t min_distance(const BCode& c) {
    if (!c.b.is_coordinatewise())
        throw std::invalid_argument("min_distance requires B = F_q^n");
    uint64_t total = c.b.field.q();
    for (size_t i = 1; i < c.k(); ++i) {
        total *= c.b.field.q();
        if (total > (uint64_t(1) << 20)) throw BudgetExceeded("min_distance cap q^k <= 2^20 exceeded");
    }
    const Fq& f = c.basis.field;
    size_t best = c.ambient() + 1;
    for (uint64_t idx = 1; idx < total; ++idx) {
        Vec x(c.k());
        uint64_t t = idx;
        for (size_t i = 0; i < c.k(); ++i) {
            x[i] = f.from_index(static_cast<uint32_t>(t % f.q()));
            t /= f.q();
        }
        Vec w = mat_vec_rowform(c.basis, x);
        size_t wt = 0;
        for (auto e : w)
            if (e != f.zero()) ++wt;
        if (wt < best) best = wt;
    }
    return best;
}

// ---------------------------------------------------------------------------
// Text format: algebra spec line, then k, then one row per line; each row
// lists one group per local factor, coordinates within a group separated
// by commas.

inline std::string bcode_to_text(const BCode& c) {
    if (c.b.factors.empty()) throw std::invalid_argument("serialization requires a factor list");
    if (c.b_spec.empty()) throw std::invalid_argument("serialization requires the algebra spec string");
    std::ostringstream os;
    os << c.b_spec << '\n' << c.k() << '\n';
    for (size_t r = 0; r < c.k(); ++r) {
        bool first_group = true;
        for (const auto& fac : c.b.factors) {
            if (!first_group) os << ' ';
            first_group = false;
            Vec comp = mat_vec_rowform(fac.proj, c.basis.row(r));
            for (size_t i = 0; i < comp.size(); ++i) {
                if (i) os << ',';
                os << c.basis.field.to_string(comp[i]);
            }
        }
        os << '\n';
    }
    return os.str();
}

inline BCode bcode_from_text(const std::string& text,
                             const std::function<std::string(const std::string&)>& file_loader = {}) {
    std::istringstream is(text);
    std::string spec;
    if (!(is >> spec)) throw std::invalid_argument("missing algebra spec line");
    size_t k;
    if (!(is >> k)) throw std::invalid_argument("missing code dimension");
    Algebra b = parse_algebra_spec(spec, file_loader);
    if (b.factors.empty()) throw std::invalid_argument("code algebra needs a factor list");
    const Fq& f = b.field;

    // Assembled factor-coordinate map and its inverse (CRT iso).
    Mat assembled(f, b.k, b.k);
    size_t off = 0;
    for (const auto& fac : b.factors) {
        for (size_t r = 0; r < b.k; ++r)
            for (size_t c2 = 0; c2 < fac.alg->k; ++c2) assembled.at(r, off + c2) = fac.proj.at(r, c2);
        off += fac.alg->k;
    }
    auto inv = mat_inverse(assembled);
    if (!inv) throw std::logic_error("factor projection not invertible");

    Mat basis(f, k, b.k);
    for (size_t r = 0; r < k; ++r) {
        Vec factor_coords;
        for (const auto& fac : b.factors) {
            std::string tok;
            if (!(is >> tok)) throw std::invalid_argument("code row entry missing");
            std::istringstream group(tok);
            std::string digit;
            size_t got = 0;
            while (std::getline(group, digit, ',')) {
                factor_coords.push_back(f.parse(digit));
                ++got;
            }
            if (got != fac.alg->k) throw std::invalid_argument("bad factor group width");
        }
        basis.set_row(r, mat_vec_rowform(*inv, factor_coords));
    }
    return make_bcode(std::move(b), std::move(basis), spec);
}

}  // namespace qh
