#pragma once

// Multiplication reductions phi: A ~> B. Verification runs the quadratic
// kernel criterion (any form vanishing on the projective system of phi
// must vanish at the canonical point of A); adjoints are solved on a
// basis of C_phi^(2) with free variables set to zero so the extension by
// zero off the square is deterministic.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "quadhull/algebra.hpp"
#include "quadhull/bcode.hpp"
#include "quadhull/errors.hpp"
#include "quadhull/linalg.hpp"
#include "quadhull/symmetric.hpp"

namespace qh {

struct MultReduction {
    Algebra a;
    Algebra b;
    Mat phi;                    // k x dim(B), row i = phi(a_i)
    std::optional<Mat> omega;   // dim(B) x k

    size_t k() const { return phi.rows; }
    Vec apply(const Vec& x) const { return mat_vec_rowform(phi, x); }
    Vec apply_omega(const Vec& y) const { return mat_vec_rowform(*omega, y); }
};

inline BCode code_of(const MultReduction& r) {
    return make_bcode(r.b, r.phi);
}

// Rows phi(a_i) phi(a_j), i <= j, in B.
inline Mat phi_pair_products(const Algebra& b, const Mat& phi) {
    SymIndex sx(phi.rows);
    Mat m(phi.field, sx.dim(), phi.cols);
    for (size_t idx = 0; idx < sx.dim(); ++idx) {
        auto [i, j] = sx.pairs[idx];
        m.set_row(idx, b.mul(phi.row(i), phi.row(j)));
    }
    return m;
}

// I_2(phi): forms q with sum q_ij phi(a_i) phi(a_j) = 0 in B.
inline Subspace i2_of_phi(const Algebra& b, const Mat& phi) {
    return kernel(mat_transpose(phi_pair_products(b, phi)));
}

struct VerifyResult {
    bool ok = false;
    std::optional<Vec> certificate;  // violating quadratic form, SymVec coords
    Subspace i2;
};

// Lemma 7.1 route for B = F^n: B_1..B_k must lie in <phi_1^x2..phi_n^x2>.
inline bool span_test_algorithm(const Algebra& a, const Mat& phi) {
    SymIndex sx(a.k);
    const Fq& f = a.field;
    std::vector<Vec> tensors;
    for (size_t col = 0; col < phi.cols; ++col) {
        Vec l(a.k);
        for (size_t i = 0; i < a.k; ++i) l[i] = phi.at(i, col);
        tensors.push_back(elementary_tensor(f, sx, l));
    }
    Subspace w = span_of(f, tensors, sx.dim());
    MultTensorData t = mult_tensor(a);
    for (const auto& bform : t.bforms)
        if (!w.member(bform)) return false;
    return true;
}

inline VerifyResult is_mult_reduction(const Algebra& a, const Algebra& b, const Mat& phi) {
    if (phi.rows != a.k || phi.cols != b.k)
        throw std::invalid_argument("phi dimensions do not match the algebras");
    SymIndex sx(a.k);
    VerifyResult res;
    res.i2 = i2_of_phi(b, phi);
    if (rank(phi) != a.k) return res;  // reductions are injective
    bool ok = true;
    for (size_t r = 0; r < res.i2.dim() && ok; ++r) {
        Vec form = res.i2.basis.row(r);
        if (!canonical_vanishes(a, sx, form)) {
            res.certificate = std::move(form);
            ok = false;
        }
    }
    res.ok = ok;
    if (b.is_coordinatewise()) {
        // Independent route; a disagreement is an implementation bug.
        if (span_test_algorithm(a, phi) != res.ok)
            throw std::logic_error("kernel test and span test disagree");
    }
    return res;
}

inline VerifyResult verify(const MultReduction& r) { return is_mult_reduction(r.a, r.b, r.phi); }

// Adjoint on C_phi^(2), extended by zero on the complement spanned by the
// non-pivot coordinates (solve with free variables zero).
inline Mat adjoint(const Algebra& a, const Algebra& b, const Mat& phi) {
    auto chk = is_mult_reduction(a, b, phi);
    if (!chk.ok) throw std::invalid_argument("adjoint called on a non-reduction");
    SymIndex sx(a.k);
    Mat prods = phi_pair_products(b, phi);  // sym_dim x dim(B)
    Mat rhs(a.field, sx.dim(), a.k);
    for (size_t idx = 0; idx < sx.dim(); ++idx) {
        auto [i, j] = sx.pairs[idx];
        rhs.set_row(idx, a.mul(a.basis_vec(i), a.basis_vec(j)));
    }
    auto om = solve_matrix(prods, rhs);
    if (!om) throw std::logic_error("adjoint system inconsistent on a verified reduction");
    return *om;
}

inline MultReduction make_reduction(Algebra a, Algebra b, Mat phi, bool with_omega = true) {
    MultReduction r{std::move(a), std::move(b), std::move(phi), std::nullopt};
    if (with_omega) r.omega = adjoint(r.a, r.b, r.phi);
    return r;
}

inline MultReduction product_red(const MultReduction& r1, const MultReduction& r2) {
    if (r1.a.field != r2.a.field) throw std::invalid_argument("product requires the same base field");
    Algebra a = product(r1.a, r2.a);
    Algebra b = product(r1.b, r2.b);
    const Fq& f = a.field;
    Mat phi(f, r1.k() + r2.k(), r1.b.k + r2.b.k);
    for (size_t i = 0; i < r1.k(); ++i)
        for (size_t j = 0; j < r1.b.k; ++j) phi.at(i, j) = r1.phi.at(i, j);
    for (size_t i = 0; i < r2.k(); ++i)
        for (size_t j = 0; j < r2.b.k; ++j) phi.at(r1.k() + i, r1.b.k + j) = r2.phi.at(i, j);
    std::optional<Mat> omega;
    if (r1.omega && r2.omega) {
        Mat om(f, r1.b.k + r2.b.k, r1.k() + r2.k());
        for (size_t i = 0; i < r1.b.k; ++i)
            for (size_t j = 0; j < r1.k(); ++j) om.at(i, j) = r1.omega->at(i, j);
        for (size_t i = 0; i < r2.b.k; ++i)
            for (size_t j = 0; j < r2.k(); ++j) om.at(r1.b.k + i, r1.k() + j) = r2.omega->at(i, j);
        omega = std::move(om);
    }
    return MultReduction{std::move(a), std::move(b), std::move(phi), std::move(omega)};
}

inline MultReduction compose_red(const MultReduction& r_ab, const MultReduction& r_bc) {
    if (!r_ab.b.same_structure(r_bc.a))
        throw std::invalid_argument("composition requires matching middle algebras");
    MultReduction r{r_ab.a, r_bc.b, mat_mul(r_ab.phi, r_bc.phi), std::nullopt};
    if (r_ab.omega && r_bc.omega) r.omega = mat_mul(*r_bc.omega, *r_ab.omega);
    return r;
}

inline std::vector<Vec> unit_elements(const Algebra& a, uint64_t cap) {
    std::vector<Vec> units;
    uint64_t n = a.element_count();
    if (n > cap) throw BudgetExceeded("unit enumeration cap exceeded");
    for (uint64_t idx = 1; idx < n; ++idx) {
        Vec x = a.element_from_index(idx);
        if (a.is_unit(x)) units.push_back(std::move(x));
    }
    return units;
}

// Brute-force search for (u, v) with phi2(x) = v * phi1(u^-1 x).
inline std::optional<std::pair<Vec, Vec>> diag_equivalent(const MultReduction& r1,
                                                          const MultReduction& r2) {
    if (!r1.a.same_structure(r2.a) || !r1.b.same_structure(r2.b))
        throw std::invalid_argument("diagonal equivalence requires identical algebras");
    auto units_a = unit_elements(r1.a, uint64_t(1) << 20);
    auto units_b = unit_elements(r1.b, uint64_t(1) << 20);
    if (units_a.size() * units_b.size() > (uint64_t(1) << 20))
        throw BudgetExceeded("diagonal equivalence cap |A^x||B^x| <= 2^20 exceeded");
    for (const auto& u : units_a) {
        Mat lu_inv = r1.a.mult_matrix(r1.a.inverse(u));
        Mat left = mat_mul(lu_inv, r1.phi);  // row i = phi(u^-1 a_i)
        for (const auto& v : units_b) {
            Mat lv = r1.b.mult_matrix(v);
            if (mat_mul(left, lv) == r2.phi) return std::make_pair(u, v);
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Supercodes: subspaces of A x B with surjective first projection and
// square-injective second projection.

struct Supercode {
    Algebra ab;  // product algebra A x B
    Mat basis;   // rows in A x B coordinates
    size_t ka = 0;
};

inline Supercode make_supercode(const MultReduction& r) {
    Algebra ab = product(r.a, r.b);
    Mat basis(r.phi.field, r.k(), r.a.k + r.b.k);
    for (size_t i = 0; i < r.k(); ++i) {
        basis.at(i, i) = r.phi.field.one();
        for (size_t j = 0; j < r.b.k; ++j) basis.at(i, r.a.k + j) = r.phi.at(i, j);
    }
    return Supercode{std::move(ab), std::move(basis), r.a.k};
}

inline bool is_supercode(const Supercode& s, const Algebra& a, const Algebra& b) {
    if (s.basis.cols != a.k + b.k) throw std::invalid_argument("supercode width mismatch");
    const Fq& f = s.basis.field;
    // pi_A surjective.
    Mat apart(f, s.basis.rows, a.k);
    for (size_t r = 0; r < s.basis.rows; ++r)
        for (size_t c = 0; c < a.k; ++c) apart.at(r, c) = s.basis.at(r, c);
    if (rank(apart) != a.k) return false;
    // pi_B injective on the square span.
    BCode chat = make_bcode(s.ab, s.basis);
    Subspace sq = square_code(chat);
    Mat bpart(f, sq.dim(), b.k);
    for (size_t r = 0; r < sq.dim(); ++r)
        for (size_t c = 0; c < b.k; ++c) bpart.at(r, c) = sq.basis.at(r, a.k + c);
    return rank(bpart) == sq.dim();
}

// ---------------------------------------------------------------------------
// Supercode witness search (Cor. 6.3): a point Q in Z_2(C)(A) whose
// coordinates are F_q-linearly independent in A induces phi: a_i -> c_i.
// Candidates are normalized so the first unit coordinate is 1; each
// projective class is visited at least once and the first hit wins.

struct SupercodeWitness {
    std::vector<Vec> point;  // k coordinates, each an element of A
    Mat phi;
};

inline std::optional<SupercodeWitness> find_supercode_witness(const BCode& c, const Algebra& a) {
    if (c.k() != a.k) throw std::invalid_argument("dim C must equal dim A");
    const Fq& f = a.field;
    const size_t k = a.k;
    const uint64_t na = a.element_count();

    std::vector<uint64_t> nonunits;
    std::vector<bool> unit_flag(na, false);
    for (uint64_t idx = 0; idx < na; ++idx) {
        Vec x = a.element_from_index(idx);
        if (a.is_unit(x)) unit_flag[idx] = true;
        else nonunits.push_back(idx);
    }
    // Candidate count: first unit position j has non-units before it and a
    // fixed 1 there.
    {
        uint64_t total = 0;
        uint64_t npow = 1;
        uint64_t apow = 1;
        for (size_t i = 0; i + 1 < k; ++i) apow *= na;
        for (size_t j = 0; j < k; ++j) {
            total += npow * apow;
            if (total > (uint64_t(1) << 22)) throw BudgetExceeded("witness enumeration cap 2^22 exceeded");
            npow *= nonunits.size();
            apow /= na;
        }
    }

    Subspace i2 = i2_code(c);
    SymIndex sx(k);
    Vec one = a.unit;

    std::vector<Vec> w(k);
    // Recursive fill: positions < j are non-units, position j is 1, rest free.
    std::optional<SupercodeWitness> found;
    auto try_point = [&]() -> bool {
        for (size_t r = 0; r < i2.dim(); ++r) {
            Vec acc(k, f.zero());
            const Vec form = i2.basis.row(r);
            for (size_t idx = 0; idx < sx.dim(); ++idx) {
                if (form[idx] == f.zero()) continue;
                auto [i, j] = sx.pairs[idx];
                Vec p = a.mul(w[i], w[j]);
                for (size_t l = 0; l < k; ++l) acc[l] = f.add(acc[l], f.mul(form[idx], p[l]));
            }
            for (auto e : acc)
                if (e != f.zero()) return false;
        }
        Mat coords(f, k, k);
        for (size_t i = 0; i < k; ++i) coords.set_row(i, w[i]);
        if (rank(coords) != k) return false;  // lies in a rational hyperplane
        auto inv = mat_inverse(coords);
        found = SupercodeWitness{w, mat_mul(*inv, c.basis)};
        return true;
    };
    std::function<bool(size_t, size_t)> fill = [&](size_t pos, size_t unit_pos) -> bool {
        if (pos == k) return try_point();
        if (pos < unit_pos) {
            for (uint64_t nu : nonunits) {
                w[pos] = a.element_from_index(nu);
                if (fill(pos + 1, unit_pos)) return true;
            }
            return false;
        }
        if (pos == unit_pos) {
            w[pos] = one;
            return fill(pos + 1, unit_pos);
        }
        for (uint64_t idx = 0; idx < na; ++idx) {
            w[pos] = a.element_from_index(idx);
            if (fill(pos + 1, unit_pos)) return true;
        }
        return false;
    };
    for (size_t j = 0; j < k; ++j)
        if (fill(0, j)) break;
    return found;
}

}  // namespace qh
