#pragma once

// Quadratic hulls Z_2 = Z(I_2) in P^{k-1}: the W-dual route I_2 = W^perp,
// rational point enumeration over extensions, canonical-point membership,
// the complete-intersection dimension proxy, extension/hyperplane
// dichotomies and the secant-variety check.

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "quadhull/bcode.hpp"
#include "quadhull/errors.hpp"
#include "quadhull/multred.hpp"

namespace qh {

enum class HullSource { FromCode, FromPhi, FromW };

struct QuadHull {
    size_t ambient_k = 0;
    Subspace i2;  // quadratic forms, SymVec coordinates over the base field
    HullSource source = HullSource::FromCode;

    const Fq& field() const { return i2.field; }
    size_t dim_i2() const { return i2.dim(); }
};

inline QuadHull hull_from_code(const BCode& c) {
    return QuadHull{c.k(), i2_code(c), HullSource::FromCode};
}

inline QuadHull hull_from_phi(const Algebra& b, const Mat& phi) {
    return QuadHull{phi.rows, i2_of_phi(b, phi), HullSource::FromPhi};
}

// I_2(phi) = W^perp under <Q,S> = sum_{i<=j} q_ij s_ij: the plain
// orthogonal complement in SymVec coordinates.
inline QuadHull i2_from_W(const Subspace& w, size_t k) {
    if (w.ambient != sym_dim(k)) throw std::invalid_argument("W ambient must be k(k+1)/2");
    Mat rows(w.field, w.dim(), w.ambient);
    for (size_t r = 0; r < w.dim(); ++r) rows.set_row(r, w.basis.row(r));
    return QuadHull{k, kernel(rows), HullSource::FromW};
}

// Projective representatives over F_{q^m} (first nonzero coordinate 1)
// annihilated by every I_2 basis form; coefficients enter the extension
// through the cached subfield embedding.
inline std::vector<Vec> rational_points(const QuadHull& h, uint32_t ext_degree) {
    const Fq& f = h.field();
    Embedding emb = embed(f, ext_degree);
    const Fq& ext = emb.ext;
    const size_t k = h.ambient_k;
    {
        uint64_t total = 1;
        for (size_t i = 0; i < k; ++i) {
            total *= ext.q();
            if (total > (uint64_t(1) << 24))
                throw BudgetExceeded("rational point enumeration cap 2^24 exceeded");
        }
    }
    SymIndex sx(k);
    std::vector<Vec> forms;
    for (size_t r = 0; r < h.i2.dim(); ++r) {
        Vec form = h.i2.basis.row(r);
        for (auto& e : form) e = emb(e);
        forms.push_back(std::move(form));
    }
    std::vector<Vec> points;
    Vec x(k, ext.zero());
    // Positions before the leading 1 are zero; the rest enumerate freely.
    for (size_t lead = 0; lead < k; ++lead) {
        for (size_t i = 0; i < lead; ++i) x[i] = ext.zero();
        x[lead] = ext.one();
        size_t free = k - lead - 1;
        uint64_t total = 1;
        for (size_t i = 0; i < free; ++i) total *= ext.q();
        for (uint64_t idx = 0; idx < total; ++idx) {
            uint64_t t = idx;
            for (size_t i = 0; i < free; ++i) {
                x[k - 1 - i] = ext.from_index(static_cast<uint32_t>(t % ext.q()));
                t /= ext.q();
            }
            bool ok = true;
            for (const auto& form : forms)
                if (sym_eval(ext, sx, form, x) != ext.zero()) { ok = false; break; }
            if (ok) points.push_back(x);
        }
    }
    return points;
}

inline size_t count_points(const QuadHull& h, uint32_t ext_degree) {
    return rational_points(h, ext_degree).size();
}

inline bool contains_canonical(const QuadHull& h, const Algebra& a) {
    if (h.ambient_k != a.k) throw std::invalid_argument("hull/algebra dimension mismatch");
    SymIndex sx(a.k);
    for (size_t r = 0; r < h.i2.dim(); ++r)
        if (!canonical_vanishes(a, sx, h.i2.basis.row(r))) return false;
    return true;
}

// Dimension-count proxy for Cor. 7.5: the number of independent quadrics
// equals binom(k+1,2) - n. Scheme-dimension verification is out of scope.
inline bool ci_flag(const QuadHull& h, size_t n) {
    return h.dim_i2() == sym_dim(h.ambient_k) - n;
}

enum class ExtensionKind { SquarePreserving, SquareGrowing };

// Prop. 8.1: P extends the code square-preservingly iff P satisfies I_2(C).
inline ExtensionKind classify_extension(const BCode& c, const Vec& p) {
    Subspace i2 = i2_code(c);
    SymIndex sx(c.k());
    const Fq& f = c.basis.field;
    for (size_t r = 0; r < i2.dim(); ++r)
        if (sym_eval(f, sx, i2.basis.row(r), p) != f.zero()) return ExtensionKind::SquareGrowing;
    return ExtensionKind::SquarePreserving;
}

struct SecantReport {
    size_t rational_pairs = 0;
    size_t conjugate_pairs = 0;
    size_t points_tested = 0;
    size_t violations = 0;
    bool exhaustive_rational = false;
    bool conjugates_included = false;
};

// Prop. 8.3 direction: every rational point on a secant line through two
// hull points gives a hyperplane with H^(2) strictly inside C^(2).
inline SecantReport secant_check(const QuadHull& h, const BCode& c, size_t max_tests = 1 << 20,
                                 bool include_conjugates = true) {
    const Fq& f = h.field();
    auto pts = rational_points(h, 1);
    if (pts.size() < 2) throw std::invalid_argument("secant_check needs at least two rational points");
    size_t dim_sq = square_code(c).dim();
    SecantReport rep;

    std::set<Vec> tested;
    auto normalize = [&](Vec v) {
        size_t lead = 0;
        while (lead < v.size() && v[lead] == f.zero()) ++lead;
        if (lead == v.size()) return v;
        FqElem inv = f.inv(v[lead]);
        for (auto& e : v) e = f.mul(e, inv);
        return v;
    };
    auto test_point = [&](const Vec& r) {
        Vec n = normalize(r);
        if (!tested.insert(n).second) return;
        if (rep.points_tested >= max_tests) throw BudgetExceeded("secant check budget exceeded");
        ++rep.points_tested;
        auto hd = hyperplane_data(c, n);
        if (hd.h2.dim() >= dim_sq) ++rep.violations;
    };
    auto line_points = [&](const Vec& p1, const Vec& p2) {
        // (alpha : beta) in P^1(F_q): alpha = 1 free beta, plus (0 : 1).
        for (uint32_t b = 0; b < f.q(); ++b) {
            Vec r(p1.size());
            for (size_t i = 0; i < r.size(); ++i)
                r[i] = f.add(p1[i], f.mul(f.from_index(b), p2[i]));
            test_point(r);
        }
        test_point(p2);
    };

    for (size_t i = 0; i < pts.size(); ++i)
        for (size_t j = i + 1; j < pts.size(); ++j) {
            ++rep.rational_pairs;
            line_points(pts[i], pts[j]);
        }
    rep.exhaustive_rational = true;

    if (include_conjugates) {
        Embedding emb = embed(f, 2);
        const Fq& ext = emb.ext;
        std::unordered_map<uint32_t, uint32_t> back;
        for (uint32_t a = 0; a < f.q(); ++a) back[emb.map[a].v] = a;
        auto pts2 = rational_points(h, 2);
        auto frob = [&](Vec v) {
            for (auto& e : v) e = ext.pow(e, f.q());
            return v;
        };
        auto normalize_ext = [&](Vec v) {
            size_t lead = 0;
            while (lead < v.size() && v[lead] == ext.zero()) ++lead;
            if (lead == v.size()) return v;
            FqElem inv = ext.inv(v[lead]);
            for (auto& e : v) e = ext.mul(e, inv);
            return v;
        };
        std::set<Vec> seen;
        FqElem gamma = ext.gen();
        FqElem gamma_q = ext.pow(gamma, f.q());
        for (const auto& p : pts2) {
            Vec pbar = normalize_ext(frob(p));
            if (pbar == p) continue;  // rational point, already covered
            Vec key = std::min(p, pbar);
            if (!seen.insert(key).second) continue;
            ++rep.conjugate_pairs;
            // Frobenius-fixed spanning vectors of the line: P + Pbar and
            // gamma P + gamma^q Pbar.
            Vec u(p.size()), v(p.size());
            for (size_t i = 0; i < p.size(); ++i) {
                u[i] = ext.add(p[i], pbar[i]);
                v[i] = ext.add(ext.mul(gamma, p[i]), ext.mul(gamma_q, pbar[i]));
            }
            auto pull = [&](const Vec& w) {
                Vec out(w.size());
                for (size_t i = 0; i < w.size(); ++i) {
                    auto it = back.find(w[i].v);
                    if (it == back.end()) throw std::logic_error("conjugate line not rational");
                    out[i] = f.from_index(it->second);
                }
                return out;
            };
            line_points(pull(u), pull(v));
        }
        rep.conjugates_included = true;
    }
    return rep;
}

struct HullReport {
    size_t dim_i2 = 0;
    std::vector<Vec> i2_basis;               // SymVec coordinate rows
    std::map<uint32_t, size_t> point_counts;  // m -> #Z_2(F_{q^m})
    std::vector<Vec> points_m1;
    std::optional<bool> ci_proxy;
    std::optional<bool> canonical_in_hull;
};

inline HullReport fingerprint(const QuadHull& h, uint32_t max_ext,
                              std::optional<size_t> length = std::nullopt,
                              const Algebra* canonical_of = nullptr) {
    HullReport rep;
    rep.dim_i2 = h.dim_i2();
    for (size_t r = 0; r < h.i2.dim(); ++r) rep.i2_basis.push_back(h.i2.basis.row(r));
    for (uint32_t m = 1; m <= max_ext; ++m) {
        auto pts = rational_points(h, m);
        rep.point_counts[m] = pts.size();
        if (m == 1) rep.points_m1 = std::move(pts);
    }
    if (length) rep.ci_proxy = ci_flag(h, *length);
    if (canonical_of) rep.canonical_in_hull = contains_canonical(h, *canonical_of);
    return rep;
}

}  // namespace qh
