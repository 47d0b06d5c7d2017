#pragma once

// Finite-dimensional commutative F_q-algebras with unity, presented by
// structure constants over a fixed basis a_0..a_{k-1}:
//   a_i a_j = sum_l c[i][j][l] a_l.
// Constructors produce the local decomposition (CRT factors for quotient
// algebras, concatenation for products); raw structure-constant input
// carries an empty factor list and operations needing factors reject it.

#include <cstdint>
#include <functional>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "quadhull/fq.hpp"
#include "quadhull/linalg.hpp"
#include "quadhull/symmetric.hpp"

namespace qh {

struct Algebra;

struct LocalFactor {
    std::shared_ptr<const Algebra> alg;
    Mat proj;  // k x dim(factor), row convention: pi(x) = x * proj
};

struct Algebra {
    Fq field;
    size_t k = 0;
    std::vector<FqElem> sc;  // k*k*k structure constants
    Vec unit;
    std::vector<LocalFactor> factors;  // empty when locality unknown
    std::string label;

    FqElem c(size_t i, size_t j, size_t l) const { return sc[(i * k + j) * k + l]; }
    FqElem& c_ref(size_t i, size_t j, size_t l) { return sc[(i * k + j) * k + l]; }

    Vec mul(const Vec& x, const Vec& y) const {
        const Fq& f = field;
        Vec out(k, f.zero());
        for (size_t i = 0; i < k; ++i) {
            if (x[i] == f.zero()) continue;
            for (size_t j = 0; j < k; ++j) {
                if (y[j] == f.zero()) continue;
                FqElem xy = f.mul(x[i], y[j]);
                for (size_t l = 0; l < k; ++l)
                    out[l] = f.add(out[l], f.mul(xy, c(i, j, l)));
            }
        }
        return out;
    }

    // Multiplication-by-x matrix, row j = coordinates of x * a_j.
    Mat mult_matrix(const Vec& x) const {
        Mat m(field, k, k);
        for (size_t j = 0; j < k; ++j) {
            for (size_t i = 0; i < k; ++i) {
                if (x[i] == field.zero()) continue;
                for (size_t l = 0; l < k; ++l)
                    m.at(j, l) = field.add(m.at(j, l), field.mul(x[i], c(i, j, l)));
            }
        }
        return m;
    }

    bool is_unit(const Vec& x) const { return rank(mult_matrix(x)) == k; }

    Vec inverse(const Vec& x) const {
        auto sol = solve(mat_transpose(mult_matrix(x)), unit);
        if (!sol) throw std::invalid_argument("element is not invertible");
        return *sol;
    }

    Vec basis_vec(size_t i) const {
        Vec v(k, field.zero());
        v[i] = field.one();
        return v;
    }

    Vec element_from_index(uint64_t idx) const {
        Vec v(k);
        for (size_t i = 0; i < k; ++i) {
            v[i] = field.from_index(static_cast<uint32_t>(idx % field.q()));
            idx /= field.q();
        }
        return v;
    }
    uint64_t element_count() const {
        uint64_t n = 1;
        for (size_t i = 0; i < k; ++i) n *= field.q();
        return n;
    }

    bool same_structure(const Algebra& o) const {
        return field == o.field && k == o.k && sc == o.sc;
    }

    // True when the algebra is F_q^n with coordinatewise multiplication.
    bool is_coordinatewise() const {
        for (size_t i = 0; i < k; ++i)
            for (size_t j = 0; j < k; ++j)
                for (size_t l = 0; l < k; ++l) {
                    bool expect = (i == j && j == l);
                    if ((c(i, j, l) == field.one()) != expect) return false;
                    if (c(i, j, l) != field.zero() && c(i, j, l) != field.one()) return false;
                }
        return true;
    }
};

namespace detail {

inline void check_algebra_axioms(const Algebra& a) {
    const Fq& f = a.field;
    for (size_t i = 0; i < a.k; ++i)
        for (size_t j = 0; j < a.k; ++j)
            for (size_t l = 0; l < a.k; ++l)
                if (a.c(i, j, l) != a.c(j, i, l))
                    throw std::invalid_argument("structure constants not commutative");
    for (size_t j = 0; j < a.k; ++j) {
        Vec got = a.mul(a.unit, a.basis_vec(j));
        if (got != a.basis_vec(j)) throw std::invalid_argument("unit does not act as identity");
    }
    if (a.k <= 8) {
        for (size_t i = 0; i < a.k; ++i)
            for (size_t j = 0; j < a.k; ++j)
                for (size_t l = 0; l < a.k; ++l) {
                    Vec lhs = a.mul(a.mul(a.basis_vec(i), a.basis_vec(j)), a.basis_vec(l));
                    Vec rhs = a.mul(a.basis_vec(i), a.mul(a.basis_vec(j), a.basis_vec(l)));
                    if (lhs != rhs) throw std::invalid_argument("structure constants not associative");
                }
    }
    (void)f;
}

// Factor-list sanity: assembled projection bijective and multiplicative on
// basis pairs.
inline void check_factors(const Algebra& a) {
    if (a.factors.empty()) return;
    size_t total = 0;
    for (const auto& fac : a.factors) total += fac.alg->k;
    if (total != a.k) throw std::invalid_argument("factor dimensions do not sum to k");
    Mat assembled(a.field, a.k, a.k);
    size_t off = 0;
    for (const auto& fac : a.factors) {
        for (size_t r = 0; r < a.k; ++r)
            for (size_t c = 0; c < fac.alg->k; ++c) assembled.at(r, off + c) = fac.proj.at(r, c);
        off += fac.alg->k;
    }
    if (rank(assembled) != a.k) throw std::invalid_argument("CRT projection not bijective");
    for (size_t i = 0; i < a.k; ++i)
        for (size_t j = i; j < a.k; ++j) {
            Vec prod = a.mul(a.basis_vec(i), a.basis_vec(j));
            for (const auto& fac : a.factors) {
                Vec pi = mat_vec_rowform(fac.proj, a.basis_vec(i));
                Vec pj = mat_vec_rowform(fac.proj, a.basis_vec(j));
                Vec lhs = mat_vec_rowform(fac.proj, prod);
                Vec rhs = fac.alg->mul(pi, pj);
                if (lhs != rhs) throw std::invalid_argument("projection not multiplicative");
            }
        }
}

inline Poly default_ext_modulus(const Fq& base, uint32_t deg) {
    uint64_t count = 1;
    for (uint32_t i = 0; i < deg; ++i) count *= base.q();
    for (uint64_t idx = 0; idx < count; ++idx) {
        Poly g = poly_from_enum_index(base, deg, idx);
        if (g.coeff(0) == base.zero()) continue;  // divisible by t
        if (poly_irreducible(g)) return g;
    }
    throw std::logic_error("no irreducible modulus found");
}

}  // namespace detail

// F_q[t]/(f) with basis 1, t, ..., t^{deg-1} and CRT local factors.
inline Algebra make_quotient(const Poly& f_in, bool decompose = true) {
    Poly f = poly_trim(f_in);
    if (!f.is_monic() || f.degree() < 1)
        throw std::invalid_argument("quotient modulus must be monic of degree >= 1");
    const Fq& F = f.field;
    size_t k = static_cast<size_t>(f.degree());
    Algebra a;
    a.field = F;
    a.k = k;
    a.sc.assign(k * k * k, F.zero());
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < k; ++j) {
            Poly r = poly_mod(poly_mul(poly_monomial(F, i), poly_monomial(F, j)), f);
            for (size_t l = 0; l < k; ++l) a.c_ref(i, j, l) = r.coeff(l);
        }
    a.unit = a.basis_vec(0);
    a.label = "quot(" + poly_to_string(f) + ")";

    if (decompose) {
        auto fac = factor_poly(f);
        for (auto& [g, mult] : fac) {
            Poly ge = poly_monomial(F, 0);
            for (uint32_t i = 0; i < mult; ++i) ge = poly_mul(ge, g);
            auto local = std::make_shared<Algebra>(make_quotient(ge, false));
            Mat proj(F, k, local->k);
            for (size_t i = 0; i < k; ++i) {
                Poly r = poly_mod(poly_monomial(F, i), ge);
                for (size_t c = 0; c < local->k; ++c) proj.at(i, c) = r.coeff(c);
            }
            a.factors.push_back({std::move(local), std::move(proj)});
        }
    }
    detail::check_algebra_axioms(a);
    detail::check_factors(a);
    return a;
}

inline Algebra make_quotient(uint32_t q, const Poly& f) {
    if (f.field.q() != q) throw std::invalid_argument("polynomial field does not match q");
    return make_quotient(f);
}

// The field extension F_{q^k} as a k-dimensional algebra over F_q with
// power basis 1, g, ..., g^{k-1}; its own single local factor.
inline Algebra make_gfext(uint32_t q, uint32_t k) {
    Fq F = field_of_order(q);
    if (k == 1) {
        Algebra a = make_quotient(detail::default_ext_modulus(F, 1), false);
        auto self = std::make_shared<Algebra>(a);
        a.factors.push_back({self, Mat::identity(F, 1)});
        a.label = "gfext:" + std::to_string(q) + ":1";
        return a;
    }
    Poly mod = detail::default_ext_modulus(F, k);
    Algebra a = make_quotient(mod, false);
    auto self = std::make_shared<Algebra>(a);
    a.factors.push_back({self, Mat::identity(F, k)});
    a.label = "gfext:" + std::to_string(q) + ":" + std::to_string(k);
    detail::check_factors(a);
    return a;
}

inline Algebra make_truncated(uint32_t q, uint32_t k) {
    Fq F = field_of_order(q);
    Algebra a = make_quotient(poly_monomial(F, k));
    a.label = "trunc:" + std::to_string(q) + ":" + std::to_string(k);
    return a;
}

inline Algebra product(const Algebra& a1, const Algebra& a2) {
    if (a1.field != a2.field) throw std::invalid_argument("product requires the same base field");
    const Fq& F = a1.field;
    Algebra a;
    a.field = F;
    a.k = a1.k + a2.k;
    a.sc.assign(a.k * a.k * a.k, F.zero());
    for (size_t i = 0; i < a1.k; ++i)
        for (size_t j = 0; j < a1.k; ++j)
            for (size_t l = 0; l < a1.k; ++l) a.c_ref(i, j, l) = a1.c(i, j, l);
    for (size_t i = 0; i < a2.k; ++i)
        for (size_t j = 0; j < a2.k; ++j)
            for (size_t l = 0; l < a2.k; ++l)
                a.c_ref(a1.k + i, a1.k + j, a1.k + l) = a2.c(i, j, l);
    a.unit.assign(a.k, F.zero());
    for (size_t i = 0; i < a1.k; ++i) a.unit[i] = a1.unit[i];
    for (size_t i = 0; i < a2.k; ++i) a.unit[a1.k + i] = a2.unit[i];
    a.label = "prod(" + a1.label + "," + a2.label + ")";
    if (!a1.factors.empty() && !a2.factors.empty()) {
        for (const auto& fac : a1.factors) {
            Mat proj(F, a.k, fac.alg->k);
            for (size_t r = 0; r < a1.k; ++r)
                for (size_t c = 0; c < fac.alg->k; ++c) proj.at(r, c) = fac.proj.at(r, c);
            a.factors.push_back({fac.alg, std::move(proj)});
        }
        for (const auto& fac : a2.factors) {
            Mat proj(F, a.k, fac.alg->k);
            for (size_t r = 0; r < a2.k; ++r)
                for (size_t c = 0; c < fac.alg->k; ++c) proj.at(a1.k + r, c) = fac.proj.at(r, c);
            a.factors.push_back({fac.alg, std::move(proj)});
        }
    }
    detail::check_algebra_axioms(a);
    detail::check_factors(a);
    return a;
}

// F_q^n with componentwise multiplication.
inline Algebra make_vec_algebra(uint32_t q, size_t n) {
    Fq F = field_of_order(q);
    Algebra a;
    a.field = F;
    a.k = n;
    a.sc.assign(n * n * n, F.zero());
    for (size_t i = 0; i < n; ++i) a.c_ref(i, i, i) = F.one();
    a.unit.assign(n, F.one());
    a.label = "vec:" + std::to_string(q) + ":" + std::to_string(n);
    auto atom = std::make_shared<Algebra>(make_gfext(q, 1));
    for (size_t i = 0; i < n; ++i) {
        Mat proj(F, n, 1);
        proj.at(i, 0) = F.one();
        a.factors.push_back({atom, std::move(proj)});
    }
    detail::check_algebra_axioms(a);
    detail::check_factors(a);
    return a;
}

// Arbitrary structure constants; unit solved for, factor list left empty.
inline Algebra make_raw(const Fq& F, size_t k, std::vector<FqElem> sc, std::string label = "raw") {
    if (sc.size() != k * k * k) throw std::invalid_argument("bad structure constant count");
    Algebra a;
    a.field = F;
    a.k = k;
    a.sc = std::move(sc);
    a.label = std::move(label);
    // Solve sum_i u_i c[i][j][l] = delta_{jl} for the unit.
    Mat m(F, k * k, k);
    Vec rhs(k * k, F.zero());
    for (size_t j = 0; j < k; ++j)
        for (size_t l = 0; l < k; ++l) {
            for (size_t i = 0; i < k; ++i) m.at(j * k + l, i) = a.c(i, j, l);
            rhs[j * k + l] = (j == l) ? F.one() : F.zero();
        }
    auto u = solve(m, rhs);
    if (!u) throw std::invalid_argument("algebra has no unit");
    a.unit = *u;
    detail::check_algebra_axioms(a);
    return a;
}

inline Algebra load_raw_algebra(std::istream& is, std::string label = "raw") {
    uint32_t q;
    size_t k;
    if (!(is >> q >> k)) throw std::invalid_argument("bad raw algebra header");
    Fq F = field_of_order(q);
    std::vector<FqElem> sc(k * k * k, F.zero());
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < k; ++j)
            for (size_t l = 0; l < k; ++l) {
                std::string tok;
                if (!(is >> tok)) throw std::invalid_argument("raw algebra entry missing");
                sc[(i * k + j) * k + l] = F.parse(tok);
            }
    return make_raw(F, k, std::move(sc), std::move(label));
}

// ---------------------------------------------------------------------------
// Multiplication tensor data: xy = sum_l B_l(x,y) a_l. B_l has SymVec
// coordinate c[i][j][l] at pair (i<=j); T = <B_1..B_k> is the target
// subspace any algorithm span W must contain.

struct MultTensorData {
    SymIndex sx{0};
    std::vector<Vec> bforms;
    Subspace target;
};

inline MultTensorData mult_tensor(const Algebra& a) {
    MultTensorData t{SymIndex(a.k), {}, {}};
    for (size_t l = 0; l < a.k; ++l) {
        Vec b(t.sx.dim());
        for (size_t idx = 0; idx < t.sx.dim(); ++idx) {
            auto [i, j] = t.sx.pairs[idx];
            b[idx] = a.c(i, j, l);
        }
        t.bforms.push_back(std::move(b));
    }
    t.target = span_of(a.field, t.bforms, t.sx.dim());
    if (t.target.dim() != a.k)
        throw std::logic_error("multiplication tensor target has wrong dimension");
    return t;
}

// Canonical point Q_A = (a_1 : ... : a_k); the coordinates are the basis
// itself, so in the fixed basis this is the identity row list. Consumers
// test membership in quadratic hulls via canonical_vanishes.
inline std::vector<Vec> canonical_point(const Algebra& a) {
    std::vector<Vec> rows;
    for (size_t i = 0; i < a.k; ++i) rows.push_back(a.basis_vec(i));
    return rows;
}

// sum_{i<=j} q_ij a_i a_j == 0 in A, i.e. the form vanishes at Q_A.
inline bool canonical_vanishes(const Algebra& a, const SymIndex& sx, const Vec& form) {
    const Fq& f = a.field;
    Vec acc(a.k, f.zero());
    for (size_t idx = 0; idx < sx.dim(); ++idx) {
        if (form[idx] == f.zero()) continue;
        auto [i, j] = sx.pairs[idx];
        for (size_t l = 0; l < a.k; ++l)
            acc[l] = f.add(acc[l], f.mul(form[idx], a.c(i, j, l)));
    }
    for (auto e : acc)
        if (e != f.zero()) return false;
    return true;
}

// ---------------------------------------------------------------------------
// CLI algebra spec strings: gfext:q:k, trunc:q:k, quot:q:<poly>,
// prod:<spec>,<spec>[,...], vec:q:n, raw:<file>. Parenthesized specs may
// appear inside prod lists.

inline Algebra parse_algebra_spec(
    const std::string& spec,
    const std::function<std::string(const std::string&)>& file_loader = {});

namespace detail {

inline std::vector<std::string> split_top_level(const std::string& s) {
    std::vector<std::string> parts;
    std::string cur;
    int depth = 0;
    for (char ch : s) {
        if (ch == '(') ++depth;
        if (ch == ')') --depth;
        if (ch == ',' && depth == 0) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    parts.push_back(cur);
    return parts;
}

inline std::string strip_parens(std::string s) {
    while (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
    return s;
}

}  // namespace detail

inline Algebra parse_algebra_spec(const std::string& spec_in,
                                  const std::function<std::string(const std::string&)>& file_loader) {
    std::string spec = detail::strip_parens(spec_in);
    auto colon = spec.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("bad algebra spec: " + spec);
    std::string kind = spec.substr(0, colon);
    std::string rest = spec.substr(colon + 1);
    auto parse_u32 = [](const std::string& s) {
        size_t pos = 0;
        unsigned long v = std::stoul(s, &pos);
        if (pos != s.size()) throw std::invalid_argument("bad number in algebra spec");
        return static_cast<uint32_t>(v);
    };
    if (kind == "gfext" || kind == "trunc" || kind == "vec" || kind == "quot") {
        auto colon2 = rest.find(':');
        if (colon2 == std::string::npos) throw std::invalid_argument("bad algebra spec: " + spec);
        uint32_t q = parse_u32(rest.substr(0, colon2));
        std::string arg = rest.substr(colon2 + 1);
        if (kind == "gfext") return make_gfext(q, parse_u32(arg));
        if (kind == "trunc") return make_truncated(q, parse_u32(arg));
        if (kind == "vec") return make_vec_algebra(q, parse_u32(arg));
        Fq F = field_of_order(q);
        Algebra a = make_quotient(poly_parse(F, arg));
        a.label = spec;
        return a;
    }
    if (kind == "prod") {
        auto parts = detail::split_top_level(rest);
        if (parts.size() < 2) throw std::invalid_argument("prod needs at least two specs");
        Algebra acc = parse_algebra_spec(parts[0], file_loader);
        for (size_t i = 1; i < parts.size(); ++i)
            acc = product(acc, parse_algebra_spec(parts[i], file_loader));
        acc.label = spec;
        return acc;
    }
    if (kind == "raw") {
        if (!file_loader) throw std::invalid_argument("raw spec needs a file loader");
        std::istringstream is(file_loader(rest));
        return load_raw_algebra(is, spec);
    }
    throw std::invalid_argument("unknown algebra spec kind: " + kind);
}

}  // namespace qh
