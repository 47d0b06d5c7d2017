#pragma once

// Evaluation-interpolation engine: homogeneous multivariate forms over
// F_q, evaluated (plainly or through first-order directional derivatives)
// at points with coordinates in an algebra, the surjectivity/injectivity
// conditions for geometric realizations, the del Pezzo fixture that
// rebuilds the length-13 algorithm for F_{2^5}, and the tautological
// realization on Spec(A x B).

#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "quadhull/algebra.hpp"
#include "quadhull/bcode.hpp"
#include "quadhull/hull.hpp"
#include "quadhull/multred.hpp"

namespace qh {

// Sparse homogeneous form: exponent tuple -> coefficient.
struct Form {
    Fq field;
    size_t num_vars = 0;
    uint32_t degree = 0;
    std::map<std::vector<uint32_t>, FqElem> terms;

    bool is_zero() const { return terms.empty(); }
};

inline Form form_zero(const Fq& f, size_t nv, uint32_t deg) { return Form{f, nv, deg, {}}; }

inline Form form_var(const Fq& f, size_t nv, size_t i) {
    Form r{f, nv, 1, {}};
    std::vector<uint32_t> e(nv, 0);
    e[i] = 1;
    r.terms[e] = f.one();
    return r;
}

inline void form_add_term(Form& r, std::vector<uint32_t> e, FqElem c) {
    if (c == r.field.zero()) return;
    auto it = r.terms.find(e);
    if (it == r.terms.end()) {
        r.terms.emplace(std::move(e), c);
    } else {
        it->second = r.field.add(it->second, c);
        if (it->second == r.field.zero()) r.terms.erase(it);
    }
}

inline Form form_add(const Form& a, const Form& b) {
    if (a.degree != b.degree || a.num_vars != b.num_vars)
        throw std::invalid_argument("form mismatch in add");
    Form r = a;
    for (const auto& [e, c] : b.terms) form_add_term(r, e, c);
    return r;
}

inline Form form_scale(const Form& a, FqElem c) {
    Form r{a.field, a.num_vars, a.degree, {}};
    for (const auto& [e, co] : a.terms) form_add_term(r, e, a.field.mul(co, c));
    return r;
}

inline Form form_mul(const Form& a, const Form& b) {
    if (a.num_vars != b.num_vars) throw std::invalid_argument("form mismatch in mul");
    Form r{a.field, a.num_vars, a.degree + b.degree, {}};
    for (const auto& [ea, ca] : a.terms)
        for (const auto& [eb, cb] : b.terms) {
            std::vector<uint32_t> e(a.num_vars);
            for (size_t i = 0; i < a.num_vars; ++i) e[i] = ea[i] + eb[i];
            form_add_term(r, std::move(e), a.field.mul(ca, cb));
        }
    return r;
}

// Formal partial derivative; exponent coefficients reduce mod p.
inline Form form_partial(const Form& a, size_t var) {
    Form r{a.field, a.num_vars, a.degree > 0 ? a.degree - 1 : 0, {}};
    const Fq& f = a.field;
    for (const auto& [e, c] : a.terms) {
        if (e[var] == 0) continue;
        uint8_t mult = static_cast<uint8_t>(e[var] % f.p());
        if (mult == 0) continue;
        std::vector<uint32_t> d = e;
        --d[var];
        form_add_term(r, std::move(d), f.mul(c, f.from_digits({&mult, 1})));
    }
    return r;
}

inline bool form_homogeneous(const Form& a) {
    for (const auto& [e, c] : a.terms) {
        uint32_t deg = 0;
        for (auto x : e) deg += x;
        if (deg != a.degree) return false;
    }
    return true;
}

// Coefficient of t^order in f(P + t u), computed in R[t]/(t^{order+1});
// this is the Hasse directional derivative, which stays correct in small
// characteristic. Directions have base-field coordinates.
inline Vec form_taylor_coeff(const Form& a, const Algebra& r, const std::vector<Vec>& point,
                             const Vec& direction, uint32_t order) {
    if (point.size() != a.num_vars || direction.size() != a.num_vars)
        throw std::invalid_argument("point arity mismatch");
    const Fq& f = r.field;
    using Trunc = std::vector<Vec>;  // coefficients of t^0..t^order
    auto tmul = [&](const Trunc& x, const Trunc& y) {
        Trunc z(order + 1, Vec(r.k, f.zero()));
        for (uint32_t i = 0; i <= order; ++i)
            for (uint32_t j = 0; i + j <= order; ++j) {
                Vec p = r.mul(x[i], y[j]);
                for (size_t l = 0; l < r.k; ++l) z[i + j][l] = f.add(z[i + j][l], p[l]);
            }
        return z;
    };
    Trunc one(order + 1, Vec(r.k, f.zero()));
    one[0] = r.unit;
    std::vector<std::vector<Trunc>> pows(a.num_vars);
    for (size_t i = 0; i < a.num_vars; ++i) {
        Trunc lin(order + 1, Vec(r.k, f.zero()));
        lin[0] = point[i];
        if (order >= 1)
            for (size_t l = 0; l < r.k; ++l) lin[1][l] = f.mul(direction[i], r.unit[l]);
        pows[i].push_back(one);
        for (uint32_t d = 1; d <= a.degree; ++d) pows[i].push_back(tmul(pows[i].back(), lin));
    }
    Trunc acc(order + 1, Vec(r.k, f.zero()));
    for (const auto& [e, c] : a.terms) {
        Trunc term = one;
        for (size_t i = 0; i < a.num_vars; ++i)
            if (e[i]) term = tmul(term, pows[i][e[i]]);
        for (uint32_t d = 0; d <= order; ++d)
            for (size_t l = 0; l < r.k; ++l)
                acc[d][l] = f.add(acc[d][l], f.mul(c, term[d][l]));
    }
    return acc[order];
}

// Evaluate at a point with coordinates in an algebra over the same base
// field; returns an algebra element.
inline Vec form_eval(const Form& a, const Algebra& r, const std::vector<Vec>& point) {
    if (point.size() != a.num_vars) throw std::invalid_argument("point arity mismatch");
    if (!form_homogeneous(a)) throw std::invalid_argument("form is not homogeneous");
    bool nonzero = false;
    for (const auto& coord : point)
        for (auto e : coord)
            if (e != r.field.zero()) nonzero = true;
    if (!nonzero) throw std::invalid_argument("evaluation at the zero point");
    // Powers of each coordinate up to the degree.
    std::vector<std::vector<Vec>> pows(a.num_vars);
    for (size_t i = 0; i < a.num_vars; ++i) {
        pows[i].push_back(r.unit);
        for (uint32_t d = 1; d <= a.degree; ++d) pows[i].push_back(r.mul(pows[i].back(), point[i]));
    }
    Vec acc(r.k, r.field.zero());
    for (const auto& [e, c] : a.terms) {
        Vec term = r.unit;
        for (size_t i = 0; i < a.num_vars; ++i)
            if (e[i]) term = r.mul(term, pows[i][e[i]]);
        for (size_t l = 0; l < r.k; ++l) acc[l] = r.field.add(acc[l], r.field.mul(c, term[l]));
    }
    return acc;
}

// ---------------------------------------------------------------------------

struct LinearSystem {
    size_t num_vars = 0;
    uint32_t degree = 0;
    std::vector<Form> basis;
};

inline LinearSystem make_linear_system(std::vector<Form> basis) {
    if (basis.empty()) throw std::invalid_argument("empty linear system");
    LinearSystem v{basis[0].num_vars, basis[0].degree, std::move(basis)};
    for (const auto& f : v.basis) {
        if (f.num_vars != v.num_vars || f.degree != v.degree || !form_homogeneous(f))
            throw std::invalid_argument("system forms must be homogeneous of equal degree");
    }
    return v;
}

struct EvalDirective {
    Algebra target;
    std::vector<Vec> point;  // coordinates in target
    std::optional<Vec> direction;  // base-field direction for a first derivative

    static EvalDirective value_at(Algebra t, std::vector<Vec> pt) {
        return {std::move(t), std::move(pt), std::nullopt};
    }
    static EvalDirective derivative_at(Algebra t, std::vector<Vec> pt, Vec dir) {
        return {std::move(t), std::move(pt), std::move(dir)};
    }
};

struct EvalColumns {
    std::vector<std::vector<Vec>> columns;  // columns[j][i]: form i at directive j
    std::vector<size_t> widths;

    // Flatten algebra-valued entries to base-field coordinates.
    Mat flatten(const Fq& f, size_t nforms) const {
        size_t total = 0;
        for (auto w : widths) total += w;
        Mat m(f, nforms, total);
        size_t off = 0;
        for (size_t j = 0; j < columns.size(); ++j) {
            for (size_t i = 0; i < nforms; ++i)
                for (size_t c = 0; c < widths[j]; ++c) m.at(i, off + c) = columns[j][i][c];
            off += widths[j];
        }
        return m;
    }
};

inline EvalColumns eval_system(const LinearSystem& v, const std::vector<EvalDirective>& dirs) {
    EvalColumns out;
    for (const auto& d : dirs) {
        std::vector<Vec> col;
        for (const auto& f : v.basis) {
            Form g = f;
            if (d.direction) {
                Form acc = form_zero(f.field, f.num_vars, f.degree > 0 ? f.degree - 1 : 0);
                for (size_t j = 0; j < f.num_vars; ++j) {
                    if ((*d.direction)[j] == f.field.zero()) continue;
                    acc = form_add(acc, form_scale(form_partial(f, j), (*d.direction)[j]));
                }
                g = std::move(acc);
            }
            if (g.is_zero()) {
                col.push_back(Vec(d.target.k, d.target.field.zero()));
            } else {
                col.push_back(form_eval(g, d.target, d.point));
            }
        }
        out.columns.push_back(std::move(col));
        out.widths.push_back(d.target.k);
    }
    return out;
}

// Coefficient matrix of a list of forms over their joint monomial support.
inline Mat form_coeff_matrix(const Fq& f, const std::vector<Form>& forms) {
    std::map<std::vector<uint32_t>, size_t> mono;
    for (const auto& g : forms)
        for (const auto& [e, c] : g.terms) mono.emplace(e, 0);
    size_t idx = 0;
    for (auto& [e, i] : mono) i = idx++;
    Mat m(f, forms.size(), mono.size());
    for (size_t r = 0; r < forms.size(); ++r)
        for (const auto& [e, c] : forms[r].terms) m.at(r, mono.at(e)) = c;
    return m;
}

// Text format: header "q num_vars degree count", then one form per line
// as coeff:exponent-tuple terms separated by spaces (single digits per
// exponent), e.g. "1:210 1:111" = x^2 y + x y z.
inline LinearSystem linear_system_from_text(const std::string& text) {
    std::istringstream is(text);
    uint32_t q, degree;
    size_t num_vars, count;
    if (!(is >> q >> num_vars >> degree >> count))
        throw std::invalid_argument("bad linear system header");
    Fq f = field_of_order(q);
    std::string line;
    std::getline(is, line);
    std::vector<Form> basis;
    for (size_t i = 0; i < count; ++i) {
        if (!std::getline(is, line)) throw std::invalid_argument("missing form line");
        Form g = form_zero(f, num_vars, degree);
        std::istringstream ls(line);
        std::string term;
        while (ls >> term) {
            auto colon = term.find(':');
            if (colon == std::string::npos) throw std::invalid_argument("bad term: " + term);
            FqElem coeff = f.parse(term.substr(0, colon));
            std::string exps = term.substr(colon + 1);
            if (exps.size() != num_vars) throw std::invalid_argument("bad exponent tuple: " + term);
            std::vector<uint32_t> e(num_vars);
            for (size_t v = 0; v < num_vars; ++v) {
                if (exps[v] < '0' || exps[v] > '9') throw std::invalid_argument("bad exponent");
                e[v] = static_cast<uint32_t>(exps[v] - '0');
            }
            form_add_term(g, std::move(e), coeff);
        }
        basis.push_back(std::move(g));
    }
    return make_linear_system(std::move(basis));
}

inline std::string linear_system_to_text(const LinearSystem& v) {
    const Fq& f = v.basis[0].field;
    std::ostringstream os;
    os << f.q() << ' ' << v.num_vars << ' ' << v.degree << ' ' << v.basis.size() << '\n';
    for (const auto& g : v.basis) {
        bool first = true;
        for (const auto& [e, c] : g.terms) {
            if (!first) os << ' ';
            first = false;
            os << f.to_string(c) << ':';
            for (auto x : e) os << x;
        }
        os << '\n';
    }
    return os.str();
}

struct ConditionsReport {
    bool surjective_at_q = false;
    bool bijective_at_q = false;
    bool square_injective_at_p = false;
    size_t dim_v2 = 0;
};

// Conditions (i) and (ii) for a geometric realization: V evaluates onto
// the Q-fiber, and the pairwise-product system V^(2) evaluates injectively
// at the P-directives. Injectivity is rank(C2) == rank(P2): the product
// coefficient matrix and its evaluation matrix.
inline ConditionsReport check_conditions(const LinearSystem& v,
                                         const std::vector<EvalDirective>& q_dirs,
                                         const std::vector<EvalDirective>& p_dirs) {
    const Fq& f = v.basis[0].field;
    ConditionsReport rep;
    Mat mq = eval_system(v, q_dirs).flatten(f, v.basis.size());
    size_t rq = rank(mq);
    rep.surjective_at_q = rq == mq.cols;
    rep.bijective_at_q = rep.surjective_at_q && v.basis.size() == mq.cols;

    std::vector<Form> prods;
    for (size_t i = 0; i < v.basis.size(); ++i)
        for (size_t j = i; j < v.basis.size(); ++j) prods.push_back(form_mul(v.basis[i], v.basis[j]));

    // Sections of the squared sheaf vanish to order 2 at a blown-up point,
    // so a derivative directive reads the second-order Taylor coefficient
    // along its direction.
    EvalColumns cols;
    for (const auto& d : p_dirs) {
        std::vector<Vec> col;
        for (const auto& g : prods) {
            if (d.direction)
                col.push_back(form_taylor_coeff(g, d.target, d.point, *d.direction, 2));
            else
                col.push_back(form_eval(g, d.target, d.point));
        }
        cols.columns.push_back(std::move(col));
        cols.widths.push_back(d.target.k);
    }
    Mat p2 = cols.flatten(f, prods.size());
    Mat c2 = form_coeff_matrix(f, prods);
    rep.dim_v2 = rank(c2);
    rep.square_injective_at_p = rank(p2) == rep.dim_v2;
    return rep;
}

// ---------------------------------------------------------------------------
// The del Pezzo fixture: evaluation-interpolation on the degree-4 surface
// obtained by blowing up the plane conic configuration over F_2. The five
// printed cubics span V; the lift basis is the right inverse of
// evaluation at R1 = (g^2 : g^3 : 1), and the 13 evaluation directives
// are the three tangent directions at each of P1, P2, P3 followed by the
// four remaining rational points of the plane.

inline const std::vector<std::string>& delpezzo_phi_rows() {
    static const std::vector<std::string> rows = {
        "1100000001101", "0001100001011", "1101010110111", "1100001101010", "1010001011100"};
    return rows;
}

// Printed 5x13 adjoint; the map F_2^13 -> F_{2^5} is its transpose.
inline const std::vector<std::string>& delpezzo_omega_rows() {
    static const std::vector<std::string> rows = {
        "1000110111011", "1101001010101", "0100000111111", "1011111110100", "1101010110010"};
    return rows;
}

inline Mat delpezzo_paper_phi(const Fq& f2) {
    Mat m(f2, 5, 13);
    const auto& rows = delpezzo_phi_rows();
    for (size_t r = 0; r < 5; ++r)
        for (size_t c = 0; c < 13; ++c) m.at(r, c) = FqElem{static_cast<uint32_t>(rows[r][c] - '0')};
    return m;
}

inline Mat delpezzo_paper_omega(const Fq& f2) {
    Mat m(f2, 13, 5);
    const auto& rows = delpezzo_omega_rows();
    for (size_t r = 0; r < 5; ++r)
        for (size_t c = 0; c < 13; ++c) m.at(c, r) = FqElem{static_cast<uint32_t>(rows[r][c] - '0')};
    return m;
}

struct DelPezzo {
    MultReduction reduction;
    LinearSystem printed_basis;      // v_0..v_4 as printed
    LinearSystem lifted_basis;       // right-inverse lift at R1
    Mat lift;                        // lifted[i] = sum_j lift[i][j] printed[j]
    Subspace printed_relations;      // quadratic relations among v_0..v_4
    std::vector<Vec> quadrics;       // the two generating relations
    BCode code;
};

inline DelPezzo build_delpezzo() {
    Fq f2 = make_field(2, 1);
    Algebra f2alg = make_gfext(2, 1);
    Algebra a32 = make_gfext(2, 5);
    if (a32.field != f2) throw std::logic_error("base field mismatch");

    const size_t nv = 3;
    Form x = form_var(f2, nv, 0), y = form_var(f2, nv, 1), z = form_var(f2, nv, 2);
    Form conic = form_add(form_add(form_mul(x, y), form_mul(x, z)), form_mul(y, z));
    Form quadric2 = form_add(form_mul(x, y), form_mul(z, z));  // xy + z^2
    std::vector<Form> v;
    v.push_back(form_mul(x, conic));
    v.push_back(form_mul(y, conic));
    v.push_back(form_add(form_mul(form_mul(x, y), form_add(form_add(x, y), z)), form_mul(x, quadric2)));
    v.push_back(form_mul(form_add(x, z), conic));
    v.push_back(form_mul(x, quadric2));
    LinearSystem printed = make_linear_system(v);

    // Self-check: every v_i vanishes at P1,P2,P3 and at the conjugate
    // quadratic points Q = (1 : a : a^2) of the conic.
    Algebra f4 = make_gfext(2, 2);
    auto f2pt = [&](uint32_t a, uint32_t b, uint32_t c) {
        return std::vector<Vec>{Vec{FqElem{a}}, Vec{FqElem{b}}, Vec{FqElem{c}}};
    };
    Vec alpha = f4.basis_vec(1);
    std::vector<Vec> qpoint = {f4.unit, alpha, f4.mul(alpha, alpha)};
    for (const auto& form : printed.basis) {
        for (auto pt : {f2pt(1, 0, 0), f2pt(0, 1, 0), f2pt(0, 0, 1)}) {
            Vec val = form_eval(form, f2alg, pt);
            if (val != Vec{f2.zero()}) throw std::logic_error("cubic does not vanish at a base point");
        }
        Vec val = form_eval(form, f4, qpoint);
        if (val != Vec(2, f2.zero())) throw std::logic_error("cubic does not vanish at Q");
    }

    // Lift basis: w_i the unique element of V with w_i(R1) = g^i.
    Vec g = a32.basis_vec(1);
    std::vector<Vec> r1 = {a32.mul(g, g), a32.mul(a32.mul(g, g), g), a32.unit};
    Mat mq = eval_system(printed, {EvalDirective::value_at(a32, r1)}).flatten(f2, 5);
    auto mq_inv = mat_inverse(mq);
    if (!mq_inv) throw std::logic_error("evaluation at R1 is not bijective");
    std::vector<Form> lifted;
    for (size_t i = 0; i < 5; ++i) {
        Form w = form_zero(f2, nv, 3);
        for (size_t j = 0; j < 5; ++j)
            if (mq_inv->at(i, j) != f2.zero()) w = form_add(w, printed.basis[j]);
        lifted.push_back(std::move(w));
    }
    LinearSystem lift_sys = make_linear_system(lifted);

    // 13 directives: tangent directions at P1, P2, P3 (three rational
    // directions each), then the plain points P4..P7.
    std::vector<EvalDirective> dirs;
    auto dir3 = [&](uint32_t a, uint32_t b, uint32_t c) { return Vec{FqElem{a}, FqElem{b}, FqElem{c}}; };
    auto add_derivs = [&](std::vector<Vec> pt, Vec d1, Vec d2) {
        Vec d3(3);
        for (size_t i = 0; i < 3; ++i) d3[i] = f2.add(d1[i], d2[i]);
        dirs.push_back(EvalDirective::derivative_at(f2alg, pt, d1));
        dirs.push_back(EvalDirective::derivative_at(f2alg, pt, d2));
        dirs.push_back(EvalDirective::derivative_at(f2alg, std::move(pt), d3));
    };
    add_derivs(f2pt(1, 0, 0), dir3(0, 1, 0), dir3(0, 0, 1));
    add_derivs(f2pt(0, 1, 0), dir3(1, 0, 0), dir3(0, 0, 1));
    add_derivs(f2pt(0, 0, 1), dir3(1, 0, 0), dir3(0, 1, 0));
    dirs.push_back(EvalDirective::value_at(f2alg, f2pt(1, 1, 0)));
    dirs.push_back(EvalDirective::value_at(f2alg, f2pt(1, 0, 1)));
    dirs.push_back(EvalDirective::value_at(f2alg, f2pt(0, 1, 1)));
    dirs.push_back(EvalDirective::value_at(f2alg, f2pt(1, 1, 1)));

    auto cond = check_conditions(lift_sys, {EvalDirective::value_at(a32, r1)}, dirs);
    if (!cond.bijective_at_q || !cond.square_injective_at_p)
        throw std::logic_error("geometric realization conditions failed");

    Mat phi = eval_system(lift_sys, dirs).flatten(f2, 5);
    if (!(phi == delpezzo_paper_phi(f2))) throw std::logic_error("phi does not match the stored matrix");

    Algebra b13 = make_vec_algebra(2, 13);
    Mat omega = adjoint(a32, b13, phi);
    if (!(omega == delpezzo_paper_omega(f2))) throw std::logic_error("omega does not match the stored matrix");

    // The two stored quadrics cut out the surface in the coordinates of
    // the anticanonical embedding, i.e. the code's own coordinate system:
    // they must span I_2 of the code exactly. Relations among the printed
    // cubics are the same space pushed through the lift substitution.
    SymIndex sx(5);
    auto qform = [&](std::initializer_list<std::pair<size_t, size_t>> pairs) {
        Vec q(sx.dim(), f2.zero());
        for (auto [i, j] : pairs) q[sx.index(i, j)] = f2.one();
        return q;
    };
    // v0^2 + v0 v2 + v1 v4 and v0(v0+v1+v3+v4) + v3(v2+v3+v4)
    Vec q1 = qform({{0, 0}, {0, 2}, {1, 4}});
    Vec q2 = qform({{0, 0}, {0, 1}, {0, 3}, {0, 4}, {2, 3}, {3, 3}, {3, 4}});
    Subspace quadric_span = span_of(f2, {q1, q2}, sx.dim());
    Subspace i2 = i2_of_phi(b13, phi);
    if (!(i2 == quadric_span)) throw std::logic_error("quadric relations do not match I_2");

    std::vector<Form> prods;
    for (auto [i, j] : sx.pairs) prods.push_back(form_mul(printed.basis[i], printed.basis[j]));
    Subspace relations = kernel(mat_transpose(form_coeff_matrix(f2, prods)));
    std::vector<Vec> pushed;
    for (size_t r = 0; r < i2.dim(); ++r)
        pushed.push_back(sym_substitute(f2, sx, i2.basis.row(r), *mq_inv));
    if (!(span_of(f2, pushed, sx.dim()) == relations))
        throw std::logic_error("lift substitution does not map I_2 onto the printed relations");

    DelPezzo dp{MultReduction{a32, b13, phi, omega}, std::move(printed),
                std::move(lift_sys), *mq_inv, std::move(relations),
                {std::move(q1), std::move(q2)}, BCode{}};
    dp.code = code_of(dp.reduction);
    return dp;
}

// ---------------------------------------------------------------------------
// Tautological realization on Spec(A x B): the supercode of a verified
// reduction, with Q the first projection and P the second, re-derives phi.

struct TautologicalReport {
    bool cond_i_bijective = false;
    bool cond_ii_injective = false;
    Mat rederived_phi;
    bool matches = false;
};

inline TautologicalReport tautological_realization(const MultReduction& r) {
    Supercode s = make_supercode(r);
    const Fq& f = s.basis.field;
    TautologicalReport rep;

    Mat apart(f, s.basis.rows, r.a.k), bpart(f, s.basis.rows, r.b.k);
    for (size_t i = 0; i < s.basis.rows; ++i) {
        for (size_t c = 0; c < r.a.k; ++c) apart.at(i, c) = s.basis.at(i, c);
        for (size_t c = 0; c < r.b.k; ++c) bpart.at(i, c) = s.basis.at(i, r.a.k + c);
    }
    rep.cond_i_bijective = rank(apart) == r.a.k && s.basis.rows == r.a.k;
    rep.cond_ii_injective = is_supercode(s, r.a, r.b);

    // Lift a_i through the first projection, evaluate at the second.
    auto ainv = mat_inverse(apart);
    if (!ainv) throw std::logic_error("first projection not bijective");
    rep.rederived_phi = mat_mul(*ainv, bpart);
    rep.matches = rep.rederived_phi == r.phi;
    return rep;
}

}  // namespace qh
