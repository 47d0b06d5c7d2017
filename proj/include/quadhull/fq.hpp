#pragma once

// Exact arithmetic in small finite fields F_{p^m}, univariate polynomials
// over them, trial-division factorization, and subfield embeddings.
//
// Elements are indices 0..q-1 encoding the coefficient vector of the
// residue polynomial in base p, little-endian: index = sum c_i * p^i.
// This makes the deterministic enumeration order simply 0,1,...,q-1.
// Multiplication runs on discrete log tables built once per field.

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qh {

struct FqElem {
    uint32_t v = 0;
    friend bool operator==(FqElem a, FqElem b) { return a.v == b.v; }
    friend bool operator!=(FqElem a, FqElem b) { return a.v != b.v; }
    friend bool operator<(FqElem a, FqElem b) { return a.v < b.v; }
};

namespace detail {

inline bool is_prime_u32(uint32_t n) {
    if (n < 2) return false;
    for (uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Dense little-endian digit vectors over F_p, used only while building
// field tables and testing moduli.
using Digits = std::vector<uint8_t>;

inline Digits dtrim(Digits a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

inline Digits dmul(const Digits& a, const Digits& b, uint32_t p) {
    if (a.empty() || b.empty()) return {};
    Digits r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = static_cast<uint8_t>((r[i + j] + uint32_t(a[i]) * b[j]) % p);
    return dtrim(std::move(r));
}

// Remainder of a modulo monic m.
inline Digits dmod(Digits a, const Digits& m, uint32_t p) {
    a = dtrim(std::move(a));
    const size_t dm = m.size() - 1;
    while (a.size() > dm) {
        uint32_t lead = a.back();
        size_t shift = a.size() - 1 - dm;
        for (size_t i = 0; i < m.size(); ++i) {
            uint32_t t = (uint32_t(a[shift + i]) + p * p - lead * m[i] % p) % p;
            a[shift + i] = static_cast<uint8_t>(t);
        }
        a = dtrim(std::move(a));
    }
    return a;
}

inline bool ddivides(const Digits& g, Digits f, uint32_t p) {
    return dmod(std::move(f), g, p).empty();
}

// Reducibility by trial division against every monic poly of degree
// 1..deg/2. Reducible trial divisors are harmless: any factor they share
// with f is caught by their own smaller factors as well.
inline bool is_irreducible_fp(const Digits& f, uint32_t p) {
    size_t deg = f.size() - 1;
    if (deg == 0) return false;
    if (deg == 1) return true;
    for (size_t d = 1; 2 * d <= deg; ++d) {
        uint64_t count = 1;
        for (size_t i = 0; i < d; ++i) count *= p;
        for (uint64_t idx = 0; idx < count; ++idx) {
            Digits g(d + 1, 0);
            uint64_t t = idx;
            for (size_t i = 0; i < d; ++i) { g[i] = static_cast<uint8_t>(t % p); t /= p; }
            g[d] = 1;
            if (ddivides(g, f, p)) return false;
        }
    }
    return true;
}

// Smallest monic irreducible of degree m over F_p, candidates ordered by
// the little-endian index of the coefficient vector (constant term
// fastest). For (p,m)=(2,5) this yields t^5+t^2+1.
inline Digits smallest_irreducible(uint32_t p, uint32_t m) {
    uint64_t count = 1;
    for (uint32_t i = 0; i < m; ++i) count *= p;
    for (uint64_t idx = 0; idx < count; ++idx) {
        Digits f(m + 1, 0);
        uint64_t t = idx;
        for (uint32_t i = 0; i < m; ++i) { f[i] = static_cast<uint8_t>(t % p); t /= p; }
        f[m] = 1;
        if (is_irreducible_fp(f, p)) return f;
    }
    throw std::logic_error("no irreducible polynomial found");  // unreachable
}

}  // namespace detail

class Fq {
    struct Data {
        uint32_t p = 0, m = 0, q = 0;
        detail::Digits modulus;          // monic, degree m over F_p
        std::vector<uint8_t> digits;     // q*m, digits of each index
        std::vector<uint32_t> logt;      // size q, logt[0] unused
        std::vector<uint32_t> expt;      // size 2*(q-1)
        uint32_t gen = 0;
    };
    std::shared_ptr<const Data> d_;

    explicit Fq(std::shared_ptr<const Data> d) : d_(std::move(d)) {}

    static uint32_t index_of(const detail::Digits& dg, uint32_t p, uint32_t m) {
        uint32_t idx = 0;
        for (uint32_t i = m; i-- > 0;) idx = idx * p + (i < dg.size() ? dg[i] : 0);
        return idx;
    }

    uint32_t mul_poly(uint32_t a, uint32_t b) const {
        detail::Digits da(digits(FqElem{a}).begin(), digits(FqElem{a}).end());
        detail::Digits db(digits(FqElem{b}).begin(), digits(FqElem{b}).end());
        auto r = detail::dmod(detail::dmul(detail::dtrim(std::move(da)), detail::dtrim(std::move(db)), d_->p),
                              d_->modulus, d_->p);
        return index_of(r, d_->p, d_->m);
    }

public:
    Fq() = default;

    static Fq make(uint32_t p, uint32_t m) {
        if (m == 0) throw std::invalid_argument("extension degree must be >= 1");
        detail::Digits mod;
        if (m == 1) mod = {0, 1};  // placeholder t
        else mod = detail::smallest_irreducible(p, m);
        return make(p, m, mod);
    }

    static Fq make(uint32_t p, uint32_t m, const detail::Digits& modulus) {
        if (!detail::is_prime_u32(p)) throw std::invalid_argument("p is not prime");
        if (m == 0) throw std::invalid_argument("extension degree must be >= 1");
        if (modulus.size() != m + 1 || modulus[m] != 1)
            throw std::invalid_argument("modulus must be monic of degree m");
        for (auto c : modulus)
            if (c >= p) throw std::invalid_argument("modulus digit out of range");
        if (m > 1 && !detail::is_irreducible_fp(modulus, p))
            throw std::invalid_argument("modulus is reducible");

        auto d = std::make_shared<Data>();
        d->p = p;
        d->m = m;
        uint64_t q = 1;
        for (uint32_t i = 0; i < m; ++i) {
            q *= p;
            if (q > (1u << 24)) throw std::invalid_argument("field too large");
        }
        d->q = static_cast<uint32_t>(q);
        d->modulus = modulus;
        d->digits.resize(size_t(d->q) * m);
        for (uint32_t idx = 0; idx < d->q; ++idx) {
            uint32_t t = idx;
            for (uint32_t i = 0; i < m; ++i) { d->digits[size_t(idx) * m + i] = static_cast<uint8_t>(t % p); t /= p; }
        }

        Fq f(d);
        // Locate a generator of the multiplicative group: order test via the
        // prime factorization of q-1.
        std::vector<uint32_t> primes;
        {
            uint32_t n = d->q - 1;
            for (uint32_t dd = 2; dd * dd <= n; ++dd)
                while (n % dd == 0) { if (primes.empty() || primes.back() != dd) primes.push_back(dd); n /= dd; }
            if (n > 1) primes.push_back(n);
        }
        auto pow_poly = [&](uint32_t a, uint32_t e) {
            uint32_t r = 1;
            while (e) {
                if (e & 1) r = f.mul_poly(r, a);
                a = f.mul_poly(a, a);
                e >>= 1;
            }
            return r;
        };
        uint32_t gen = 1;
        for (uint32_t cand = 1; cand < d->q; ++cand) {
            bool ok = true;
            for (uint32_t pr : primes)
                if (pow_poly(cand, (d->q - 1) / pr) == 1) { ok = false; break; }
            if (ok) { gen = cand; break; }
        }
        auto* mut = const_cast<Data*>(d.get());
        mut->gen = gen;
        mut->logt.assign(d->q, 0);
        mut->expt.assign(size_t(2) * (d->q - 1), 0);
        uint32_t cur = 1;
        for (uint32_t i = 0; i < d->q - 1; ++i) {
            mut->expt[i] = cur;
            mut->expt[i + d->q - 1] = cur;
            mut->logt[cur] = i;
            cur = f.mul_poly(cur, gen);
        }
        if (cur != 1) throw std::logic_error("generator order mismatch");
        return f;
    }

    bool valid() const { return static_cast<bool>(d_); }
    uint32_t p() const { return d_->p; }
    uint32_t m() const { return d_->m; }
    uint32_t q() const { return d_->q; }
    const detail::Digits& modulus() const { return d_->modulus; }

    FqElem zero() const { return {0}; }
    FqElem one() const { return {1}; }
    FqElem gen() const { return {d_->gen}; }
    FqElem from_index(uint32_t i) const {
        if (i >= d_->q) throw std::invalid_argument("element index out of range");
        return {i};
    }
    std::span<const uint8_t> digits(FqElem a) const {
        return {d_->digits.data() + size_t(a.v) * d_->m, d_->m};
    }
    FqElem from_digits(std::span<const uint8_t> dg) const {
        uint32_t idx = 0;
        for (uint32_t i = d_->m; i-- > 0;) {
            uint8_t c = i < dg.size() ? dg[i] : 0;
            if (c >= d_->p) throw std::invalid_argument("digit out of range");
            idx = idx * d_->p + c;
        }
        return {idx};
    }

    FqElem add(FqElem a, FqElem b) const {
        if (d_->p == 2) return {a.v ^ b.v};
        auto da = digits(a);
        auto db = digits(b);
        uint32_t idx = 0;
        for (uint32_t i = d_->m; i-- > 0;) idx = idx * d_->p + (da[i] + db[i]) % d_->p;
        return {idx};
    }
    FqElem neg(FqElem a) const {
        if (d_->p == 2) return a;
        auto da = digits(a);
        uint32_t idx = 0;
        for (uint32_t i = d_->m; i-- > 0;) idx = idx * d_->p + (d_->p - da[i]) % d_->p;
        return {idx};
    }
    FqElem sub(FqElem a, FqElem b) const { return add(a, neg(b)); }
    FqElem mul(FqElem a, FqElem b) const {
        if (a.v == 0 || b.v == 0) return {0};
        return {d_->expt[d_->logt[a.v] + d_->logt[b.v]]};
    }
    FqElem inv(FqElem a) const {
        if (a.v == 0) throw std::invalid_argument("inversion of zero");
        return {d_->expt[(d_->q - 1 - d_->logt[a.v]) % (d_->q - 1)]};
    }
    FqElem pow(FqElem a, uint64_t e) const {
        if (a.v == 0) return e == 0 ? one() : zero();
        return {d_->expt[static_cast<uint32_t>((uint64_t(d_->logt[a.v]) * (e % (d_->q - 1))) % (d_->q - 1))]};
    }
    // Scalar action of the prime field (digit c) on an element.
    FqElem scale(uint8_t c, FqElem a) const { return mul(from_digits({&c, 1}), a); }

    std::string to_string(FqElem a) const {
        std::string s;
        for (auto c : digits(a)) s.push_back(static_cast<char>('0' + c));
        return s;
    }
    FqElem parse(const std::string& s) const {
        detail::Digits dg;
        for (char ch : s) {
            if (ch < '0' || ch > '9') throw std::invalid_argument("bad element digit");
            dg.push_back(static_cast<uint8_t>(ch - '0'));
        }
        if (dg.size() > d_->m) {
            for (size_t i = d_->m; i < dg.size(); ++i)
                if (dg[i] != 0) throw std::invalid_argument("element string too long for field");
            dg.resize(d_->m);
        }
        return from_digits(dg);
    }

    friend bool operator==(const Fq& a, const Fq& b) {
        if (a.d_ == b.d_) return true;
        if (!a.d_ || !b.d_) return false;
        return a.d_->p == b.d_->p && a.d_->m == b.d_->m && a.d_->modulus == b.d_->modulus;
    }
    friend bool operator!=(const Fq& a, const Fq& b) { return !(a == b); }
};

inline Fq make_field(uint32_t p, uint32_t m) { return Fq::make(p, m); }
inline Fq make_field(uint32_t p, uint32_t m, const std::vector<uint8_t>& modulus) {
    return Fq::make(p, m, modulus);
}

// F_q for a prime power q, with the default modulus.
inline Fq field_of_order(uint32_t q) {
    for (uint32_t p = 2; p <= q; ++p) {
        if (!detail::is_prime_u32(p) || q % p != 0) continue;
        uint32_t m = 0, t = q;
        while (t > 1) {
            if (t % p != 0) throw std::invalid_argument("q is not a prime power");
            t /= p;
            ++m;
        }
        return Fq::make(p, m);
    }
    throw std::invalid_argument("q is not a prime power");
}

inline std::vector<FqElem> enumerate(const Fq& f) {
    std::vector<FqElem> out;
    out.reserve(f.q());
    for (uint32_t i = 0; i < f.q(); ++i) out.push_back({i});
    return out;
}

// ---------------------------------------------------------------------------
// Univariate polynomials over an Fq, little-endian coefficients, trimmed.

struct Poly {
    Fq field;
    std::vector<FqElem> c;

    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    bool is_monic() const { return !c.empty() && c.back() == field.one(); }
    FqElem coeff(size_t i) const { return i < c.size() ? c[i] : field.zero(); }
};

inline Poly poly_trim(Poly a) {
    while (!a.c.empty() && a.c.back() == a.field.zero()) a.c.pop_back();
    return a;
}

inline Poly poly_from_digits(const Fq& f, const std::vector<uint8_t>& dg) {
    Poly r{f, {}};
    for (auto d : dg) r.c.push_back(f.from_digits({&d, 1}));
    return poly_trim(std::move(r));
}

inline Poly poly_parse(const Fq& f, const std::string& s) {
    std::vector<uint8_t> dg;
    for (char ch : s) {
        if (ch < '0' || ch > '9') throw std::invalid_argument("bad polynomial digit");
        dg.push_back(static_cast<uint8_t>(ch - '0'));
    }
    return poly_from_digits(f, dg);
}

inline std::string poly_to_string(const Poly& a) {
    if (a.c.empty()) return "0";
    std::string s;
    for (auto e : a.c) s += a.field.to_string(e);  // m=1 in all serialized uses
    return s;
}

inline Poly poly_add(const Poly& a, const Poly& b) {
    Poly r{a.field, {}};
    r.c.resize(std::max(a.c.size(), b.c.size()), a.field.zero());
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = a.field.add(a.coeff(i), b.coeff(i));
    return poly_trim(std::move(r));
}

inline Poly poly_sub(const Poly& a, const Poly& b) {
    Poly r{a.field, {}};
    r.c.resize(std::max(a.c.size(), b.c.size()), a.field.zero());
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = a.field.sub(a.coeff(i), b.coeff(i));
    return poly_trim(std::move(r));
}

inline Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.c.empty() || b.c.empty()) return {a.field, {}};
    Poly r{a.field, std::vector<FqElem>(a.c.size() + b.c.size() - 1, a.field.zero())};
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j)
            r.c[i + j] = a.field.add(r.c[i + j], a.field.mul(a.c[i], b.c[j]));
    return poly_trim(std::move(r));
}

inline std::pair<Poly, Poly> poly_divmod(Poly a, const Poly& b) {
    if (b.is_zero()) throw std::invalid_argument("division by zero polynomial");
    const Fq& f = a.field;
    Poly quo{f, {}};
    a = poly_trim(std::move(a));
    if (a.degree() >= b.degree()) quo.c.assign(a.degree() - b.degree() + 1, f.zero());
    FqElem lead_inv = f.inv(b.c.back());
    while (!a.is_zero() && a.degree() >= b.degree()) {
        size_t shift = a.degree() - b.degree();
        FqElem qc = f.mul(a.c.back(), lead_inv);
        quo.c[shift] = qc;
        for (size_t i = 0; i < b.c.size(); ++i)
            a.c[shift + i] = f.sub(a.c[shift + i], f.mul(qc, b.c[i]));
        a = poly_trim(std::move(a));
    }
    return {poly_trim(std::move(quo)), std::move(a)};
}

inline Poly poly_mod(Poly a, const Poly& b) { return poly_divmod(std::move(a), b).second; }

inline FqElem poly_eval(const Poly& a, FqElem x) {
    FqElem r = a.field.zero();
    for (size_t i = a.c.size(); i-- > 0;) r = a.field.add(a.field.mul(r, x), a.c[i]);
    return r;
}

inline Poly poly_monomial(const Fq& f, size_t deg) {
    Poly r{f, std::vector<FqElem>(deg + 1, f.zero())};
    r.c[deg] = f.one();
    return r;
}

// Monic polynomial of given degree from an enumeration index over the free
// coefficients, lowest degree coefficient fastest.
inline Poly poly_from_enum_index(const Fq& f, size_t deg, uint64_t idx) {
    Poly r{f, std::vector<FqElem>(deg + 1, f.zero())};
    for (size_t i = 0; i < deg; ++i) { r.c[i] = f.from_index(static_cast<uint32_t>(idx % f.q())); idx /= f.q(); }
    r.c[deg] = f.one();
    return r;
}

// Trial-division factorization into monic irreducibles with multiplicity,
// candidates ordered by (degree, enumeration index). Works over any small
// Fq; desk-scale degrees only.
inline std::vector<std::pair<Poly, uint32_t>> factor_poly(const Poly& f) {
    if (!f.is_monic()) throw std::invalid_argument("factor_poly requires a monic polynomial");
    if (f.degree() < 1) throw std::invalid_argument("factor_poly requires degree >= 1");
    std::vector<std::pair<Poly, uint32_t>> out;
    Poly rem = f;
    for (size_t d = 1; 2 * static_cast<int>(d) <= rem.degree(); ++d) {
        uint64_t count = 1;
        for (size_t i = 0; i < d; ++i) count *= f.field.q();
        for (uint64_t idx = 0; idx < count && 2 * static_cast<int>(d) <= rem.degree(); ++idx) {
            Poly g = poly_from_enum_index(f.field, d, idx);
            uint32_t mult = 0;
            while (true) {
                auto [q, r] = poly_divmod(rem, g);
                if (!r.is_zero()) break;
                rem = q;
                ++mult;
            }
            if (mult) out.emplace_back(std::move(g), mult);
        }
    }
    if (rem.degree() >= 1) out.emplace_back(rem, 1);
    return out;
}

inline bool poly_irreducible(const Poly& f) {
    auto fac = factor_poly(f);
    return fac.size() == 1 && fac[0].second == 1;
}

// ---------------------------------------------------------------------------
// Subfield embedding F_q -> F_{q^m}, computed by locating a root of the
// base modulus in the extension. Cached per (base, degree).

struct Embedding {
    Fq base;
    Fq ext;
    std::vector<FqElem> map;  // indexed by base element

    FqElem operator()(FqElem a) const { return map[a.v]; }
};

inline Embedding embed(const Fq& base, uint32_t ext_degree) {
    if (ext_degree == 1) {
        Embedding e{base, base, {}};
        e.map.resize(base.q());
        for (uint32_t a = 0; a < base.q(); ++a) e.map[a] = {a};
        return e;
    }
    struct Key {
        uint32_t p, m, deg;
        std::vector<uint8_t> mod;
        bool operator<(const Key& o) const {
            return std::tie(p, m, deg, mod) < std::tie(o.p, o.m, o.deg, o.mod);
        }
    };
    static std::map<Key, Embedding> cache;
    static std::mutex mu;
    Key key{base.p(), base.m(), ext_degree, base.modulus()};
    {
        std::lock_guard<std::mutex> lk(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }

    Fq ext = Fq::make(base.p(), base.m() * ext_degree);
    // Evaluate the base modulus (prime-field coefficients) at candidates.
    auto eval_mod = [&](FqElem x) {
        FqElem r = ext.zero();
        const auto& mod = base.modulus();
        for (size_t i = mod.size(); i-- > 0;) {
            uint8_t c = mod[i];
            r = ext.add(ext.mul(r, x), ext.from_digits({&c, 1}));
        }
        return r;
    };
    FqElem root = ext.zero();
    bool found = false;
    for (uint32_t i = 0; i < ext.q(); ++i) {
        if (eval_mod({i}) == ext.zero()) { root = {i}; found = true; break; }
    }
    if (!found) throw std::logic_error("no root of base modulus in extension");

    Embedding e{base, ext, {}};
    e.map.resize(base.q());
    for (uint32_t a = 0; a < base.q(); ++a) {
        FqElem acc = ext.zero();
        FqElem pw = ext.one();
        for (auto c : base.digits({a})) {
            acc = ext.add(acc, ext.mul(ext.from_digits({&c, 1}), pw));
            pw = ext.mul(pw, root);
        }
        e.map[a] = acc;
    }
    {
        std::lock_guard<std::mutex> lk(mu);
        cache.emplace(std::move(key), e);
    }
    return e;
}

}  // namespace qh
