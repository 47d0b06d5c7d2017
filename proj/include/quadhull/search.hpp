#pragma once

// Exhaustive solver for the algorithm-subspace problem: find all W with
// T subset W, dim W = n, W spanned by elementary tensors. The search runs
// the Oseledets decomposition W = T + <e_1..e_{n-k}> as a DFS over
// strictly increasing E-indices, appending a tensor only when independent
// of the current span, deduplicates completed subspaces by canonical RREF
// signature, and post-filters by rank(E cap W) = n.
//
// Vectors are bit-packed: one word per row over GF(2), two bit-planes per
// row over GF(3) (plane1 = trits equal to 1, plane2 = trits equal to 2).

#include <atomic>
#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <thread>
#include <vector>

#include "quadhull/algebra.hpp"
#include "quadhull/errors.hpp"
#include "quadhull/hull.hpp"

namespace qh {

struct SearchProblem {
    Algebra a;
    SymIndex sx{0};
    size_t vdim = 0;
    MultTensorData tensor;       // target T = <B_1..B_k>
    std::vector<Vec> e_forms;    // projective representatives l
    std::vector<Vec> e_tensors;  // l^x2
};

inline SearchProblem build_problem(const Algebra& a) {
    SearchProblem p{a, SymIndex(a.k), sym_dim(a.k), mult_tensor(a), {}, {}};
    if (p.vdim > 64) throw BudgetExceeded("search requires k(k+1)/2 <= 64");
    const Fq& f = a.field;
    // One linear form per projective class, first nonzero coordinate 1,
    // in lexicographic enumeration order.
    Vec l(a.k, f.zero());
    for (size_t lead = 0; lead < a.k; ++lead) {
        for (size_t i = 0; i < lead; ++i) l[i] = f.zero();
        l[lead] = f.one();
        size_t free = a.k - lead - 1;
        uint64_t total = 1;
        for (size_t i = 0; i < free; ++i) total *= f.q();
        for (uint64_t idx = 0; idx < total; ++idx) {
            uint64_t t = idx;
            for (size_t i = 0; i < free; ++i) {
                l[a.k - 1 - i] = f.from_index(static_cast<uint32_t>(t % f.q()));
                t /= f.q();
            }
            p.e_forms.push_back(l);
            p.e_tensors.push_back(elementary_tensor(f, p.sx, l));
        }
    }
    return p;
}

struct WStats {
    Subspace w;                    // canonical RREF basis in SymVec coords
    std::vector<size_t> e_in_w;    // indices into E
    size_t dim_i2 = 0;
    bool unique_algorithm = false;
};

struct SearchResult {
    size_t n = 0;
    std::vector<WStats> ws;
    uint64_t node_count = 0;
    double seconds = 0.0;
};

struct SearchOptions {
    uint64_t node_budget = 1000000000ull;
    unsigned workers = 1;
};

namespace detail {

struct Gf2Ops {
    struct V {
        uint64_t w = 0;
        friend bool operator==(const V& a, const V& b) { return a.w == b.w; }
        friend bool operator<(const V& a, const V& b) { return a.w < b.w; }
    };
    size_t dim;
    explicit Gf2Ops(const Fq&, size_t d) : dim(d) {}
    V pack(const Vec& x) const {
        V v;
        for (size_t i = 0; i < dim; ++i)
            if (x[i].v) v.w |= uint64_t(1) << i;
        return v;
    }
    Vec unpack(const V& v, const Fq&) const {
        Vec x(dim);
        for (size_t i = 0; i < dim; ++i) x[i] = FqElem{static_cast<uint32_t>(v.w >> i & 1)};
        return x;
    }
    bool is_zero(const V& v) const { return v.w == 0; }
    int pivot(const V& v) const { return v.w ? __builtin_ctzll(v.w) : -1; }
    uint32_t coef(const V& v, int i) const { return static_cast<uint32_t>(v.w >> i & 1); }
    // v -= c * row (pivot coefficient of row is 1); branchless, the bit is
    // unpredictable in the hot loop
    void sub_scaled(V& v, const V& row, uint32_t c) const {
        v.w ^= row.w & (0 - uint64_t(c & 1));
    }
    void normalize(V&) const {}
    // normalize and report the factor applied (v_new = c * v_old)
    uint32_t normalize_factor(V&) const { return 1; }
    V scaled_copy(const V& v, uint32_t) const { return v; }
    V sub(const V& a, const V& b) const { return {a.w ^ b.w}; }
    void serialize(const V& v, std::vector<uint64_t>& out) const { out.push_back(v.w); }
};

struct Gf3Ops {
    struct V {
        uint64_t p1 = 0, p2 = 0;  // plane of trits == 1, plane of trits == 2
        friend bool operator==(const V& a, const V& b) { return a.p1 == b.p1 && a.p2 == b.p2; }
        friend bool operator<(const V& a, const V& b) {
            return a.p1 != b.p1 ? a.p1 < b.p1 : a.p2 < b.p2;
        }
    };
    size_t dim;
    explicit Gf3Ops(const Fq&, size_t d) : dim(d) {}
    V pack(const Vec& x) const {
        V v;
        for (size_t i = 0; i < dim; ++i) {
            if (x[i].v == 1) v.p1 |= uint64_t(1) << i;
            if (x[i].v == 2) v.p2 |= uint64_t(1) << i;
        }
        return v;
    }
    Vec unpack(const V& v, const Fq&) const {
        Vec x(dim);
        for (size_t i = 0; i < dim; ++i) {
            uint32_t t = static_cast<uint32_t>(v.p1 >> i & 1) + 2 * static_cast<uint32_t>(v.p2 >> i & 1);
            x[i] = FqElem{t};
        }
        return x;
    }
    bool is_zero(const V& v) const { return (v.p1 | v.p2) == 0; }
    int pivot(const V& v) const {
        uint64_t nz = v.p1 | v.p2;
        return nz ? __builtin_ctzll(nz) : -1;
    }
    uint32_t coef(const V& v, int i) const {
        return static_cast<uint32_t>(v.p1 >> i & 1) + 2 * static_cast<uint32_t>(v.p2 >> i & 1);
    }
    static V add(const V& a, const V& b) {
        uint64_t a0 = ~(a.p1 | a.p2), b0 = ~(b.p1 | b.p2);
        return {(a0 & b.p1) | (a.p1 & b0) | (a.p2 & b.p2),
                (a0 & b.p2) | (a.p2 & b0) | (a.p1 & b.p1)};
    }
    static V neg(const V& a) { return {a.p2, a.p1}; }
    void sub_scaled(V& v, const V& row, uint32_t c) const {
        // branchless select of -row (c=1), +row (c=2), or zero
        uint64_t m1 = 0 - uint64_t(c == 1), m2 = 0 - uint64_t(c == 2);
        V x{(row.p2 & m1) | (row.p1 & m2), (row.p1 & m1) | (row.p2 & m2)};
        v = add(v, x);
    }
    void normalize(V& v) const {
        int p = pivot(v);
        if (p >= 0 && (v.p2 >> p & 1)) v = neg(v);  // scale by 2 swaps planes
    }
    uint32_t normalize_factor(V& v) const {
        int p = pivot(v);
        if (p >= 0 && (v.p2 >> p & 1)) {
            v = neg(v);
            return 2;
        }
        return 1;
    }
    V scaled_copy(const V& v, uint32_t c) const { return c == 2 ? neg(v) : v; }
    V sub(const V& a, const V& b) const { return add(a, neg(b)); }
    void serialize(const V& v, std::vector<uint64_t>& out) const {
        out.push_back(v.p1);
        out.push_back(v.p2);
    }
};

struct GenericOps {
    using V = std::vector<uint32_t>;
    Fq f;
    size_t dim;
    GenericOps(const Fq& field, size_t d) : f(field), dim(d) {}
    V pack(const Vec& x) const {
        V v(dim);
        for (size_t i = 0; i < dim; ++i) v[i] = x[i].v;
        return v;
    }
    Vec unpack(const V& v, const Fq&) const {
        Vec x(dim);
        for (size_t i = 0; i < dim; ++i) x[i] = FqElem{v[i]};
        return x;
    }
    bool is_zero(const V& v) const {
        for (auto e : v)
            if (e) return false;
        return true;
    }
    int pivot(const V& v) const {
        for (size_t i = 0; i < dim; ++i)
            if (v[i]) return static_cast<int>(i);
        return -1;
    }
    uint32_t coef(const V& v, int i) const { return v[i]; }
    void sub_scaled(V& v, const V& row, uint32_t c) const {
        if (!c) return;
        FqElem fc{c};
        for (size_t i = 0; i < dim; ++i)
            v[i] = f.sub(FqElem{v[i]}, f.mul(fc, FqElem{row[i]})).v;
    }
    void normalize(V& v) const {
        int p = pivot(v);
        if (p < 0) return;
        FqElem inv = f.inv(FqElem{v[p]});
        for (size_t i = 0; i < dim; ++i) v[i] = f.mul(inv, FqElem{v[i]}).v;
    }
    uint32_t normalize_factor(V& v) const {
        int p = pivot(v);
        if (p < 0) return 1;
        FqElem inv = f.inv(FqElem{v[p]});
        for (size_t i = 0; i < dim; ++i) v[i] = f.mul(inv, FqElem{v[i]}).v;
        return inv.v;
    }
    V scaled_copy(const V& v, uint32_t c) const {
        V out(dim);
        for (size_t i = 0; i < dim; ++i) out[i] = f.mul(FqElem{c}, FqElem{v[i]}).v;
        return out;
    }
    V sub(const V& a, const V& b) const {
        V out(dim);
        for (size_t i = 0; i < dim; ++i) out[i] = f.sub(FqElem{a[i]}, FqElem{b[i]}).v;
        return out;
    }
    void serialize(const V& v, std::vector<uint64_t>& out) const {
        for (auto e : v) out.push_back(e);
    }
};

template <class Ops>
class DfsSolver {
    using V = typename Ops::V;
    const SearchProblem& p_;
    Ops ops_;
    size_t n_, need_;
    std::vector<V> e_packed_;
    std::vector<V> t_rows_;  // forward-echelon basis of T, pivots normalized
    std::vector<int> t_pivots_;
    std::atomic<uint64_t> nodes_{0};
    std::atomic<bool> over_budget_{false};
    uint64_t budget_;

    struct Worker {
        std::vector<V> rows;
        std::vector<int> pivots;
        std::map<std::vector<uint64_t>, std::vector<V>> found;
        uint64_t local_nodes = 0;
        // scratch for the last-level residue analysis, reused across calls
        std::vector<V> residue;
        std::vector<uint32_t> factor;
        std::vector<uint8_t> valid;
        std::vector<std::pair<V, uint32_t>> keyed;
        std::vector<uint32_t> order;
        std::vector<V> espan;
        std::vector<int> epiv;
    };

    V reduce(const Worker& w, V v) const {
        for (size_t r = 0; r < w.rows.size(); ++r) {
            uint32_t c = ops_.coef(v, w.pivots[r]);
            if (c) ops_.sub_scaled(v, w.rows[r], c);
        }
        return v;
    }

    // Condition (ii) at the leaf: W must be spanned by its elementary
    // tensors. Checking here rather than post hoc keeps the dedup map
    // bounded by the true W count; at k = 6 the invalid leaves run into
    // the billions and storing them first would exhaust memory.
    bool spanned_by_tensors(const Worker& w) const {
        std::vector<V> mspan;
        std::vector<int> mpiv;
        for (size_t i = 0; i < e_packed_.size(); ++i) {
            V r = e_packed_[i];
            for (size_t j = 0; j < w.rows.size(); ++j) {
                uint32_t c = ops_.coef(r, w.pivots[j]);
                if (c) ops_.sub_scaled(r, w.rows[j], c);
            }
            if (!ops_.is_zero(r)) continue;  // not a member of W
            V s = e_packed_[i];
            for (size_t j = 0; j < mspan.size(); ++j) {
                uint32_t c = ops_.coef(s, mpiv[j]);
                if (c) ops_.sub_scaled(s, mspan[j], c);
            }
            if (ops_.is_zero(s)) continue;
            ops_.normalize(s);
            mspan.push_back(s);
            mpiv.push_back(ops_.pivot(s));
            if (mspan.size() == n_) return true;
        }
        return false;
    }

    void record_canonical(Worker& w) const {
        // Canonicalize the current span: rows already have distinct pivots;
        // sort by pivot and eliminate above.
        std::vector<V> rows = w.rows;
        std::vector<int> piv = w.pivots;
        for (size_t i = 0; i < rows.size(); ++i)
            for (size_t j = i + 1; j < rows.size(); ++j)
                if (piv[j] < piv[i]) {
                    std::swap(piv[i], piv[j]);
                    std::swap(rows[i], rows[j]);
                }
        for (size_t i = 0; i < rows.size(); ++i)
            for (size_t j = 0; j < rows.size(); ++j) {
                if (i == j) continue;
                uint32_t c = ops_.coef(rows[j], piv[i]);
                if (c) ops_.sub_scaled(rows[j], rows[i], c);
            }
        std::vector<uint64_t> sig;
        sig.reserve(rows.size() * 2);
        for (const auto& r : rows) ops_.serialize(r, sig);
        w.found.emplace(std::move(sig), std::move(rows));
    }

    void count_node(Worker& w) {
        if ((++w.local_nodes & 511) == 0) {
            nodes_.fetch_add(512, std::memory_order_relaxed);
            w.local_nodes = 0;
            if (nodes_.load(std::memory_order_relaxed) >= budget_)
                over_budget_.store(true, std::memory_order_relaxed);
        }
    }

    // Last DFS level, factored through the parent span S. For a child
    // W = S + <e_i>, the elementary tensors in W are exactly those whose
    // residue mod S is a scalar multiple of e_i's residue, so one residue
    // scan of E answers condition (ii) for every child: with M_0 the
    // tensors inside S and D the pairwise differences of the tensors in
    // e_i's residue class (scaled to a common residue, so the differences
    // land in S),
    //   rank(E cap W) = rank(M_0 u D) + 1,
    // and the rank on the right is constant on each residue class.
    void last_level(Worker& w, size_t start) {
        const size_t ecount = e_packed_.size();
        w.residue.resize(ecount);
        w.factor.resize(ecount);
        w.valid.assign(ecount, 0);
        w.espan.clear();
        w.epiv.clear();
        for (size_t j = 0; j < ecount; ++j) {
            V r = reduce(w, e_packed_[j]);
            w.factor[j] = ops_.normalize_factor(r);
            w.residue[j] = r;
            if (!ops_.is_zero(r)) continue;
            // member of S: extend the echelon of M_0
            V s = e_packed_[j];
            for (size_t t = 0; t < w.espan.size(); ++t) {
                uint32_t c = ops_.coef(s, w.epiv[t]);
                if (c) ops_.sub_scaled(s, w.espan[t], c);
            }
            if (!ops_.is_zero(s)) {
                ops_.normalize(s);
                w.espan.push_back(s);
                w.epiv.push_back(ops_.pivot(s));
            }
        }
        const size_t rank0 = w.espan.size();

        // Group the nonzero residues; each class shares its difference rank.
        w.keyed.clear();
        for (uint32_t j = 0; j < ecount; ++j)
            if (!ops_.is_zero(w.residue[j])) w.keyed.emplace_back(w.residue[j], j);
        std::sort(w.keyed.begin(), w.keyed.end(),
                  [](const auto& a, const auto& b) {
                      return a.first == b.first ? a.second < b.second : a.first < b.first;
                  });
        w.order.clear();
        for (const auto& [key, j] : w.keyed) w.order.push_back(j);
        size_t g = 0;
        while (g < w.order.size()) {
            size_t h = g;
            while (h < w.order.size() && w.residue[w.order[h]] == w.residue[w.order[g]]) ++h;
            size_t extra = 0;
            if (h - g > 1) {
                size_t base = w.espan.size();
                V ref = ops_.scaled_copy(e_packed_[w.order[g]], w.factor[w.order[g]]);
                for (size_t t = g + 1; t < h; ++t) {
                    V d = ops_.sub(ops_.scaled_copy(e_packed_[w.order[t]], w.factor[w.order[t]]), ref);
                    for (size_t u = 0; u < w.espan.size(); ++u) {
                        uint32_t c = ops_.coef(d, w.epiv[u]);
                        if (c) ops_.sub_scaled(d, w.espan[u], c);
                    }
                    if (!ops_.is_zero(d)) {
                        ops_.normalize(d);
                        w.espan.push_back(d);
                        w.epiv.push_back(ops_.pivot(d));
                    }
                }
                extra = w.espan.size() - base;
                w.espan.resize(base);
                w.epiv.resize(base);
            }
            uint8_t ok = (rank0 + extra + 1 == n_) ? 1 : 0;
            for (size_t t = g; t < h; ++t) w.valid[w.order[t]] = ok;
            g = h;
        }

        for (size_t i = start; i < ecount; ++i) {
            if (ops_.is_zero(w.residue[i])) continue;
            count_node(w);
            if (over_budget_.load(std::memory_order_relaxed)) return;
            if (!w.valid[i]) continue;
            w.rows.push_back(w.residue[i]);
            w.pivots.push_back(ops_.pivot(w.residue[i]));
            record_canonical(w);
            w.rows.pop_back();
            w.pivots.pop_back();
        }
    }

    // Node accounting is batched into the shared counter to keep the hot
    // loop free of atomic traffic; the budget overshoot is at most one
    // batch per worker.
    void dfs(Worker& w, size_t depth, size_t start) {
        count_node(w);
        if (over_budget_.load(std::memory_order_relaxed)) return;
        if (depth + 1 == need_) {
            last_level(w, start);
            return;
        }
        for (size_t i = start; i + (need_ - depth) <= e_packed_.size(); ++i) {
            V r = reduce(w, e_packed_[i]);
            if (ops_.is_zero(r)) continue;
            ops_.normalize(r);
            w.rows.push_back(r);
            w.pivots.push_back(ops_.pivot(r));
            dfs(w, depth + 1, i + 1);
            w.rows.pop_back();
            w.pivots.pop_back();
        }
    }

public:
    DfsSolver(const SearchProblem& p, size_t n, uint64_t budget)
        : p_(p), ops_(p.a.field, p.vdim), n_(n), need_(n - p.a.k), budget_(budget) {
        for (const auto& t : p.e_tensors) e_packed_.push_back(ops_.pack(t));
        Worker tmp;
        for (const auto& b : p.tensor.bforms) {
            V r = reduce(tmp, ops_.pack(b));
            if (ops_.is_zero(r)) throw std::logic_error("target basis dependent");
            ops_.normalize(r);
            tmp.rows.push_back(r);
            tmp.pivots.push_back(ops_.pivot(r));
        }
        t_rows_ = tmp.rows;
        t_pivots_ = tmp.pivots;
    }

    SearchResult run(unsigned workers) {
        auto t0 = std::chrono::steady_clock::now();
        std::map<std::vector<uint64_t>, std::vector<V>> found;
        if (need_ == 0) {
            Worker w;
            w.rows = t_rows_;
            w.pivots = t_pivots_;
            nodes_.fetch_add(1, std::memory_order_relaxed);
            if (spanned_by_tensors(w)) record_canonical(w);
            found = std::move(w.found);
        } else if (need_ == 1) {
            Worker w;
            w.rows = t_rows_;
            w.pivots = t_pivots_;
            last_level(w, 0);
            nodes_.fetch_add(w.local_nodes, std::memory_order_relaxed);
            found = std::move(w.found);
        } else {
            unsigned nw = std::max(1u, workers);
            std::atomic<size_t> next{0};
            std::vector<Worker> states(nw);
            std::vector<std::thread> threads;
            auto body = [&](unsigned wi) {
                Worker& w = states[wi];
                w.rows = t_rows_;
                w.pivots = t_pivots_;
                size_t limit = e_packed_.size() + 1 - need_;
                while (true) {
                    size_t i = next.fetch_add(1);
                    if (i >= limit || over_budget_.load(std::memory_order_relaxed)) break;
                    V r = reduce(w, e_packed_[i]);
                    if (ops_.is_zero(r)) continue;
                    ops_.normalize(r);
                    w.rows.push_back(r);
                    w.pivots.push_back(ops_.pivot(r));
                    dfs(w, 1, i + 1);
                    w.rows.pop_back();
                    w.pivots.pop_back();
                }
                nodes_.fetch_add(w.local_nodes, std::memory_order_relaxed);
                w.local_nodes = 0;
            };
            if (nw == 1) {
                body(0);
            } else {
                for (unsigned wi = 0; wi < nw; ++wi) threads.emplace_back(body, wi);
                for (auto& t : threads) t.join();
            }
            for (auto& st : states)
                for (auto& kv : st.found) found.insert(std::move(kv));
        }
        if (over_budget_.load())
            throw BudgetExceeded("search node budget exhausted");

        SearchResult res;
        res.n = n_;
        res.node_count = nodes_.load();
        const Fq& f = p_.a.field;
        for (auto& [sig, rows] : found) {
            // Condition (ii): W must be generated by elementary tensors.
            std::vector<size_t> in_w;
            std::vector<V> span;
            std::vector<int> spiv;
            size_t rk = 0;
            for (size_t i = 0; i < e_packed_.size(); ++i) {
                V r = e_packed_[i];
                for (size_t j = 0; j < rows.size(); ++j) {
                    uint32_t c = ops_.coef(r, ops_.pivot(rows[j]));
                    if (c) ops_.sub_scaled(r, rows[j], c);
                }
                if (!ops_.is_zero(r)) continue;
                in_w.push_back(i);
                V s = e_packed_[i];
                for (size_t j = 0; j < span.size(); ++j) {
                    uint32_t c = ops_.coef(s, spiv[j]);
                    if (c) ops_.sub_scaled(s, span[j], c);
                }
                if (!ops_.is_zero(s)) {
                    ops_.normalize(s);
                    span.push_back(s);
                    spiv.push_back(ops_.pivot(s));
                    ++rk;
                }
            }
            if (rk != n_) continue;
            WStats st;
            std::vector<Vec> gen_rows;
            for (const auto& r : rows) gen_rows.push_back(ops_.unpack(r, f));
            st.w = span_of(f, gen_rows, p_.vdim);
            st.e_in_w = std::move(in_w);
            st.dim_i2 = p_.vdim - n_;
            st.unique_algorithm = st.e_in_w.size() == n_;
            res.ws.push_back(std::move(st));
        }
        res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        return res;
    }
};

}  // namespace detail

inline SearchResult solve(const SearchProblem& p, size_t n, const SearchOptions& opts = {}) {
    if (n < p.a.k) throw std::invalid_argument("length below algebra dimension");
    const uint32_t q = p.a.field.q();
    if (q == 2) return detail::DfsSolver<detail::Gf2Ops>(p, n, opts.node_budget).run(opts.workers);
    if (q == 3) return detail::DfsSolver<detail::Gf3Ops>(p, n, opts.node_budget).run(opts.workers);
    return detail::DfsSolver<detail::GenericOps>(p, n, opts.node_budget).run(opts.workers);
}

// Per-W statistics for a subspace produced by solve (or any W with
// T inside it): the elementary tensors it contains are exactly the
// F_q-points of its hull, I_2 = W-perp feeds the fingerprint, and the
// algorithm is unique precisely when only n tensors lie in W.
struct WAnalysis {
    WStats stats;
    HullReport report;
};

inline WAnalysis analyze_W(const SearchProblem& p, const Subspace& w, uint32_t max_ext = 1) {
    WAnalysis out;
    out.stats.w = w;
    for (size_t i = 0; i < p.e_tensors.size(); ++i)
        if (w.member(p.e_tensors[i])) out.stats.e_in_w.push_back(i);
    size_t n = w.dim();
    out.stats.dim_i2 = p.vdim - n;
    out.stats.unique_algorithm = out.stats.e_in_w.size() == n;
    QuadHull h = i2_from_W(w, p.a.k);
    out.report = fingerprint(h, max_ext, n, &p.a);
    return out;
}

// Number of n-subsets of E cap W that are bases of W; each corresponds to
// one multiplication algorithm with span W (up to scaling of the forms).
inline uint64_t count_spanning_bases(const SearchProblem& p, const WStats& w, size_t n) {
    const Fq& f = p.a.field;
    std::vector<Vec> cand;
    for (size_t i : w.e_in_w) cand.push_back(p.e_tensors[i]);
    uint64_t count = 0;
    std::vector<Vec> rows;
    std::vector<int> pivots;
    auto reduce = [&](Vec v) {
        for (size_t r = 0; r < rows.size(); ++r) {
            FqElem c = v[pivots[r]];
            if (c == f.zero()) continue;
            for (size_t i = 0; i < v.size(); ++i) v[i] = f.sub(v[i], f.mul(c, rows[r][i]));
        }
        return v;
    };
    std::function<void(size_t, size_t)> rec = [&](size_t start, size_t depth) {
        if (depth == n) {
            ++count;
            return;
        }
        for (size_t i = start; i + (n - depth) <= cand.size(); ++i) {
            Vec r = reduce(cand[i]);
            bool zero = true;
            for (auto e : r)
                if (e != f.zero()) { zero = false; break; }
            if (zero) continue;
            int piv = 0;
            while (r[piv] == f.zero()) ++piv;
            FqElem inv = f.inv(r[piv]);
            for (auto& e : r) e = f.mul(e, inv);
            rows.push_back(r);
            pivots.push_back(piv);
            rec(i + 1, depth + 1);
            rows.pop_back();
            pivots.pop_back();
        }
    };
    rec(0, 0);
    return count;
}

// Generator matrix of one algorithm from W: columns are the first n
// independent forms of E cap W in enumeration order.
inline Mat algorithm_from_W(const SearchProblem& p, const WStats& w, size_t n) {
    const Fq& f = p.a.field;
    std::vector<size_t> chosen;
    std::vector<Vec> rows;
    std::vector<int> pivots;
    for (size_t i : w.e_in_w) {
        if (chosen.size() == n) break;
        Vec r = p.e_tensors[i];
        for (size_t j = 0; j < rows.size(); ++j) {
            FqElem c = r[pivots[j]];
            if (c == f.zero()) continue;
            for (size_t t = 0; t < r.size(); ++t) r[t] = f.sub(r[t], f.mul(c, rows[j][t]));
        }
        bool zero = true;
        for (auto e : r)
            if (e != f.zero()) { zero = false; break; }
        if (zero) continue;
        int piv = 0;
        while (r[piv] == f.zero()) ++piv;
        FqElem inv = f.inv(r[piv]);
        for (auto& e : r) e = f.mul(e, inv);
        rows.push_back(r);
        pivots.push_back(piv);
        chosen.push_back(i);
    }
    if (chosen.size() != n) throw std::logic_error("E cap W does not span W");
    Mat phi(f, p.a.k, n);
    for (size_t c = 0; c < n; ++c)
        for (size_t i = 0; i < p.a.k; ++i) phi.at(i, c) = p.e_forms[chosen[c]][i];
    return phi;
}

inline std::pair<size_t, SearchResult> min_length(const Algebra& a, size_t n_lo, size_t n_hi,
                                                  const SearchOptions& opts = {}) {
    SearchProblem p = build_problem(a);
    for (size_t n = std::max(n_lo, a.k); n <= n_hi; ++n) {
        SearchResult r = solve(p, n, opts);
        if (!r.ws.empty()) return {n, std::move(r)};
    }
    throw std::runtime_error("no algorithm length found in range");
}

}  // namespace qh
