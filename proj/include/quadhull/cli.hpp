#pragma once

// Command implementations behind the qh tool. Each command returns a JSON
// report plus an exit code: 0 success, 1 parse error, 2 verification
// false / expectation mismatch, 3 budget exceeded.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "quadhull/evalinterp.hpp"
#include "quadhull/jsonio.hpp"

namespace qh {

struct CmdResult {
    json report;
    int exit_code = 0;
    std::string human;
};

inline std::string load_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream os;
    os << is.rdbuf();
    return os.str();
}

inline SearchOptions options_from_env(unsigned workers, bool long_runs = false) {
    SearchOptions opts;
    opts.workers = workers;
    if (long_runs) opts.node_budget = 200000000000ull;
    if (const char* env = std::getenv("QH_NODE_BUDGET")) opts.node_budget = std::strtoull(env, nullptr, 10);
    return opts;
}

namespace detail {

template <class Fn>
CmdResult run_command(const std::string& name, const json& inputs, Fn&& body) {
    CmdResult res;
    res.report["command"] = name;
    res.report["inputs"] = inputs;
    res.report["budget_exceeded"] = false;
    auto t0 = std::chrono::steady_clock::now();
    try {
        body(res);
    } catch (const BudgetExceeded& e) {
        res.report["error"] = e.what();
        res.report["budget_exceeded"] = true;
        res.exit_code = 3;
        res.human += std::string("budget exceeded: ") + e.what() + "\n";
    } catch (const std::exception& e) {
        res.report["error"] = e.what();
        res.exit_code = 1;
        res.human += std::string("error: ") + e.what() + "\n";
    }
    res.report["seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

}  // namespace detail

inline CmdResult cmd_verify(const std::string& a_spec, const std::string& b_spec,
                            const std::string& phi_text) {
    json inputs{{"algebra", a_spec}, {"target", b_spec}};
    return detail::run_command("verify", inputs, [&](CmdResult& res) {
        Algebra a = parse_algebra_spec(a_spec, load_file);
        Algebra b = parse_algebra_spec(b_spec, load_file);
        Mat phi = mat_from_text(phi_text);
        if (phi.field != a.field) throw std::invalid_argument("phi field does not match algebra field");
        auto v = is_mult_reduction(a, b, phi);
        res.report["outputs"]["is_reduction"] = v.ok;
        res.report["outputs"]["dim_i2"] = v.i2.dim();
        if (v.ok) {
            Mat omega = adjoint(a, b, phi);
            res.report["outputs"]["omega"] = mat_to_json(omega);
            res.human = "true\nomega:\n" + mat_to_text(omega);
        } else {
            res.exit_code = 2;
            if (v.certificate)
                res.report["outputs"]["certificate"] = vec_to_json(a.field, *v.certificate);
            else
                res.report["outputs"]["certificate"] = json(nullptr);  // phi not injective
            res.human = "false\n";
        }
    });
}

inline CmdResult cmd_hull(const std::string& code_text, uint32_t ext, uint32_t q = 0) {
    json inputs{{"ext", ext}};
    if (q) inputs["q"] = q;
    return detail::run_command("hull", inputs, [&](CmdResult& res) {
        Mat g = mat_from_text(code_text);
        if (q && g.field.q() != q)
            throw std::invalid_argument("--q does not match the matrix header");
        BCode c = bcode_from_generator(g);
        QuadHull h = hull_from_code(c);
        HullReport rep = fingerprint(h, ext, g.cols, nullptr);
        res.report["outputs"] = hull_report_to_json(rep, g.field);
        std::ostringstream os;
        os << "dim I2 = " << rep.dim_i2 << "\n";
        for (const auto& [m, cnt] : rep.point_counts)
            os << "#Z2(F_{q^" << m << "}) = " << cnt << "\n";
        res.human = os.str();
    });
}

inline CmdResult cmd_search(const std::string& a_spec, size_t n, bool long_ok, unsigned workers,
                            uint32_t ext = 1) {
    json inputs{{"algebra", a_spec}, {"n", n}, {"long", long_ok}, {"workers", workers}};
    return detail::run_command("search", inputs, [&](CmdResult& res) {
        Algebra a = parse_algebra_spec(a_spec, load_file);
        SearchProblem p = build_problem(a);
        SearchOptions opts = options_from_env(workers, long_ok);
        uint64_t est = 1;  // crude C(|E|, n-k) guard for un-gated big runs
        for (size_t i = 0; i < n - a.k && est < (uint64_t(1) << 34); ++i)
            est = est * (p.e_forms.size() - i) / (i + 1);
        if (!long_ok && est > (uint64_t(1) << 26))
            throw BudgetExceeded("estimated search too large; pass --long");
        SearchResult sr = solve(p, n, opts);
        res.report["outputs"] = search_result_to_json(p, sr, a_spec, ext);
        std::ostringstream os;
        os << "W count at n=" << n << ": " << sr.ws.size() << "  (nodes " << sr.node_count << ", "
           << sr.seconds << "s)\n";
        res.human = os.str();
    });
}

inline CmdResult cmd_tables(int table, bool long_rows, unsigned workers) {
    json inputs{{"table", table}, {"long", long_rows}};
    return detail::run_command("tables", inputs, [&](CmdResult& res) {
        if (table < 1 || table > 4) throw std::invalid_argument("table must be 1..4");
        auto rows = run_table(table, long_rows, options_from_env(workers, long_rows));
        res.report["outputs"]["rows"] = table_results_to_json(rows);
        std::ostringstream os;
        os << "table " << table << "\n";
        os << "  k   n   nb. of W   #Z2(F_q)        status\n";
        bool all_pass = true;
        for (const auto& r : rows) {
            os << "  " << r.spec.k << "   " << r.spec.n << "   ";
            if (!r.ran) {
                os << r.spec.w_count << " (expected)   -               SKIP " << r.note << "\n";
                continue;
            }
            os << r.w_count << "   ";
            std::string pts;
            for (const auto& [p, cnt] : r.splits) {
                if (!pts.empty()) pts += ", ";
                pts += std::to_string(p) + " x" + std::to_string(cnt);
            }
            os << pts << "   " << (r.pass ? "PASS" : "FAIL") << "\n";
            if (!r.pass) all_pass = false;
        }
        res.human = os.str();
        if (!all_pass) res.exit_code = 2;
    });
}

inline CmdResult cmd_delpezzo() {
    return detail::run_command("delpezzo", json::object(), [&](CmdResult& res) {
        DelPezzo dp = build_delpezzo();
        const Fq& f2 = dp.reduction.phi.field;
        res.report["outputs"]["phi"] = mat_to_json(dp.reduction.phi);
        res.report["outputs"]["omega"] = mat_to_json(*dp.reduction.omega);
        json quads = json::array();
        for (const auto& q : dp.quadrics) quads.push_back(vec_to_json(f2, q));
        res.report["outputs"]["quadrics"] = quads;
        size_t d = min_distance(dp.code);
        size_t dim_sq = square_code(dp.code).dim();
        QuadHull h = hull_from_code(dp.code);
        size_t pts = count_points(h, 1);
        res.report["outputs"]["parameters"] = {13, 5, d};
        res.report["outputs"]["dim_square"] = dim_sq;
        res.report["outputs"]["dim_i2"] = h.dim_i2();
        res.report["outputs"]["hull_points"] = pts;
        std::ostringstream os;
        os << "phi:\n" << mat_to_text(dp.reduction.phi);
        os << "omega:\n" << mat_to_text(*dp.reduction.omega);
        os << "quadric relations (pair coordinates, i<=j):\n";
        for (const auto& qv : dp.quadrics) {
            for (auto e : qv) os << f2.to_string(e);
            os << "\n";
        }
        os << "code parameters: [13,5," << d << "]\n";
        os << "dim C^(2) = " << dim_sq << ", dim I2 = " << h.dim_i2() << ", hull points = " << pts
           << "\n";
        res.human = os.str();
        if (d != 5 || dim_sq != 13 || h.dim_i2() != 2 || pts != 13)
            throw std::logic_error("del Pezzo self-check failed");
    });
}

inline CmdResult cmd_supercode(const std::string& code_text, const std::string& a_spec) {
    json inputs{{"algebra", a_spec}};
    return detail::run_command("supercode", inputs, [&](CmdResult& res) {
        BCode c = bcode_from_text(code_text, load_file);
        Algebra a = parse_algebra_spec(a_spec, load_file);
        auto w = find_supercode_witness(c, a);
        if (!w) {
            res.report["outputs"]["witness"] = json(nullptr);
            res.human = "none\n";
            res.exit_code = 2;
            return;
        }
        auto v = is_mult_reduction(a, c.b, w->phi);
        if (!v.ok) throw std::logic_error("witness-induced phi failed verification");
        json point = json::array();
        for (const auto& coord : w->point) point.push_back(vec_to_json(a.field, coord));
        res.report["outputs"]["witness"] = point;
        res.report["outputs"]["phi"] = mat_to_json(w->phi);
        res.human = "witness found\nphi:\n" + mat_to_text(w->phi);
    });
}

}  // namespace qh
