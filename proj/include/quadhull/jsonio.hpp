#pragma once

// JSON serialization for reports and reductions.

#include <string>
#include <vector>

#include <json.hpp>

#include "quadhull/hull.hpp"
#include "quadhull/linalg.hpp"
#include "quadhull/multred.hpp"
#include "quadhull/search.hpp"
#include "quadhull/tables.hpp"

namespace qh {

using json = nlohmann::json;

inline json vec_to_json(const Fq& f, const Vec& v) {
    json a = json::array();
    for (auto e : v) a.push_back(f.to_string(e));
    return a;
}

inline json mat_to_json(const Mat& m) {
    json rows = json::array();
    for (size_t r = 0; r < m.rows; ++r) rows.push_back(vec_to_json(m.field, m.row(r)));
    return rows;
}

inline Mat mat_from_json(const Fq& f, const json& rows) {
    size_t nr = rows.size();
    size_t nc = nr ? rows[0].size() : 0;
    Mat m(f, nr, nc);
    for (size_t r = 0; r < nr; ++r)
        for (size_t c = 0; c < nc; ++c) m.at(r, c) = f.parse(rows[r][c].get<std::string>());
    return m;
}

inline json subspace_to_json(const Subspace& s) {
    return json{{"ambient", s.ambient}, {"dim", s.dim()}, {"basis", mat_to_json(s.basis)}};
}

inline json hull_report_to_json(const HullReport& rep, const Fq& f) {
    json j;
    j["dim_i2"] = rep.dim_i2;
    json basis = json::array();
    for (const auto& row : rep.i2_basis) basis.push_back(vec_to_json(f, row));
    j["i2_basis"] = basis;
    json counts = json::object();
    for (const auto& [m, c] : rep.point_counts) counts[std::to_string(m)] = c;
    j["point_counts"] = counts;
    json pts = json::array();
    for (const auto& p : rep.points_m1) pts.push_back(vec_to_json(f, p));
    j["points_m1"] = pts;
    j["ci_proxy"] = rep.ci_proxy ? json(*rep.ci_proxy) : json(nullptr);
    j["canonical_in_hull"] = rep.canonical_in_hull ? json(*rep.canonical_in_hull) : json(nullptr);
    return j;
}

inline json reduction_to_json(const MultReduction& r, const std::string& a_spec,
                              const std::string& b_spec) {
    json j;
    j["algebra_spec_A"] = a_spec;
    j["algebra_spec_B"] = b_spec;
    j["phi"] = mat_to_json(r.phi);
    j["omega"] = r.omega ? mat_to_json(*r.omega) : json(nullptr);
    return j;
}

inline json search_result_to_json(const SearchProblem& p, const SearchResult& sr,
                                  const std::string& algebra_spec, uint32_t ext) {
    json j;
    j["algebra"] = algebra_spec;
    j["n"] = sr.n;
    j["count_W"] = sr.ws.size();
    json per_w = json::array();
    for (const auto& w : sr.ws) {
        json e;
        json sig = json::array();
        for (size_t r = 0; r < w.w.dim(); ++r)
            sig.push_back(vec_to_json(p.a.field, w.w.basis.row(r)));
        e["signature"] = sig;
        e["e_cap_w"] = w.e_in_w;
        e["dim_i2"] = w.dim_i2;
        json counts = json::object();
        counts["1"] = w.e_in_w.size();
        if (ext > 1) {
            QuadHull h = i2_from_W(w.w, p.a.k);
            for (uint32_t m = 2; m <= ext; ++m)
                counts[std::to_string(m)] = count_points(h, m);
        }
        e["point_counts"] = counts;
        e["unique"] = w.unique_algorithm;
        per_w.push_back(std::move(e));
    }
    j["per_W"] = per_w;
    j["nodes"] = sr.node_count;
    j["seconds"] = sr.seconds;
    return j;
}

inline json table_results_to_json(const std::vector<TableRowResult>& rows) {
    json arr = json::array();
    for (const auto& r : rows) {
        json j;
        j["k"] = r.spec.k;
        j["n"] = r.spec.n;
        j["expected_W"] = r.spec.w_count;
        j["ran"] = r.ran;
        if (r.ran) {
            j["count_W"] = r.w_count;
            json splits = json::object();
            for (const auto& [pts, cnt] : r.splits) splits[std::to_string(pts)] = cnt;
            j["splits"] = splits;
            j["pass"] = r.pass;
            j["nodes"] = r.nodes;
            j["seconds"] = r.seconds;
            if (!r.fingerprint_groups.empty()) j["fingerprint_groups"] = r.fingerprint_groups;
        }
        if (!r.note.empty()) j["note"] = r.note;
        arr.push_back(std::move(j));
    }
    return arr;
}

}  // namespace qh
