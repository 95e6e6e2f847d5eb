#pragma once

// Row/report assembly shared by the CLI and the acceptance suite: the scan
// table (one row per tight parameter set with its coclique-count verdict)
// and the per-parameter-set analysis report.

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "tightsrg/design.hpp"
#include "tightsrg/nonexistence.hpp"
#include "tightsrg/srg.hpp"

namespace tightsrg {

struct ScanRow {
    TightParams t;
    QuasiSymParams q;
    Verdict verdict;
};

// One row per tight parameter set in [v_min, v_max] with e+ >= e_plus_min.
// With a facts table the verdict may use literature bounds; without one the
// bounds are purely derived and rows with a built-in fact get an advisory
// note instead.
inline std::vector<ScanRow> scan_rows(const Int& v_min, const Int& v_max,
                                      const Int& e_plus_min,
                                      const std::optional<std::vector<KnownFact>>& facts,
                                      int threads = 1) {
    std::vector<ScanRow> rows;
    for (const TightParams& t : scan_tight_parameters(v_min, v_max, e_plus_min, threads)) {
        ScanRow row;
        row.t = t;
        row.q = quasisym_params(t);
        if (facts) {
            row.verdict = max_delsarte_cocliques(t, *facts);
        } else {
            row.verdict = max_delsarte_cocliques(t, {});
            if (auto f = find_fact(builtin_known_facts(), t.spectrum.e_plus,
                                   t.spectrum.e_minus)) {
                if (!row.verdict.note.empty()) row.verdict.note += "; ";
                row.verdict.note += "literature fact available: " + f->citation;
            }
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

// CSV with the table's column set: v,k,lambda,mu,e+,e-,m-,s1,s2,#
inline std::string scan_csv(const std::vector<ScanRow>& rows) {
    std::ostringstream out;
    out << "v,k,lambda,mu,eplus,eminus,mminus,s1,s2,cocliques\n";
    for (const auto& r : rows)
        out << r.t.params.v.str() << ',' << r.t.params.k.str() << ','
            << r.t.params.lambda.str() << ',' << r.t.params.mu.str() << ','
            << r.t.spectrum.e_plus.str() << ',' << r.t.spectrum.e_minus.str() << ','
            << r.t.spectrum.m_minus.str() << ',' << r.q.s1.str() << ',' << r.q.s2.str()
            << ',' << r.verdict.bound.str() << '\n';
    return out.str();
}

inline std::string scan_human(const std::vector<ScanRow>& rows) {
    std::ostringstream out;
    out << "    v     k  lam   mu  e+   e-   m-  s1  s2    #  reason\n";
    for (const auto& r : rows) {
        auto col = [&](const Int& x, int w) {
            std::string s = x.str();
            out << std::string(s.size() >= static_cast<size_t>(w) ? 1 : w - s.size(), ' ')
                << s;
        };
        col(r.t.params.v, 5);
        col(r.t.params.k, 6);
        col(r.t.params.lambda, 5);
        col(r.t.params.mu, 5);
        col(r.t.spectrum.e_plus, 4);
        col(r.t.spectrum.e_minus, 5);
        col(r.t.spectrum.m_minus, 5);
        col(r.q.s1, 4);
        col(r.q.s2, 4);
        col(r.verdict.bound, 5);
        out << "  " << r.verdict.rule << ": " << r.verdict.detail << '\n';
        if (!r.verdict.note.empty()) out << "          note: " << r.verdict.note << '\n';
    }
    return out.str();
}

inline nlohmann::json verdict_json(const Verdict& v) {
    nlohmann::json j;
    j["bound"] = v.bound.str();
    j["rule"] = v.rule;
    j["detail"] = v.detail;
    if (!v.note.empty()) j["note"] = v.note;
    return j;
}

inline nlohmann::json scan_json(const std::vector<ScanRow>& rows) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rows) {
        nlohmann::json j;
        j["v"] = r.t.params.v.str();
        j["k"] = r.t.params.k.str();
        j["lambda"] = r.t.params.lambda.str();
        j["mu"] = r.t.params.mu.str();
        j["eplus"] = r.t.spectrum.e_plus.str();
        j["eminus"] = r.t.spectrum.e_minus.str();
        j["mminus"] = r.t.spectrum.m_minus.str();
        j["s1"] = r.q.s1.str();
        j["s2"] = r.q.s2.str();
        j["verdict"] = verdict_json(r.verdict);
        arr.push_back(std::move(j));
    }
    return arr;
}

inline std::string rat_str(const Rat& r) {
    if (is_integer(r)) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

// Full analysis of one eigenvalue pair: parameters, spectrum, the three
// derived designs, the divisibility check, and the coclique-count verdict.
inline nlohmann::json analyze_report(const Int& e_plus, const Int& e_minus,
                                     const std::optional<std::vector<KnownFact>>& facts) {
    TightParams t = params_from_eigenvalues(e_plus, e_minus);
    QuasiSymParams q = quasisym_params(t);
    SymmetricDesignParams sym = symmetric_design_params(t);
    EqualityDesignParams eq = equality_design_params(t);
    DivisibilityCheck div = divisibility_check(e_plus, e_minus);
    Verdict verdict = max_delsarte_cocliques(t, facts ? *facts : std::vector<KnownFact>{});

    nlohmann::json j;
    j["input"]["eplus"] = e_plus.str();
    j["input"]["eminus"] = e_minus.str();
    j["params"]["v"] = t.params.v.str();
    j["params"]["k"] = t.params.k.str();
    j["params"]["lambda"] = t.params.lambda.str();
    j["params"]["mu"] = t.params.mu.str();
    j["spectrum"]["mplus"] = t.spectrum.m_plus.str();
    j["spectrum"]["mminus"] = t.spectrum.m_minus.str();
    j["hoffman"] = t.hoffman.str();
    j["quasisymmetric"]["v"] = q.v_tilde.str();
    j["quasisymmetric"]["k"] = q.k_tilde.str();
    j["quasisymmetric"]["lambda"] = q.lambda_tilde.str();
    j["quasisymmetric"]["r"] = q.r_tilde.str();
    j["quasisymmetric"]["s1"] = q.s1.str();
    j["quasisymmetric"]["s2"] = q.s2.str();
    j["quasisymmetric"]["blocks"] = q.block_count.str();
    j["symmetric"]["v"] = rat_str(sym.v_tilde);
    j["symmetric"]["k"] = sym.k_tilde.str();
    j["symmetric"]["lambda"] = sym.lambda_tilde.str();
    j["symmetric"]["integral"] = sym.integral;
    j["pairwise_intersection"] = rat_str(pairwise_intersection(t));
    j["triple_intersection"] = rat_str(triple_intersection(t));
    j["equality_design"]["v"] = eq.v_tilde.str();
    j["equality_design"]["k"] = rat_str(eq.k_tilde);
    j["equality_design"]["lambda"] = rat_str(eq.lambda_tilde);
    j["equality_design"]["integral"] = eq.integral;
    j["divisibility"]["c"] = rat_str(div.c);
    j["divisibility"]["holds"] = div.holds;
    j["verdict"] = verdict_json(verdict);
    return j;
}

inline std::string analyze_human(const nlohmann::json& j) {
    std::ostringstream out;
    out << "eigenvalues       e+ = " << j["input"]["eplus"].get<std::string>()
        << ", e- = " << j["input"]["eminus"].get<std::string>() << '\n';
    out << "srg parameters    (" << j["params"]["v"].get<std::string>() << ","
        << j["params"]["k"].get<std::string>() << ","
        << j["params"]["lambda"].get<std::string>() << ","
        << j["params"]["mu"].get<std::string>() << ")"
        << "  multiplicities m+ = " << j["spectrum"]["mplus"].get<std::string>()
        << ", m- = " << j["spectrum"]["mminus"].get<std::string>() << '\n';
    out << "hoffman bound     " << j["hoffman"].get<std::string>() << '\n';
    out << "quasisymmetric    2-(" << j["quasisymmetric"]["v"].get<std::string>() << ","
        << j["quasisymmetric"]["k"].get<std::string>() << ","
        << j["quasisymmetric"]["lambda"].get<std::string>() << ")  r = "
        << j["quasisymmetric"]["r"].get<std::string>() << ", intersections {"
        << j["quasisymmetric"]["s1"].get<std::string>() << ","
        << j["quasisymmetric"]["s2"].get<std::string>() << "}, "
        << j["quasisymmetric"]["blocks"].get<std::string>() << " blocks\n";
    out << "symmetric         2-(" << j["symmetric"]["v"].get<std::string>() << ","
        << j["symmetric"]["k"].get<std::string>() << ","
        << j["symmetric"]["lambda"].get<std::string>() << ")"
        << (j["symmetric"]["integral"].get<bool>() ? "" : "  [non-integral]") << '\n';
    out << "pairwise/triple   " << j["pairwise_intersection"].get<std::string>() << " / "
        << j["triple_intersection"].get<std::string>() << '\n';
    out << "equality design   2-(" << j["equality_design"]["v"].get<std::string>() << ","
        << j["equality_design"]["k"].get<std::string>() << ","
        << j["equality_design"]["lambda"].get<std::string>() << ")"
        << (j["equality_design"]["integral"].get<bool>() ? "" : "  [non-integral]") << '\n';
    out << "divisibility      c = " << j["divisibility"]["c"].get<std::string>() << ", "
        << (j["divisibility"]["holds"].get<bool>() ? "holds" : "fails") << '\n';
    out << "verdict           at most " << j["verdict"]["bound"].get<std::string>()
        << " Delsarte cocliques  [" << j["verdict"]["rule"].get<std::string>() << ": "
        << j["verdict"]["detail"].get<std::string>() << "]\n";
    if (j["verdict"].contains("note"))
        out << "note              " << j["verdict"]["note"].get<std::string>() << '\n';
    return out.str();
}

}  // namespace tightsrg
