#include "strand/report.hpp"

#include <algorithm>
#include <json.hpp>
#include <sstream>

#include "strand/io.hpp"

namespace strand {

namespace {

using Json = nlohmann::ordered_json;

long long betti_work_estimate(const MonomialIdeal& lead, int max_i, int max_j) {
    int n = lead.ring().nvars;
    std::vector<std::int64_t> hf(max_j + 2, 0);
    for (int d = 0; d <= max_j + 1; ++d) hf[d] = hilbert_function(lead, d);
    long long total = 0;
    for (int i = 1; i <= std::min(max_i + 1, n); ++i) {
        for (int j = 0; j <= max_j; ++j) {
            int d = j;  // source quotient degree of the strand at (i, i+j)
            if (d + 1 >= static_cast<int>(hf.size())) continue;
            long long cols = binomial(n, i) * hf[d];
            long long rows = binomial(n, i - 1) * hf[d + 1];
            long long cells = cols * rows;
            total += cells;
        }
    }
    return total;
}

Json betti_json(const BettiTable& t) {
    Json entries = Json::array();
    for (auto& [ij, b] : t.entries) {
        if (b == 0) continue;
        entries.push_back(Json{{"i", ij.first}, {"j", ij.second}, {"beta", b}});
    }
    return Json{{"max_i", t.max_i},
                {"max_j", t.max_j},
                {"truncated", t.truncated},
                {"entries", entries}};
}

std::string verdict_name(NdVerdict v) {
    switch (v) {
        case NdVerdict::Certified: return "certified";
        case NdVerdict::Refuted: return "refuted";
        default: return "unstable";
    }
}

Json nd_json(const NDCertificate& c) {
    Json witness = Json::array();
    for (auto& w : c.witness) witness.push_back(w.str());
    return Json{{"ell", c.ell},
                {"verdict", verdict_name(c.verdict)},
                {"method", c.method == NdMethod::GinCriterion ? "gin_criterion"
                                                              : "direct_section"},
                {"e", c.e},
                {"seed", c.seed},
                {"witness", witness},
                {"note", c.note}};
}

}  // namespace

AnalysisReport analyze(const Ideal& ideal, const AnalyzeOptions& options,
                       const std::string& name) {
    AnalysisReport rep;
    rep.name = name;
    rep.prime = ideal.ring.prime;
    rep.nvars = ideal.ring.nvars;
    rep.num_generators = 0;
    for (auto& g : ideal.gens)
        if (!g.is_zero()) ++rep.num_generators;

    rep.gin = generic_initial_ideal(ideal, options.trials, options.seed);
    if (!rep.gin.stable) return rep;  // partial report; caller maps to exit 3

    rep.hilbert = hilbert_data(rep.gin.gin);
    rep.regularity = regularity_from_gin(rep.gin);
    int e = rep.hilbert.e;
    int cap = std::max(rep.regularity, 1);
    rep.nd_index = nd_index_from_gin(rep.gin, cap);
    for (int ell = 1; ell <= std::min(rep.nd_index + 1, cap); ++ell)
        rep.nd_certificates.push_back(nd_check_from_gin(rep.gin, ell));

    rep.betti_gin = ek_betti(rep.gin.gin);

    // exact Koszul table, size permitting
    int max_i = options.max_i > 0 ? options.max_i : ideal.ring.nvars;
    int max_j = options.max_degree >= 0 ? options.max_degree
                                        : std::max(rep.regularity - 1, 0);
    GroebnerBasis gb = buchberger(ideal, MonomialOrder::DegRevLex);
    MonomialIdeal lead = initial_ideal(gb);
    if (!lead.is_unit()) {
        long long work = betti_work_estimate(lead, max_i, max_j);
        if (options.force_betti || work <= options.betti_cell_limit) {
            rep.betti = koszul_betti(gb, max_i, max_j,
                                     std::max(rep.regularity - 1, 0));
        } else {
            rep.betti_skipped_for_size = true;
        }
    }

    // N_{d,p} verdicts: exact when the Koszul table exists; otherwise the
    // gin table majorizes the true one, so positives transfer
    const BettiTable& source = rep.betti ? *rep.betti : rep.betti_gin;
    rep.ndp_source = rep.betti ? "koszul" : "gin-bound";
    for (int d = 2; d <= rep.regularity + 1; ++d) {
        for (int p = 1; p <= std::min(e + 1, source.proj_dim()); ++p) {
            NdpVerdict v = property_ndp(source, d, p);
            bool determinate = rep.betti ? v.determinate : v.holds;
            rep.ndp_matrix.push_back(NdpCell{d, p, v.holds, determinate});
        }
    }

    if (rep.nd_index >= 1 && !rep.hilbert.empty_scheme()) {
        int ell = rep.nd_index;
        const BettiTable& bt = rep.betti ? *rep.betti : rep.betti_gin;
        rep.thmA = thmA_verdict(bt, e, ell, &rep.gin.gin, &rep.hilbert);
        rep.degree_bound = degree_bound_from_data(rep.hilbert, ell);
        rep.h_check = h_nonnegativity_check(gb, rep.nd_index + 1);
    }

    if (rep.betti) {
        rep.cancellation = cancellation_decomposition(*rep.betti, rep.betti_gin);
        // rigidity at d = nd_index + 1: nd(d-1) is certified by definition
        int d = rep.nd_index + 1;
        if (d >= 2 && e >= 1) {
            RigidityReport rig;
            rig.d = d;
            rig.e = e;
            rig.nd_hypothesis = true;
            NdpVerdict ndp = property_ndp(*rep.betti, d, e);
            rig.ndp_hypothesis = ndp.holds && ndp.determinate;
            if (!rig.ndp_hypothesis)
                rig.failed_hypothesis = "N_{" + std::to_string(d) + "," +
                                        std::to_string(e) + "} refuted";
            rig.hypotheses_met = rig.nd_hypothesis && rig.ndp_hypothesis;
            rig.degree = rep.hilbert.degree;
            rig.expected_degree = binomial(d - 1 + e, e);
            if (rig.hypotheses_met) {
                rig.conclusion_acm_dlinear =
                    is_acm_dlinear(*rep.betti, rep.hilbert.n, e, d);
                rig.conclusion_degree = (rig.degree == rig.expected_degree);
            }
            rep.rigidity = rig;
        }
    }

    // theorem-contract consistency; a violation here is a bug, never ignored
    auto flag = [&](const std::string& msg) {
        rep.consistent = false;
        rep.inconsistencies.push_back(msg);
    };
    std::int64_t hsum = 0;
    for (auto v : rep.hilbert.h_vector) hsum += v;
    if (hsum != rep.hilbert.degree) flag("degree != sum of h-vector");
    if (rep.betti && rep.betti->at(0, 0) != 1 && rep.num_generators > 0)
        flag("beta_{0,0} != 1");
    if (rep.thmA) {
        if (!rep.thmA->bound_ok) flag("first-strand bound violated under nd");
        if (!rep.thmA->zero_beyond_e)
            flag("beta_{i,ell} nonzero beyond the codimension");
        if (rep.thmA->any_equality && rep.thmA->checked_equivalences &&
            !rep.thmA->equivalences_ok)
            flag("extremal equality without the equivalent conditions");
    }
    if (rep.degree_bound && !rep.degree_bound->holds)
        flag("degree below the nd degree bound");
    if (rep.h_check && !rep.h_check->ok())
        flag("h-vector formula failed under certified nd: " +
             rep.h_check->detail);
    if (rep.cancellation && !rep.cancellation->ok)
        flag("no consecutive-cancellation decomposition: " +
             rep.cancellation->detail);
    if (rep.rigidity && rep.rigidity->hypotheses_met &&
        !(rep.rigidity->conclusion_acm_dlinear &&
          rep.rigidity->conclusion_degree))
        flag("rigidity hypotheses met but conclusion failed");
    return rep;
}

std::string render_text(const AnalysisReport& rep) {
    std::ostringstream os;
    os << "ideal: " << (rep.name.empty() ? "(unnamed)" : rep.name) << "\n";
    os << "ring: GF(" << rep.prime << ")[x0.." << "x" << rep.nvars - 1 << "], "
       << rep.num_generators << " generators\n";
    if (!rep.gin.stable) {
        os << "gin: UNSTABLE after " << rep.gin.trials
           << " trials (seed " << rep.gin.seed << ")\n";
        return os.str();
    }
    os << "dimension n = " << rep.hilbert.n << ", codimension e = "
       << rep.hilbert.e << ", degree = " << rep.hilbert.degree << "\n";
    os << "h-vector: (";
    for (std::size_t i = 0; i < rep.hilbert.h_vector.size(); ++i)
        os << (i ? "," : "") << rep.hilbert.h_vector[i];
    os << ")\n";
    os << "regularity reg(I) = " << rep.regularity << "\n";
    os << "gin (seed " << rep.gin.seed << ", " << rep.gin.agreements << "/"
       << rep.gin.trials << " agreeing trials):\n";
    for (auto& g : rep.gin.gin.min_gens()) os << "  " << g.str() << "\n";
    os << "nd-index = " << rep.nd_index << "\n";
    for (auto& c : rep.nd_certificates) {
        os << "  nd(" << c.ell << "): " << verdict_name(c.verdict);
        if (!c.witness.empty()) {
            os << "  witness:";
            for (auto& w : c.witness) os << " " << w.str();
        }
        os << "\n";
    }
    os << "betti numbers of R/gin (Eliahou-Kervaire):\n"
       << format_betti_table(rep.betti_gin);
    if (rep.betti) {
        os << "betti numbers of R/I (Koszul):\n" << format_betti_table(*rep.betti);
    } else if (rep.betti_skipped_for_size) {
        os << "betti numbers of R/I: skipped (table too large; rerun with "
              "--force-betti)\n";
    }
    if (!rep.ndp_matrix.empty()) {
        os << "property N_{d,p} (" << rep.ndp_source << "):\n";
        for (auto& cell : rep.ndp_matrix) {
            os << "  N_{" << cell.d << "," << cell.p << "}: "
               << (cell.holds ? "holds" : "fails")
               << (cell.determinate ? "" : " (indeterminate)") << "\n";
        }
    }
    if (rep.thmA) {
        os << "first-strand bounds at ell = " << rep.thmA->ell
           << (rep.ndp_source == "gin-bound" ? " (from the gin majorant)" : "")
           << ":\n";
        for (auto& row : rep.thmA->rows) {
            os << "  beta_{" << row.i << "," << rep.thmA->ell << "} = "
               << row.beta << " <= " << row.bound
               << (row.equality ? "  (equality)" : "") << "\n";
        }
        if (rep.thmA->checked_equivalences) {
            os << "  equality case: gin == power ideal: "
               << (rep.thmA->gin_is_power_ideal ? "yes" : "no")
               << ", ACM linear: " << (rep.thmA->acm_linear ? "yes" : "no")
               << ", minimal degree: "
               << (rep.thmA->degree_minimal ? "yes" : "no") << "\n";
        }
    }
    if (rep.degree_bound) {
        os << "degree bound: deg = " << rep.degree_bound->degree
           << " >= C(e+ell,ell) = " << rep.degree_bound->bound << ": "
           << (rep.degree_bound->holds ? "holds" : "VIOLATED")
           << (rep.degree_bound->equality
                   ? "  (minimal degree of ell-th kind)"
                   : "")
           << "\n";
    }
    if (rep.h_check) {
        os << "h-vector check at ell = " << rep.h_check->ell << ": "
           << (rep.h_check->ok() ? "ok" : ("FAILED " + rep.h_check->detail))
           << "\n";
    }
    if (rep.cancellation) {
        os << "consecutive cancellation vs gin: "
           << (rep.cancellation->ok ? "ok" : "FAILED") << "\n";
    }
    if (rep.rigidity) {
        os << "rigidity at d = " << rep.rigidity->d << ": ";
        if (!rep.rigidity->hypotheses_met) {
            os << "hypothesis failed (" << rep.rigidity->failed_hypothesis
               << "); nothing asserted\n";
        } else {
            os << "ACM d-linear: "
               << (rep.rigidity->conclusion_acm_dlinear ? "yes" : "NO")
               << ", degree " << rep.rigidity->degree << " == "
               << rep.rigidity->expected_degree << ": "
               << (rep.rigidity->conclusion_degree ? "yes" : "NO") << "\n";
        }
    }
    os << "consistent: " << (rep.consistent ? "yes" : "NO") << "\n";
    for (auto& msg : rep.inconsistencies) os << "  inconsistency: " << msg << "\n";
    return os.str();
}

std::string render_json(const AnalysisReport& rep) {
    Json j;
    j["name"] = rep.name;
    j["prime"] = rep.prime;
    j["nvars"] = rep.nvars;
    j["num_generators"] = rep.num_generators;
    j["gin"] = Json{{"stable", rep.gin.stable},
                    {"trials", rep.gin.trials},
                    {"agreements", rep.gin.agreements},
                    {"seed", rep.gin.seed}};
    if (!rep.gin.stable) {
        j["status"] = "unstable";
        return j.dump(2) + "\n";
    }
    Json gens = Json::array();
    for (auto& g : rep.gin.gin.min_gens()) gens.push_back(g.str());
    j["gin"]["generators"] = gens;
    j["regularity"] = rep.regularity;
    j["hilbert"] = Json{{"n", rep.hilbert.n},
                        {"e", rep.hilbert.e},
                        {"degree", rep.hilbert.degree},
                        {"h_vector", rep.hilbert.h_vector}};
    j["nd_index"] = rep.nd_index;
    Json certs = Json::array();
    for (auto& c : rep.nd_certificates) certs.push_back(nd_json(c));
    j["nd_certificates"] = certs;
    j["betti_gin"] = betti_json(rep.betti_gin);
    if (rep.betti)
        j["betti"] = betti_json(*rep.betti);
    else if (rep.betti_skipped_for_size)
        j["betti"] = "skipped";
    j["ndp_source"] = rep.ndp_source;
    Json ndp = Json::array();
    for (auto& cell : rep.ndp_matrix)
        ndp.push_back(Json{{"d", cell.d},
                           {"p", cell.p},
                           {"holds", cell.holds},
                           {"determinate", cell.determinate}});
    j["ndp"] = ndp;
    if (rep.thmA) {
        Json rows = Json::array();
        for (auto& r : rep.thmA->rows)
            rows.push_back(Json{{"i", r.i},
                                {"beta", r.beta},
                                {"bound", r.bound},
                                {"equality", r.equality}});
        j["first_strand"] = Json{{"ell", rep.thmA->ell},
                                 {"rows", rows},
                                 {"bound_ok", rep.thmA->bound_ok},
                                 {"zero_beyond_e", rep.thmA->zero_beyond_e}};
    }
    if (rep.degree_bound)
        j["degree_bound"] = Json{{"ell", rep.degree_bound->ell},
                                 {"bound", rep.degree_bound->bound},
                                 {"degree", rep.degree_bound->degree},
                                 {"holds", rep.degree_bound->holds},
                                 {"equality", rep.degree_bound->equality}};
    if (rep.h_check)
        j["h_check"] = Json{{"ell", rep.h_check->ell},
                            {"ok", rep.h_check->ok()},
                            {"h_ell", rep.h_check->h_ell},
                            {"dim_I_ell", rep.h_check->dim_I_ell}};
    if (rep.cancellation)
        j["cancellation"] = Json{{"ok", rep.cancellation->ok}};
    if (rep.rigidity)
        j["rigidity"] = Json{
            {"d", rep.rigidity->d},
            {"hypotheses_met", rep.rigidity->hypotheses_met},
            {"failed_hypothesis", rep.rigidity->failed_hypothesis},
            {"acm_dlinear", rep.rigidity->conclusion_acm_dlinear},
            {"degree_ok", rep.rigidity->conclusion_degree}};
    j["consistent"] = rep.consistent;
    j["inconsistencies"] = rep.inconsistencies;
    return j.dump(2) + "\n";
}

std::string nd_certificate_json(const NDCertificate& cert) {
    return nd_json(cert).dump(2) + "\n";
}

std::string gin_certificate_json(const GinResult& gin, int regularity) {
    Json gens = Json::array();
    for (auto& g : gin.gin.min_gens()) gens.push_back(g.str());
    Json j{{"stable", gin.stable},
           {"trials", gin.trials},
           {"agreements", gin.agreements},
           {"seed", gin.seed},
           {"generators", gens},
           {"regularity", regularity}};
    return j.dump(2) + "\n";
}

}  // namespace strand
