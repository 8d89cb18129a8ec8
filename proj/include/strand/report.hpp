#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "strand/betti.hpp"
#include "strand/gin.hpp"
#include "strand/hilbert.hpp"
#include "strand/nd.hpp"

namespace strand {

struct AnalyzeOptions {
    std::uint32_t prime_override = 0;
    std::uint64_t seed = 0;
    int trials = 2;
    int max_i = -1;       // Koszul table bounds; -1 = automatic from gin
    int max_degree = -1;  // largest internal-degree row; -1 = reg(R/I)
    bool force_betti = false;
    // strand matrices beyond this many cells skip the exact Betti table
    long long betti_cell_limit = 40'000'000;
};

struct NdpCell {
    int d = 0;
    int p = 0;
    bool holds = false;
    bool determinate = false;
};

// full pipeline output: gin -> nd-index -> hilbert -> betti -> verdicts
struct AnalysisReport {
    std::string name;
    std::uint32_t prime = 0;
    int nvars = 0;
    int num_generators = 0;
    HilbertData hilbert;
    GinResult gin;
    int regularity = 0;  // reg(I) as max gin generator degree
    int nd_index = 0;
    std::vector<NDCertificate> nd_certificates;
    BettiTable betti_gin;               // Eliahou-Kervaire table of the gin
    std::optional<BettiTable> betti;    // exact Koszul table when computed
    bool betti_skipped_for_size = false;
    std::string ndp_source;             // "koszul" or "gin-bound"
    std::vector<NdpCell> ndp_matrix;
    std::optional<ThmAReport> thmA;
    std::optional<DegreeBoundReport> degree_bound;
    std::optional<HVectorCheck> h_check;
    std::optional<CancellationCheck> cancellation;
    std::optional<RigidityReport> rigidity;
    bool consistent = true;
    std::vector<std::string> inconsistencies;
};

AnalysisReport analyze(const Ideal& ideal, const AnalyzeOptions& options,
                       const std::string& name = "");

std::string render_text(const AnalysisReport& report);
std::string render_json(const AnalysisReport& report);

// deterministic structured forms shared with the CLI subcommands
std::string nd_certificate_json(const NDCertificate& cert);
std::string gin_certificate_json(const GinResult& gin, int regularity);

}  // namespace strand
