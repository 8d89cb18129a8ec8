#include <CLI11.hpp>
#include <iostream>
#include <sstream>

#include "strand/constructions.hpp"
#include "strand/io.hpp"
#include "strand/pei.hpp"
#include "strand/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitUnstable = 3;
constexpr int kExitInconsistent = 4;

strand::IntegerMatrix read_matrix_file(const std::string& path) {
    strand::IntegerMatrix m;
    std::istringstream is(strand::read_text_file(path));
    std::string line;
    while (std::getline(is, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::vector<std::int64_t> row;
        std::int64_t v;
        while (ls >> v) row.push_back(v);
        if (row.empty()) continue;
        if (!m.a.empty() && row.size() != m.a.front().size())
            throw std::runtime_error("matrix file: ragged rows");
        m.a.push_back(std::move(row));
    }
    if (m.a.empty()) throw std::runtime_error("matrix file: empty");
    m.rows = static_cast<int>(m.a.size());
    m.cols = static_cast<int>(m.a.front().size());
    return m;
}

std::vector<std::vector<std::uint32_t>> read_points_file(
    const std::string& path, std::uint32_t prime) {
    std::vector<std::vector<std::uint32_t>> pts;
    strand::Gf gf(prime);
    std::istringstream is(strand::read_text_file(path));
    std::string line;
    while (std::getline(is, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::vector<std::uint32_t> row;
        std::int64_t v;
        while (ls >> v) row.push_back(gf.from_int(v));
        if (!row.empty()) pts.push_back(std::move(row));
    }
    if (pts.empty()) throw std::runtime_error("points file: empty");
    return pts;
}

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty())
        std::cout << content;
    else
        strand::write_text_file(out_path, content);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "strand: Groebner, generic initial ideals, Betti tables, "
        "nondegeneracy certificates, partial elimination ideals and "
        "Boij-Soderberg decompositions over GF(p)"};
    app.require_subcommand(1);

    std::string input, output, format = "text";
    std::uint32_t prime_override = 0;
    std::uint64_t seed = 0;
    int trials = 2;

    // ---- analyze ----
    auto* analyze_cmd =
        app.add_subcommand("analyze", "full pipeline: gin, nd-index, hilbert, "
                                      "betti, theorem verdicts");
    int max_i = -1, max_degree = -1;
    bool force_betti = false;
    analyze_cmd->add_option("file", input, "ideal file")->required();
    analyze_cmd->add_option("--prime", prime_override, "override the prime");
    analyze_cmd->add_option("--seed", seed, "RNG seed");
    analyze_cmd->add_option("--trials", trials, "gin stability trials");
    analyze_cmd->add_option("--max-i", max_i, "betti table column bound");
    analyze_cmd->add_option("--max-degree", max_degree,
                            "betti table row bound (internal degree)");
    analyze_cmd->add_flag("--force-betti", force_betti,
                          "compute the exact table regardless of size");
    analyze_cmd->add_option("--format", format, "text | structured");

    // ---- gin ----
    auto* gin_cmd = app.add_subcommand(
        "gin", "generic initial ideal with a stability certificate");
    gin_cmd->add_option("file", input, "ideal file")->required();
    gin_cmd->add_option("--prime", prime_override, "override the prime");
    gin_cmd->add_option("--seed", seed, "RNG seed");
    gin_cmd->add_option("--trials", trials, "stability trials");

    // ---- nd ----
    auto* nd_cmd = app.add_subcommand("nd", "certify or refute nd(ell)");
    int ell = 1;
    bool direct = false;
    nd_cmd->add_option("file", input, "ideal file")->required();
    nd_cmd->add_option("--ell", ell, "level to certify")->required();
    nd_cmd->add_flag("--direct", direct, "use the random-section method");
    nd_cmd->add_option("--prime", prime_override, "override the prime");
    nd_cmd->add_option("--seed", seed, "RNG seed");
    nd_cmd->add_option("--trials", trials, "gin stability trials");

    // ---- nd-index ----
    auto* ndindex_cmd = app.add_subcommand("nd-index", "maximal certified nd level");
    int cap = 10;
    ndindex_cmd->add_option("file", input, "ideal file")->required();
    ndindex_cmd->add_option("--cap", cap, "search cap");
    ndindex_cmd->add_option("--prime", prime_override, "override the prime");
    ndindex_cmd->add_option("--seed", seed, "RNG seed");
    ndindex_cmd->add_option("--trials", trials, "gin stability trials");

    // ---- pei ----
    auto* pei_cmd = app.add_subcommand(
        "pei", "partial elimination ideals under Lex with x0 greatest");
    int pei_max = 1;
    pei_cmd->add_option("file", input, "ideal file")->required();
    pei_cmd->add_option("--max-i", pei_max, "levels K_0..K_max");
    pei_cmd->add_option("--prime", prime_override, "override the prime");

    // ---- bezout ----
    auto* bezout_cmd = app.add_subcommand(
        "bezout", "sample plane sections against the length bound");
    int bz_p = 1, bz_d = 2, bz_samples = 64;
    int bz_rnc = 0;
    bezout_cmd->add_option("file", input, "ideal file")->required();
    bezout_cmd->add_option("--p", bz_p, "plane dimension")->required();
    bezout_cmd->add_option("--d", bz_d, "regularity degree d")->required();
    bezout_cmd->add_option("--samples", bz_samples, "number of samples");
    bezout_cmd->add_option("--rnc-deg", bz_rnc,
                           "sample points on a rational normal curve of this "
                           "degree");
    bezout_cmd->add_option("--seed", seed, "RNG seed");
    bezout_cmd->add_option("--prime", prime_override, "override the prime");

    // ---- construct ----
    auto* construct_cmd = app.add_subcommand("construct", "example factory");
    construct_cmd->require_subcommand(1);
    std::uint32_t cprime = 32003;
    auto* rnc_cmd = construct_cmd->add_subcommand("rnc", "rational normal curve");
    int rnc_deg = 3;
    rnc_cmd->add_option("--deg", rnc_deg, "degree")->required();
    rnc_cmd->add_option("--prime", cprime, "prime");
    rnc_cmd->add_option("--out", output, "output ideal file");

    auto* toric_cmd =
        construct_cmd->add_subcommand("toric", "toric ideal of an integer matrix");
    std::string matrix_path;
    toric_cmd->add_option("--matrix", matrix_path, "matrix file")->required();
    toric_cmd->add_option("--prime", cprime, "prime");
    toric_cmd->add_option("--out", output, "output ideal file");

    auto* minors_cmd = construct_cmd->add_subcommand(
        "minors", "t-minors of a block catalecticant");
    int minors_t = 3;
    std::string blocks_spec;
    minors_cmd->add_option("--t", minors_t, "minor size")->required();
    minors_cmd->add_option("--blocks", blocks_spec,
                           "comma-separated variables per block")->required();
    minors_cmd->add_option("--prime", cprime, "prime");
    minors_cmd->add_option("--out", output, "output ideal file");

    auto* veronese_cmd = construct_cmd->add_subcommand("veronese", "d-uple embedding");
    int ver_n = 2, ver_d = 2;
    veronese_cmd->add_option("--n", ver_n, "source dimension")->required();
    veronese_cmd->add_option("--d", ver_d, "embedding degree")->required();
    veronese_cmd->add_option("--prime", cprime, "prime");
    veronese_cmd->add_option("--out", output, "output ideal file");

    auto* project_cmd = construct_cmd->add_subcommand(
        "project", "linear projection from given points");
    std::string points_path, project_input;
    bool isomorphic = false;
    project_cmd->add_option("--input", project_input, "ideal file")->required();
    project_cmd->add_option("--points", points_path, "points file")->required();
    project_cmd->add_flag("--isomorphic", isomorphic,
                          "require dimension and degree to survive");
    project_cmd->add_option("--seed", seed, "RNG seed");
    project_cmd->add_option("--out", output, "output ideal file");

    auto* section_cmd = construct_cmd->add_subcommand(
        "section", "general hyperplane sections");
    std::string section_input;
    int section_count = 1;
    section_cmd->add_option("--input", section_input, "ideal file")->required();
    section_cmd->add_option("--count", section_count, "number of hyperplanes");
    section_cmd->add_option("--seed", seed, "RNG seed");
    section_cmd->add_option("--out", output, "output ideal file");

    // ---- bs ----
    auto* bs_cmd = app.add_subcommand(
        "bs", "Boij-Soderberg decomposition of a rational betti table");
    std::string bs_path;
    bs_cmd->add_option("--decompose", bs_path, "table file: lines 'i totaldeg value'")
        ->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*analyze_cmd) {
            strand::IdealFile file = strand::read_ideal_file(input);
            strand::Ideal ideal = strand::parse_ideal(file, prime_override);
            strand::AnalyzeOptions opts;
            opts.prime_override = prime_override;
            opts.seed = seed;
            opts.trials = trials;
            opts.max_i = max_i;
            opts.max_degree = max_degree;
            opts.force_betti = force_betti;
            strand::AnalysisReport rep =
                strand::analyze(ideal, opts, file.name);
            std::cout << (format == "structured" ? strand::render_json(rep)
                                                 : strand::render_text(rep));
            if (!rep.gin.stable) return kExitUnstable;
            if (!rep.consistent) return kExitInconsistent;
            return kExitOk;
        }
        if (*gin_cmd) {
            strand::Ideal ideal =
                strand::parse_ideal(strand::read_ideal_file(input), prime_override);
            strand::GinResult gin =
                strand::generic_initial_ideal(ideal, trials, seed);
            int reg = gin.stable ? strand::regularity_from_gin(gin) : -1;
            std::cout << strand::gin_certificate_json(gin, reg);
            return gin.stable ? kExitOk : kExitUnstable;
        }
        if (*nd_cmd) {
            strand::Ideal ideal =
                strand::parse_ideal(strand::read_ideal_file(input), prime_override);
            strand::NDCertificate cert =
                direct ? strand::nd_check_direct(ideal, ell, seed)
                       : strand::nd_check(ideal, ell, seed, trials);
            std::cout << strand::nd_certificate_json(cert);
            return cert.verdict == strand::NdVerdict::Unstable ? kExitUnstable
                                                               : kExitOk;
        }
        if (*ndindex_cmd) {
            strand::Ideal ideal =
                strand::parse_ideal(strand::read_ideal_file(input), prime_override);
            int idx = strand::nd_index(ideal, cap, seed, trials);
            std::cout << idx << "\n";
            return kExitOk;
        }
        if (*pei_cmd) {
            strand::Ideal ideal =
                strand::parse_ideal(strand::read_ideal_file(input), prime_override);
            strand::PEIFiltration f =
                strand::partial_elimination_ideals(ideal, pei_max);
            for (int i = 0; i < f.levels(); ++i) {
                std::cout << "K_" << i << ":\n";
                for (auto& g : f.k(i).gens)
                    std::cout << "  " << strand::format_polynomial(g) << "\n";
            }
            return kExitOk;
        }
        if (*bezout_cmd) {
            strand::Ideal ideal =
                strand::parse_ideal(strand::read_ideal_file(input), prime_override);
            strand::PointSampler sampler;
            const strand::PointSampler* sp = nullptr;
            if (bz_rnc > 0) {
                sampler = strand::rnc_sampler(ideal.ring.prime, bz_rnc);
                sp = &sampler;
            }
            strand::MultisecantStats stats = strand::multisecant_length_sampler(
                ideal, bz_p, bz_d, bz_samples, seed, sp);
            std::cout << "samples " << stats.completed << ", resamples "
                      << stats.resamples << ", max length " << stats.max_length
                      << ", bound " << stats.bound << ", respected "
                      << (stats.bound_respected ? "yes" : "NO") << "\n";
            return stats.bound_respected ? kExitOk : kExitInconsistent;
        }
        if (*rnc_cmd) {
            strand::Ideal ideal = strand::rational_normal_curve(cprime, rnc_deg);
            emit(output, strand::emit_ideal_file(
                             ideal, "rnc" + std::to_string(rnc_deg)));
            return kExitOk;
        }
        if (*toric_cmd) {
            strand::IntegerMatrix m = read_matrix_file(matrix_path);
            strand::RingContext target = strand::make_ring(cprime, m.cols);
            strand::Ideal ideal = strand::toric_from_matrix(m, target);
            emit(output, strand::emit_ideal_file(ideal, "toric"));
            return kExitOk;
        }
        if (*minors_cmd) {
            std::vector<int> blocks;
            std::stringstream ss(blocks_spec);
            std::string piece;
            while (std::getline(ss, piece, ',')) blocks.push_back(std::stoi(piece));
            strand::Ideal ideal =
                strand::generic_catalecticant_minors(cprime, minors_t, blocks);
            emit(output, strand::emit_ideal_file(ideal, "minors"));
            return kExitOk;
        }
        if (*veronese_cmd) {
            strand::Ideal ideal = strand::veronese(cprime, ver_n, ver_d);
            emit(output, strand::emit_ideal_file(ideal, "veronese"));
            return kExitOk;
        }
        if (*project_cmd) {
            strand::Ideal ideal =
                strand::parse_ideal(strand::read_ideal_file(project_input),
                                    prime_override);
            auto points = read_points_file(points_path, ideal.ring.prime);
            strand::Rng rng(seed);
            strand::Ideal image =
                strand::project_from_points(ideal, points, isomorphic, rng);
            emit(output, strand::emit_ideal_file(image, "projection"));
            return kExitOk;
        }
        if (*section_cmd) {
            strand::Ideal ideal = strand::parse_ideal(
                strand::read_ideal_file(section_input), prime_override);
            strand::Ideal cut =
                strand::general_hyperplane_section(ideal, section_count, seed);
            emit(output, strand::emit_ideal_file(cut, "section"));
            return kExitOk;
        }
        if (*bs_cmd) {
            strand::RationalBettiTable table = strand::read_rational_table(bs_path);
            auto comps = strand::decompose(table);
            for (auto& c : comps)
                std::cout << c.coeff.str() << " * B" << c.degrees.str() << "\n";
            return kExitOk;
        }
    } catch (const strand::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const strand::CharacteristicError& e) {
        std::cerr << "instability: " << e.what() << "\n";
        return kExitUnstable;
    } catch (const strand::NotDecomposable& e) {
        std::cerr << "not decomposable: " << e.what() << "\n";
        return kExitInconsistent;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return kExitOk;
}
