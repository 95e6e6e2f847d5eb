// Command-line front end: parameter scans, per-parameter-set analysis,
// concrete graph construction/verification, and design checking/extension.
//
// Exit codes: 0 = success / verdict produced, 1 = mathematical verification
// failure, 2 = usage or input-format error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tightsrg/tightsrg.hpp"

namespace {

using namespace tightsrg;

std::string read_stream_or_file(const std::string& name) {
    if (name == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(name, std::ios::binary);
    if (!in) throw FormatError("cannot open '" + name + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_stream_or_file(const std::string& name, const std::string& content) {
    if (name == "-" || name.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(name, std::ios::binary);
    if (!out) throw FormatError("cannot open '" + name + "' for writing");
    out << content;
}

std::vector<Int> parse_int_list(const std::string& text, size_t expect, const char* what) {
    std::vector<Int> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) out.emplace_back(item);
    if (out.size() != expect)
        throw FormatError(std::string(what) + ": expected " + std::to_string(expect) +
                          " comma-separated integers, got " + std::to_string(out.size()));
    return out;
}

std::optional<std::vector<KnownFact>> load_facts(const std::string& path) {
    if (path.empty()) return std::nullopt;
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open facts file '" + path + "'");
    return read_facts(in);
}

int cmd_scan(long min_v, long max_v, long min_eplus, const std::string& facts_path,
             const std::string& format, int threads) {
    if (min_v > max_v || min_v < 1 || min_eplus < 1) {
        std::cerr << "scan: invalid range\n";
        return 2;
    }
    auto rows = scan_rows(min_v, max_v, min_eplus, load_facts(facts_path), threads);
    if (format == "csv") std::cout << scan_csv(rows);
    else if (format == "json") std::cout << scan_json(rows).dump(2) << '\n';
    else std::cout << scan_human(rows);
    return 0;
}

int cmd_analyze(const std::string& eplus, const std::string& eminus,
                const std::string& from_params, const std::string& facts_path,
                const std::string& format) {
    Int a, e;
    if (!from_params.empty()) {
        auto p = parse_int_list(from_params, 4, "--from-params");
        Spectrum s = spectrum_of(SrgParams{p[0], p[1], p[2], p[3]});
        a = s.e_plus;
        e = s.e_minus;
    } else {
        a = Int(eplus);
        e = Int(eminus);
    }
    auto j = analyze_report(a, e, load_facts(facts_path));
    if (format == "json") std::cout << j.dump(2) << '\n';
    else std::cout << analyze_human(j);
    return 0;
}

int cmd_graph_construct(const std::string& kind, int n) {
    Graph g;
    if (kind == "kneser2") g = kneser2(n);
    else if (kind == "petersen") g = petersen();
    else if (kind == "m22") g = m22_graph();
    else {
        std::cerr << "unknown construction '" << kind << "'\n";
        return 2;
    }
    std::cout << write_graph6(g) << '\n';
    return 0;
}

int cmd_graph_verify(const std::string& file) {
    Graph g = parse_graph6(read_stream_or_file(file));
    SrgParams p = verify_srg(g);
    std::cout << "srg (" << p.v << "," << p.k << "," << p.lambda << "," << p.mu << ")\n";
    Spectrum s = spectrum_of(p);
    std::cout << "spectrum e+ = " << s.e_plus << " (x" << s.m_plus << "), e- = " << s.e_minus
              << " (x" << s.m_minus << ")\n";
    bool tight = p.v * s.e_minus == s.m_minus * (s.e_minus - p.k);
    std::cout << "hoffman bound " << rat_str(hoffman_bound(p)) << ", inertia bound "
              << s.m_minus << (tight ? " (tight)" : " (not tight)") << '\n';
    return 0;
}

int cmd_graph_cocliques(const std::string& file) {
    Graph g = parse_graph6(read_stream_or_file(file));
    SrgParams p = verify_srg(g);
    Spectrum s = spectrum_of(p);
    TightParams t{p, s, s.m_minus};
    auto cocliques = enumerate_delsarte_cocliques(g);
    for (const auto& c : cocliques) {
        for (size_t i = 0; i < c.vertices.size(); ++i)
            std::cout << (i ? " " : "") << c.vertices[i];
        std::cout << '\n';
    }
    std::cout << "# " << cocliques.size() << " Delsarte cocliques of size " << s.m_minus
              << " (bound m-+1 = " << s.m_minus + 1 << ")\n";

    std::map<size_t, long long> pairwise, triple;
    for (size_t i = 0; i < cocliques.size(); ++i)
        for (size_t j = i + 1; j < cocliques.size(); ++j) {
            std::vector<int> common;
            std::set_intersection(cocliques[i].vertices.begin(), cocliques[i].vertices.end(),
                                  cocliques[j].vertices.begin(), cocliques[j].vertices.end(),
                                  std::back_inserter(common));
            ++pairwise[common.size()];
            for (size_t l = j + 1; l < cocliques.size(); ++l) {
                std::vector<int> three;
                std::set_intersection(common.begin(), common.end(),
                                      cocliques[l].vertices.begin(),
                                      cocliques[l].vertices.end(), std::back_inserter(three));
                ++triple[three.size()];
            }
        }
    auto dump = [](const char* label, const std::map<size_t, long long>& hist) {
        std::cout << "# " << label << " intersections:";
        for (auto& [size, count] : hist) std::cout << ' ' << size << " (x" << count << ")";
        std::cout << '\n';
    };
    if (!pairwise.empty()) dump("pairwise", pairwise);
    if (!triple.empty()) dump("triple", triple);

    if (!cocliques.empty()) {
        BlockDesign d = extract_quasisym_design(g, cocliques.front());
        auto chk = check_2design(d);
        auto profile = intersection_profile(d);
        std::cout << "# extracted quasisymmetric design: 2-(" << d.point_count << ","
                  << d.blocks.front().size() << "," << chk.lambda_tilde << ") r = "
                  << chk.r_tilde << ", profile {";
        bool first = true;
        for (auto& [size, count] : profile) {
            std::cout << (first ? "" : ",") << size;
            first = false;
        }
        std::cout << "}\n";
    }
    if (cocliques.size() >= 2) {
        BlockDesign d = extract_symmetric_design(g, cocliques[0], cocliques[1]);
        auto chk = check_2design(d);
        std::cout << "# extracted symmetric design: 2-(" << d.point_count << ","
                  << d.blocks.front().size() << "," << chk.lambda_tilde << ")\n";
    }
    return 0;
}

int cmd_graph_extend71(const std::string& file) {
    Graph g = parse_graph6(read_stream_or_file(file));
    auto cocliques = enumerate_delsarte_cocliques(g);
    Graph ext = lemma71_extend(g, cocliques);
    std::cout << write_graph6(ext) << '\n';
    SrgParams p = verify_srg(ext);
    std::cerr << "extended srg (" << p.v << "," << p.k << "," << p.lambda << "," << p.mu
              << ")\n";
    return 0;
}

int cmd_design_check(const std::string& file) {
    BlockDesign d = parse_design(read_stream_or_file(file));
    auto chk = check_2design(d);
    std::cout << "2-(" << d.point_count << "," << d.blocks.front().size() << ","
              << chk.lambda_tilde << ") design, r = " << chk.r_tilde << ", b = "
              << d.blocks.size() << '\n';
    auto profile = intersection_profile(d);
    std::cout << "intersection profile:";
    for (auto& [size, count] : profile) std::cout << ' ' << size << " (x" << count << ")";
    std::cout << '\n';
    size_t k = d.blocks.front().size();
    std::vector<int> proper;  // intersection sizes below the block size
    for (auto& [size, count] : profile)
        if (size < static_cast<int>(k)) proper.push_back(size);
    if (proper.size() <= 1)
        std::cout << "classification: symmetric"
                  << (d.blocks.size() == static_cast<size_t>(d.point_count) ? ""
                                                                            : " profile")
                  << '\n';
    else if (proper.size() == 2)
        std::cout << "classification: quasisymmetric {" << proper[0] << "," << proper[1]
                  << "}\n";
    else
        std::cout << "classification: " << proper.size() << " intersection numbers\n";
    return 0;
}

int cmd_design_params(const std::string& eplus, const std::string& eminus) {
    auto j = analyze_report(Int(eplus), Int(eminus), std::nullopt);
    std::cout << "quasisymmetric 2-(" << j["quasisymmetric"]["v"].get<std::string>() << ","
              << j["quasisymmetric"]["k"].get<std::string>() << ","
              << j["quasisymmetric"]["lambda"].get<std::string>() << ") r = "
              << j["quasisymmetric"]["r"].get<std::string>() << " {"
              << j["quasisymmetric"]["s1"].get<std::string>() << ","
              << j["quasisymmetric"]["s2"].get<std::string>() << "} blocks = "
              << j["quasisymmetric"]["blocks"].get<std::string>() << '\n';
    std::cout << "symmetric 2-(" << j["symmetric"]["v"].get<std::string>() << ","
              << j["symmetric"]["k"].get<std::string>() << ","
              << j["symmetric"]["lambda"].get<std::string>() << ")"
              << (j["symmetric"]["integral"].get<bool>() ? "" : " [non-integral]") << '\n';
    std::cout << "equality design 2-(" << j["equality_design"]["v"].get<std::string>() << ","
              << j["equality_design"]["k"].get<std::string>() << ","
              << j["equality_design"]["lambda"].get<std::string>() << ")"
              << (j["equality_design"]["integral"].get<bool>() ? "" : " [non-integral]")
              << '\n';
    return 0;
}

int cmd_design_extend(const std::string& file, const std::string& target, double max_nodes,
                      double max_seconds, const std::string& out_path) {
    auto vals = parse_int_list(target, 6, "--target-quasisym");
    QuasiSymParams q;
    q.v_tilde = vals[0];
    q.k_tilde = vals[1];
    q.lambda_tilde = vals[2];
    q.s1 = vals[3];
    q.s2 = vals[4];
    q.block_count = vals[5];
    if (!divides(q.k_tilde - 1, (q.v_tilde - 1) * q.lambda_tilde))
        throw InvalidBase("target has non-integral replication number");
    q.r_tilde = (q.v_tilde - 1) * q.lambda_tilde / (q.k_tilde - 1);

    ExtensionProblem problem;
    problem.base = parse_design(read_stream_or_file(file));
    problem.target = q;
    problem.max_nodes = static_cast<uint64_t>(max_nodes);
    problem.max_seconds = max_seconds;
    ExtensionResult result = extend_design(problem);

    nlohmann::json stats;
    stats["status"] = to_string(result.status);
    stats["nodes"] = result.stats.nodes;
    stats["max_depth"] = result.stats.max_depth;
    stats["elapsed_seconds"] = result.stats.elapsed_seconds;
    std::cout << stats.dump(2) << '\n';
    if (result.design) write_stream_or_file(out_path, format_design(*result.design));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact engine for strongly regular graphs with equal ratio and inertia bounds"};
    app.require_subcommand(1);

    // scan
    auto* scan = app.add_subcommand("scan", "enumerate tight parameter sets in a range");
    long min_v = 1, max_v = 0, min_eplus = 1;
    std::string facts_path, format = "human";
    int threads = 1;
    scan->add_option("--min-v", min_v, "smallest vertex count")->required();
    scan->add_option("--max-v", max_v, "largest vertex count")->required();
    scan->add_option("--min-eplus", min_eplus, "smallest e+ to include");
    scan->add_option("--facts-file", facts_path, "literature facts file");
    scan->add_option("--format", format)->check(CLI::IsMember({"human", "csv", "json"}));
    scan->add_option("--threads", threads, "parallelise the scan over e+ columns");

    // analyze
    auto* analyze = app.add_subcommand("analyze", "full report for one eigenvalue pair");
    std::string eplus, eminus, from_params, a_facts, a_format = "human";
    analyze->add_option("--eplus", eplus, "e+ (positive integer)");
    analyze->add_option("--eminus", eminus, "e- (negative integer)");
    analyze->add_option("--from-params", from_params, "derive (e+,e-) from v,k,lambda,mu");
    analyze->add_option("--facts-file", a_facts, "literature facts file");
    analyze->add_option("--format", a_format)->check(CLI::IsMember({"human", "json"}));

    // graph
    auto* graph = app.add_subcommand("graph", "construct and verify concrete graphs");
    graph->require_subcommand(1);
    auto* construct = graph->add_subcommand("construct", "emit a named graph as graph6");
    std::string kind;
    int kneser_n = 0;
    construct->add_option("kind", kind, "kneser2 | petersen | m22")->required();
    construct->add_option("n", kneser_n, "n for kneser2");
    auto* verify = graph->add_subcommand("verify", "verify SRG parameters and tightness");
    std::string verify_file;
    verify->add_option("file", verify_file, "graph6 file, or - for stdin")->required();
    auto* cocliques = graph->add_subcommand("cocliques", "enumerate all Delsarte cocliques");
    std::string cocliques_file;
    cocliques->add_option("file", cocliques_file, "graph6 file, or - for stdin")->required();
    auto* extend71 = graph->add_subcommand("extend-lemma71",
                                           "coclique-extension construction for the "
                                           "lambda = 0 family");
    std::string extend71_file;
    extend71->add_option("file", extend71_file, "graph6 file, or - for stdin")->required();

    // design
    auto* design = app.add_subcommand("design", "block-design checks and extension search");
    design->require_subcommand(1);
    auto* check = design->add_subcommand("check", "verify a design file");
    std::string check_file;
    check->add_option("file", check_file, "block-design file, or - for stdin")->required();
    auto* params = design->add_subcommand("params", "derived design parameters");
    std::string p_eplus, p_eminus;
    params->add_option("--eplus", p_eplus)->required();
    params->add_option("--eminus", p_eminus)->required();
    auto* extend = design->add_subcommand("extend", "complete a base to a quasisymmetric design");
    std::string extend_file, target, out_path;
    double max_nodes = 0, max_seconds = 0;
    extend->add_option("file", extend_file, "base design file, or - for stdin")->required();
    extend->add_option("--target-quasisym", target, "v,k,lambda,s1,s2,blocks")->required();
    extend->add_option("--max-nodes", max_nodes, "node budget")->required();
    extend->add_option("--max-seconds", max_seconds, "wall-clock budget");
    extend->add_option("--out", out_path, "write a found design here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << '\n';
        return 2;
    }

    try {
        if (*scan) return cmd_scan(min_v, max_v, min_eplus, facts_path, format, threads);
        if (*analyze) {
            if (from_params.empty() && (eplus.empty() || eminus.empty())) {
                std::cerr << "analyze: need --eplus/--eminus or --from-params\n";
                return 2;
            }
            return cmd_analyze(eplus, eminus, from_params, a_facts, a_format);
        }
        if (*construct) {
            if (kind == "kneser2" && kneser_n == 0) {
                std::cerr << "construct kneser2 needs n\n";
                return 2;
            }
            return cmd_graph_construct(kind, kneser_n);
        }
        if (*verify) return cmd_graph_verify(verify_file);
        if (*cocliques) return cmd_graph_cocliques(cocliques_file);
        if (*extend71) return cmd_graph_extend71(extend71_file);
        if (*check) return cmd_design_check(check_file);
        if (*params) return cmd_design_params(p_eplus, p_eminus);
        if (*extend)
            return cmd_design_extend(extend_file, target, max_nodes, max_seconds, out_path);
    } catch (const FormatError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const MalformedHeader& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const TruncatedBits& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const NonCanonicalPadding& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
