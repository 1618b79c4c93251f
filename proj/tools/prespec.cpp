#include <climits>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"

#include "prespec/certificate.hpp"
#include "prespec/construct.hpp"
#include "prespec/factor.hpp"
#include "prespec/graph_io.hpp"
#include "prespec/products.hpp"
#include "prespec/spectral.hpp"
#include "prespec/types.hpp"
#include "prespec/witness.hpp"

namespace {

using namespace prespec;

constexpr int kExitNegative = 2; // mathematically refuted / check failed
constexpr int kExitBound = 3;    // resource or search bound exceeded

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Graph load_graph(const std::string& literal, const std::string& path) {
    if (literal.empty() == path.empty())
        throw std::invalid_argument("give exactly one of --graph and --graph-file");
    return parse_graph_auto(path.empty() ? literal : read_file(path));
}

void write_text(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::invalid_argument("cannot write " + path);
    out << text;
}

void emit_certificate(const Certificate& cert, const std::string& path) {
    write_text(to_json(cert).dump(2) + "\n", path);
}

struct SearchOpts {
    int threads = 1;
    int max_order = 12;
    long long budget = -1;
    std::string cache_path;
};

void add_search_flags(CLI::App* cmd, SearchOpts& opts) {
    cmd->add_option("--threads", opts.threads, "Worker threads for witness search")
        ->check(CLI::Range(1, 256));
    cmd->add_option("--max-order", opts.max_order, "Largest tree order the witness search tries");
    cmd->add_option("--budget", opts.budget, "Cap on trees examined per witness search");
    cmd->add_option("--cache", opts.cache_path,
                    "Witness cache file (default: $PRESPEC_WITNESS_CACHE)");
}

struct ProviderBundle {
    std::optional<WitnessCache> cache;
    WitnessProvider provider;
};

ProviderBundle make_provider(const SearchOpts& opts, const std::vector<std::string>& poly_csvs,
                             const std::vector<std::string>& witness_texts) {
    if (witness_texts.size() > poly_csvs.size())
        throw std::invalid_argument("more --witness arguments than --poly arguments");
    std::map<std::string, Graph> user;
    for (std::size_t i = 0; i < witness_texts.size(); ++i) {
        std::string key = IntPoly::from_csv(poly_csvs[i]).to_csv();
        user.emplace(std::move(key), parse_graph_auto(witness_texts[i]));
    }

    ProviderBundle bundle;
    std::string path = opts.cache_path;
    if (path.empty())
        if (const char* env = std::getenv("PRESPEC_WITNESS_CACHE")) path = env;
    if (!path.empty()) bundle.cache.emplace(path);

    SearchBound bound;
    bound.max_order = opts.max_order;
    bound.mode = SearchMode::Trees;
    if (opts.budget >= 0) bound.budget = opts.budget;
    bundle.provider = chain_provider(std::move(user), bundle.cache ? &*bundle.cache : nullptr,
                                     bound, opts.threads);
    return bundle;
}

PrescribedSpectrum spectrum_of_csvs(const std::vector<std::string>& csvs) {
    std::vector<SpectrumFactor> parts;
    parts.reserve(csvs.size());
    for (const std::string& csv : csvs)
        parts.push_back({IntPoly::from_csv(csv), 1, FactorProvenance::AssumedIrreducible});
    return PrescribedSpectrum::make(std::move(parts));
}

BuildOptions build_options(const std::string& gadget, const std::string& mode) {
    BuildOptions opts;
    opts.gadget = gadget_from_name(gadget);
    if (mode == "exact")
        opts.exact_order_cap = INT_MAX;
    else if (mode == "kernel")
        opts.exact_order_cap = 0;
    else if (mode != "auto")
        throw std::invalid_argument("mode must be auto, exact, or kernel");
    return opts;
}

int run_check_necessary(const std::string& poly_csv, int order) {
    NecessaryReport r = check_necessary(IntPoly::from_csv(poly_csv), order);
    auto verdict = [](bool ok) { return ok ? "pass" : "fail"; };
    std::cout << "totally-real " << (r.totally_real ? "yes" : "no") << "\n"
              << "conjugates-closed " << verdict(r.conjugates_closed) << "\n"
              << "trace-zero " << verdict(r.trace_zero) << " (p1 = " << r.p1 << ")\n"
              << "power-sum " << verdict(r.power_sum_ok) << " (p2 = " << r.p2
              << ", bound = " << r.p2_bound << ")\n"
              << "largest-root " << verdict(r.largest_ok) << " (roots above n-1: "
              << r.roots_above_limit << ")\n"
              << "symmetric " << verdict(r.symmetric_ok) << "\n";
    return r.all_pass() ? 0 : kExitNegative;
}

int run_refute(const std::string& poly_csv, int order) {
    RefuteOutcome r = refute_spectrum(IntPoly::from_csv(poly_csv), order);
    if (r.realized) {
        std::cout << "realized " << emit_graph6(*r.realized) << "\n";
        return 0;
    }
    std::cout << "refuted\n";
    return kExitNegative;
}

int run_verify(const std::string& cert_path) {
    Certificate cert = certificate_from_json(nlohmann::ordered_json::parse(read_file(cert_path)));
    VerifyReport report = verify_certificate(cert);
    if (report.ok) {
        std::cout << "verified\n";
        return 0;
    }
    for (const std::string& f : report.failures) std::cout << "failed: " << f << "\n";
    return kExitNegative;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact spectral graph constructions with replayable certificates"};
    app.require_subcommand(1);

    std::string graph_literal, graph_file;
    std::vector<std::string> poly_csvs;
    std::vector<std::string> witness_texts;
    std::string single_poly;
    std::string gadget = "small", mode = "auto";
    std::string out_path, cert_path;
    int order = 0;
    int minimal_order = 0;
    SearchOpts search;

    auto add_graph_input = [&](CLI::App* cmd) {
        cmd->add_option("--graph", graph_literal, "Graph as graph6 or edge-list text");
        cmd->add_option("--graph-file", graph_file, "File holding graph6 or edge-list");
    };

    CLI::App* cmd_charpoly = app.add_subcommand("charpoly", "Characteristic polynomial of a graph");
    add_graph_input(cmd_charpoly);

    CLI::App* cmd_matchpoly = app.add_subcommand("matchpoly", "Matching polynomial of a graph");
    add_graph_input(cmd_matchpoly);

    CLI::App* cmd_check = app.add_subcommand(
        "check-necessary", "Necessary spectrum conditions for a monic polynomial");
    cmd_check->add_option("--poly", single_poly, "Coefficients, lowest degree first")->required();
    cmd_check->add_option("--order", order, "Intended graph order")->required();

    CLI::App* cmd_refute = app.add_subcommand(
        "refute", "Scan all labeled graphs of an order for a prescribed charpoly");
    cmd_refute->add_option("--poly", single_poly, "Coefficients, lowest degree first")->required();
    cmd_refute->add_option("--order", order, "Graph order to scan")->required();

    CLI::App* cmd_graph = app.add_subcommand(
        "construct-graph", "Connected graph whose spectrum contains roots of every polynomial");
    cmd_graph->add_option("--poly", poly_csvs, "Factor coefficients, repeatable")->required();
    cmd_graph->add_option("--witness", witness_texts,
                          "Witness graph for the matching --poly, positional pairing");
    cmd_graph->add_option("--gadget", gadget, "Zero-spectrum gadget: small or large");
    cmd_graph->add_option("--mode", mode, "Certification mode: auto, exact, or kernel");
    cmd_graph->add_option("--output", out_path, "Write the graph6 line here instead of stdout");
    cmd_graph->add_option("--cert", cert_path, "Write the certificate JSON here");
    add_search_flags(cmd_graph, search);

    CLI::App* cmd_tree = app.add_subcommand(
        "construct-tree", "Tree whose spectrum contains roots of every polynomial");
    cmd_tree->add_option("--poly", poly_csvs, "Factor coefficients, repeatable")->required();
    cmd_tree->add_option("--witness", witness_texts,
                         "Tree witness for the matching --poly, positional pairing");
    cmd_tree->add_option("--mode", mode, "Certification mode: auto, exact, or kernel");
    cmd_tree->add_option("--output", out_path, "Write the graph6 line here instead of stdout");
    cmd_tree->add_option("--cert", cert_path, "Write the certificate JSON here");
    add_search_flags(cmd_tree, search);

    CLI::App* cmd_divisor = app.add_subcommand(
        "divisor-tree", "Tree whose charpoly the given graph's charpoly divides");
    add_graph_input(cmd_divisor);
    cmd_divisor->add_option("--mode", mode, "Certification mode: auto, exact, or kernel");
    cmd_divisor->add_option("--output", out_path, "Write the graph6 line here instead of stdout");
    cmd_divisor->add_option("--cert", cert_path, "Write the certificate JSON here");
    add_search_flags(cmd_divisor, search);

    CLI::App* cmd_unimodal = app.add_subcommand(
        "unimodalize", "Cofactor g and tree T with f*g = charpoly(T) unimodal");
    cmd_unimodal->add_option("--poly", single_poly, "Coefficients, lowest degree first")
        ->required();
    cmd_unimodal->add_option("--minimal", minimal_order,
                             "Search enumerated trees up to this order for a smallest T first");
    cmd_unimodal->add_option("--mode", mode, "Certification mode: auto, exact, or kernel");
    cmd_unimodal->add_option("--output", out_path, "Write the two result lines here");
    cmd_unimodal->add_option("--cert", cert_path, "Write the certificate JSON here");
    add_search_flags(cmd_unimodal, search);

    CLI::App* cmd_verify = app.add_subcommand("verify", "Replay and re-check a certificate");
    cmd_verify->add_option("--cert", cert_path, "Certificate JSON file")->required();

    CLI::App* cmd_witness = app.add_subcommand("witness", "Tree witness for one polynomial");
    cmd_witness->add_option("--poly", single_poly, "Coefficients, lowest degree first")
        ->required();
    add_search_flags(cmd_witness, search);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (cmd_charpoly->parsed()) {
            std::cout << charpoly(load_graph(graph_literal, graph_file)).to_csv() << "\n";
        } else if (cmd_matchpoly->parsed()) {
            std::cout << matching_poly(load_graph(graph_literal, graph_file)).to_csv() << "\n";
        } else if (cmd_check->parsed()) {
            return run_check_necessary(single_poly, order);
        } else if (cmd_refute->parsed()) {
            return run_refute(single_poly, order);
        } else if (cmd_graph->parsed()) {
            ProviderBundle bundle = make_provider(search, poly_csvs, witness_texts);
            auto [g, cert] = prescribe_connected(spectrum_of_csvs(poly_csvs), bundle.provider,
                                                 build_options(gadget, mode));
            write_text(emit_graph6(g) + "\n", out_path);
            emit_certificate(cert, cert_path);
        } else if (cmd_tree->parsed()) {
            ProviderBundle bundle = make_provider(search, poly_csvs, witness_texts);
            auto [t, cert] = prescribe_tree(spectrum_of_csvs(poly_csvs), bundle.provider,
                                            build_options(gadget, mode));
            write_text(emit_graph6(t) + "\n", out_path);
            emit_certificate(cert, cert_path);
        } else if (cmd_divisor->parsed()) {
            Graph g = load_graph(graph_literal, graph_file);
            ProviderBundle bundle = make_provider(search, {}, {});
            auto [t, cert] = divisor_tree(g, bundle.provider, build_options(gadget, mode));
            write_text(emit_graph6(t) + "\n", out_path);
            emit_certificate(cert, cert_path);
        } else if (cmd_unimodal->parsed()) {
            ProviderBundle bundle = make_provider(search, {}, {});
            std::optional<int> minimal;
            if (cmd_unimodal->count("--minimal") > 0) minimal = minimal_order;
            UnimodalResult r = unimodalize(IntPoly::from_csv(single_poly), bundle.provider,
                                           build_options(gadget, mode), minimal);
            write_text(r.cofactor.to_csv() + "\n" + emit_graph6(r.tree) + "\n", out_path);
            emit_certificate(r.certificate, cert_path);
        } else if (cmd_verify->parsed()) {
            return run_verify(cert_path);
        } else if (cmd_witness->parsed()) {
            ProviderBundle bundle = make_provider(search, {}, {});
            Witness w = bundle.provider(IntPoly::from_csv(single_poly));
            std::cout << emit_graph6(w.graph) << "\n";
        }
    } catch (const BoundError& e) {
        std::cerr << "bound exceeded: " << e.what() << "\n";
        return kExitBound;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
