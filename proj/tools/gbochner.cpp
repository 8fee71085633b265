// Command-line front end: tangent-graph construction, identity verification
// suites, and curvature exports.

#include "gbochner/check.hpp"
#include "gbochner/corpus.hpp"
#include "gbochner/json_io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace gbochner;

Rational parse_probability(const std::string& s) {
    auto dot = s.find('.');
    if (dot == std::string::npos) return Rational::parse(s);
    // simple decimal, e.g. "0.25"
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    BigInt den = 1;
    for (size_t k = dot + 1; k < s.size(); ++k) den *= 10;
    return Rational(BigInt(digits), den);
}

// Inputs are either a path to an edge-list file, "-" for stdin, or a
// generator spec "er:n:p:seed".
Graph load_input(const std::string& input) {
    if (input.rfind("er:", 0) == 0) {
        std::istringstream ss(input.substr(3));
        std::string ntok, ptok, stok;
        if (!std::getline(ss, ntok, ':') || !std::getline(ss, ptok, ':') ||
            !std::getline(ss, stok, ':'))
            throw error(errc::malformed_line, "generator spec must be er:n:p:seed");
        return random_graph(std::stoi(ntok), parse_probability(ptok),
                            std::stoull(stok));
    }
    if (input == "-") return parse_edge_list(std::cin);
    std::ifstream in(input);
    if (!in) throw error(errc::malformed_line, "cannot open input file '" + input + "'");
    return parse_edge_list(in);
}

std::vector<Rational> load_phi(const std::string& path, int n) {
    std::ifstream in(path);
    if (!in) throw error(errc::malformed_line, "cannot open field file '" + path + "'");
    Json j = Json::parse(in);
    if (!j.is_array())
        throw error(errc::malformed_line, "field file must hold a JSON array");
    std::vector<Rational> phi;
    for (const auto& v : j) {
        if (v.is_number_integer())
            phi.emplace_back(v.get<long long>());
        else if (v.is_string())
            phi.push_back(Rational::parse(v.get<std::string>()));
        else
            throw error(errc::malformed_line, "field entries must be integers or 'p/q' strings");
    }
    if (static_cast<int>(phi.size()) != n)
        throw error(errc::dimension_mismatch, "field length " + std::to_string(phi.size()) +
                                                  " != vertex count " + std::to_string(n));
    return phi;
}

struct Output {
    std::ofstream file;
    std::ostream* os = &std::cout;

    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file.open(path);
            if (!file) throw error(errc::malformed_line, "cannot open output file '" + path + "'");
            os = &file;
        }
    }
    std::ostream& stream() { return *os; }
};

int cmd_build(const std::string& input, const std::string& flavor, const std::string& format,
              const std::string& output) {
    Graph g = load_input(input);
    Output out(output);

    if (flavor == "cubical") {
        TangentGraph tg = build_tangent(g, Flavor::t);
        CubicalComplex cx = build_cubical(tg);
        out.stream() << to_json(tg, cx).dump(2) << '\n';
        return 0;
    }
    if (flavor == "lambda") {
        TangentGraph tg = build_tangent(g, Flavor::t);
        LambdaReport lr = lambda_line_graph(tg);
        if (format == "dot")
            out.stream() << to_dot(lr.lambda);
        else
            out.stream() << to_json(lr).dump(2) << '\n';
        return 0;
    }

    TangentGraph tg;
    if (flavor == "t" || flavor == "tau" || flavor == "gstar") {
        tg = build_tangent(g, flavor == "t" ? Flavor::t
                                            : (flavor == "tau" ? Flavor::tau : Flavor::gstar));
    } else if (flavor == "t2") {
        tg = iterate_tangent(build_tangent(g, Flavor::t));
    } else if (flavor == "t_tau") {
        tg = iterate_tangent(build_tangent(g, Flavor::tau));
    } else {
        throw error(errc::wrong_flavor, "unknown flavor '" + flavor + "'");
    }
    if (format == "dot")
        out.stream() << to_dot(tg);
    else
        out.stream() << to_json(tg).dump(2) << '\n';
    return 0;
}

int cmd_check(const std::string& input, const std::string& corpus, const std::string& suite,
              int trials, std::uint64_t seed, const std::string& output) {
    std::vector<std::pair<std::string, Graph>> graphs;
    if (!corpus.empty()) {
        if (corpus == "small") {
            auto small = small_connected_corpus(5);
            for (size_t k = 0; k < small.size(); ++k)
                graphs.emplace_back("small[" + std::to_string(k) + "]", std::move(small[k]));
        } else if (corpus.rfind("random:", 0) == 0) {
            std::istringstream ss(corpus.substr(7));
            std::string ctok, ntok, ptok;
            if (!std::getline(ss, ctok, ':') || !std::getline(ss, ntok, ':') ||
                !std::getline(ss, ptok, ':'))
                throw error(errc::malformed_line, "corpus spec must be random:count:n:p");
            int count = std::stoi(ctok), n = std::stoi(ntok);
            Rational p = parse_probability(ptok);
            for (int k = 0; k < count; ++k) {
                std::uint64_t gseed = seed ^ static_cast<std::uint64_t>(k);
                graphs.emplace_back("er(n=" + ntok + ",p=" + ptok + ",seed=" +
                                        std::to_string(gseed) + ")",
                                    random_graph(n, p, gseed));
            }
        } else {
            throw error(errc::malformed_line, "unknown corpus '" + corpus + "'");
        }
    } else {
        graphs.emplace_back(input, load_input(input));
    }

    std::vector<std::string> suites;
    if (suite == "all")
        suites = suite_names();
    else
        suites.push_back(suite);

    Output out(output);
    auto results = parallel_map(graphs, [&](const std::pair<std::string, Graph>& entry, size_t k) {
        std::vector<CheckOutcome> outs;
        std::uint64_t gseed = seed ^ static_cast<std::uint64_t>(k);
        for (const auto& s : suites)
            outs.push_back(run_suite(s, entry.second, entry.first, trials, gseed));
        return outs;
    });

    bool all_passed = true;
    for (const auto& group : results)
        for (const auto& o : group) {
            out.stream() << to_json(o).dump() << '\n';
            if (!o.passed) all_passed = false;
        }
    return all_passed ? 0 : 1;
}

int cmd_curvature(const std::string& input, const std::string& mode, const std::string& phi_path,
                  const std::string& output) {
    Graph g = load_input(input);
    Output out(output);
    if (mode == "matrix") {
        b_matrix(g).to_csv(out.stream());
        return 0;
    }
    if (mode == "spectrum") {
        out.stream() << to_json(curvature_spectrum(b_matrix(g))).dump(2) << '\n';
        return 0;
    }
    if (mode == "report") {
        if (phi_path.empty())
            throw error(errc::malformed_line, "curvature report needs --phi");
        auto phi = load_phi(phi_path, g.n);
        out.stream() << to_json(bochner_terms(g, phi)).dump(2) << '\n';
        return 0;
    }
    throw error(errc::wrong_flavor, "unknown mode '" + mode + "'");
}

int cmd_info(const std::string& input, const std::string& output) {
    Graph g = load_input(input);
    Output out(output);
    out.stream() << info_json(g).dump(2) << '\n';
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"tangent graphs and exact vector calculus on finite simple graphs"};
    app.require_subcommand(1);

    std::string input, output, flavor = "t", format = "json", suite = "all";
    std::string corpus, mode = "matrix", phi_path;
    int trials = 5;
    std::uint64_t seed = 1;

    auto add_input = [&](CLI::App* cmd, bool positional = true) {
        cmd->add_option("--input,-i", input, "edge-list file, '-' for stdin, or er:n:p:seed");
        if (positional) cmd->add_option("file", input, "edge-list file");
        cmd->add_option("--output,-o", output, "write to file instead of stdout");
    };

    auto* build = app.add_subcommand("build", "construct a tangent structure");
    add_input(build);
    build->add_option("--flavor", flavor,
                      "t | tau | gstar | t2 | t_tau | cubical | lambda");
    build->add_option("--format", format, "json | dot");

    auto* check = app.add_subcommand("check", "run verification suites");
    add_input(check);
    check->add_option("--corpus", corpus, "small | random:count:n:p");
    check->add_option("--suite", suite,
                      "counting | extremal | cubical | calculus | prop37 | bochner | gamma2 | all");
    check->add_option("--trials", trials, "random fields per graph")->check(CLI::PositiveNumber);
    check->add_option("--seed", seed, "base seed");

    auto* curvature = app.add_subcommand("curvature", "curvature operator exports");
    add_input(curvature);
    curvature->add_option("--mode", mode, "matrix | spectrum | report");
    curvature->add_option("--phi", phi_path, "JSON array of rationals (report mode)");

    auto* info = app.add_subcommand("info", "basic counts for a graph");
    add_input(info);

    try {
        app.parse(argc, argv);
        if (build->parsed()) return cmd_build(input, flavor, format, output);
        if (check->parsed()) return cmd_check(input, corpus, suite, trials, seed, output);
        if (curvature->parsed()) return cmd_curvature(input, mode, phi_path, output);
        if (info->parsed()) return cmd_info(input, output);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
