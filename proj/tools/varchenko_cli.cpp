#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "varchenko/cli.hpp"

int main(int argc, char** argv) {
    using namespace varchenko;
    cli::RunConfig cfg;
    CLI::App app{"Varchenko matrices and determinants of partial cubes"};
    app.require_subcommand(1);

    std::string graph_file, generator, covector_file, class_perm, vertex_perm, expect, method = "auto";
    const std::map<std::string, std::string> about = {
        {"generate", "print a generated graph as an edge list"},
        {"check-pc", "recognize a partial cube or report why not"},
        {"classes", "list Djokovic-Winkler classes and halfspace sizes"},
        {"matrix", "print the Varchenko matrix"},
        {"det", "print the Varchenko determinant"},
        {"factor", "factor the determinant into (1-(x_S)^2)^b terms and a residual"},
        {"minors", "list pc-minors up to isomorphism"},
        {"com-check", "test for a COM tope graph, or check a covector file"},
        {"reproduce-appendix", "compare forbidden-minor determinants with the published values"}};
    for (const auto& name : cli::commands()) {
        auto* sub = app.add_subcommand(name, about.at(name));
        sub->add_option("--graph", graph_file, "edge-list file");
        sub->add_option("--generate", generator, "hypercube:n | minus_star:n | minus_minus:n:m | path:n | cycle:n");
        sub->add_flag("--json", cfg.json, "JSON output");
        if (name == "com-check") sub->add_option("--covectors", covector_file, "covector file");
        if (name == "matrix" || name == "det" || name == "factor") {
            sub->add_option("--class-perm", class_perm, "class c is named x_{p[c]+1}");
            sub->add_option("--vertex-perm", vertex_perm, "row i is vertex p[i]");
        }
        if (name == "det" || name == "factor")
            sub->add_option("--method", method, "auto | bareiss | interpolation")
                ->check(CLI::IsMember({"auto", "bareiss", "interpolation"}));
        if (name == "factor") sub->add_option("--expect", expect, "expected factored form; mismatch exits 1");
        if (name == "reproduce-appendix") {
            sub->add_flag("--extended", cfg.extended, "also run the n=5 cases");
            sub->add_flag("--exact", cfg.exact, "require exact strings under the stored class permutations");
        }
    }
    CLI11_PARSE(app, argc, argv);

    cfg.command = app.get_subcommands().front()->get_name();
    if (!graph_file.empty()) cfg.graph_file = graph_file;
    if (!generator.empty()) cfg.generator = generator;
    if (!covector_file.empty()) cfg.covector_file = covector_file;
    if (!expect.empty()) cfg.expect = expect;
    if (method == "bareiss") cfg.method = DeterminantMethod::bareiss;
    if (method == "interpolation") cfg.method = DeterminantMethod::interpolation;
    try {
        if (!class_perm.empty()) cfg.class_perm = io::parse_permutation(class_perm);
        if (!vertex_perm.empty()) cfg.vertex_perm = io::parse_permutation(vertex_perm);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return cli::usage;
    }
    return cli::run(cfg, std::cout, std::cerr);
}
