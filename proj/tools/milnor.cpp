#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "milnor/classify.hpp"
#include "milnor/hurwitz.hpp"
#include "milnor/io.hpp"

namespace {

struct cli_config {
    int m = 2;
    int n = 3;
    std::string base = "0,1";
    std::string conj;
    std::string format = "text";
    bool json = false;
    std::size_t cap = 1000000;
    int strands = 2;
    std::string word;
    unsigned seed = 0;
};

bool want_json(const cli_config& cfg) { return cfg.json || cfg.format == "json"; }

milnor::segment_chord parse_base(int m, const std::string& text) {
    std::istringstream in(text);
    int k = 0, l = 0;
    char comma = 0;
    if (!(in >> k >> comma >> l) || comma != ',' || (in >> std::ws, !in.eof()))
        throw std::invalid_argument("--base expects 'k,l'");
    return milnor::make_chord(m, k, l);
}

int run_classify(const cli_config& cfg) {
    milnor::arc a = milnor::make_arc(
        cfg.m, parse_base(cfg.m, cfg.base),
        milnor::io::parse_braid_word(cfg.m + 1, cfg.conj));
    milnor::classification_report rep = milnor::classify(cfg.m, cfg.n, a);
    if (want_json(cfg))
        std::cout << milnor::io::report_json(rep) << "\n";
    else
        std::cout << milnor::io::report_text(rep);
    return 0;
}

int run_orbit(const cli_config& cfg) {
    auto tuples = milnor::orbit(milnor::standard_tuple(cfg.m), cfg.cap);
    milnor::canonical_braid mono =
        milnor::total_monodromy(milnor::standard_tuple(cfg.m));
    if (want_json(cfg)) {
        for (const auto& t : tuples)
            std::cout << milnor::io::tuple_json(t) << "\n";
        std::cout << "{\"count\":" << tuples.size() << ",\"monodromy\":\""
                  << milnor::to_string(mono) << "\"}\n";
    } else {
        for (const auto& t : tuples)
            std::cout << milnor::io::tuple_text(t) << "\n";
        std::cout << "count=" << tuples.size()
                  << " monodromy=" << milnor::to_string(mono) << "\n";
    }
    return 0;
}

int run_decompose() {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    milnor::quiver_rep rep = milnor::io::parse_rep_json(buf.str());
    std::cout << milnor::io::barcode_json(milnor::decompose(rep)) << "\n";
    return 0;
}

int run_nf(const cli_config& cfg) {
    milnor::braid_word w =
        milnor::io::parse_braid_word(cfg.strands, cfg.word);
    std::cout << milnor::to_string(milnor::normal_form(w)) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Vanishing-path classifier for the type-A Milnor fibre: braid "
        "normal forms, Hurwitz orbits, quiver barcodes, and the "
        "standard-versus-exotic verdict."};
    app.require_subcommand(1);
    cli_config cfg;
    app.add_option("--seed", cfg.seed,
                   "Seed for fixture-generation extensions (unused by the "
                   "current commands)");

    CLI::App* classify =
        app.add_subcommand("classify", "Classify the space built from a final arc");
    classify->add_option("--m", cfg.m, "Number of twists (punctures minus one)")
        ->required();
    classify->add_option("--n", cfg.n, "Half the fibre dimension")->required();
    classify->add_option("--base", cfg.base, "Base chord 'k,l'")->required();
    classify->add_option("--conj", cfg.conj,
                         "Conjugating braid word, e.g. \"1 -2 1\"");
    classify->add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));
    classify->add_flag("--json", cfg.json, "Shorthand for --format json");

    CLI::App* orbit =
        app.add_subcommand("orbit", "Enumerate the Hurwitz orbit of the chain");
    orbit->add_option("--m", cfg.m, "Number of arcs in the chain")->required();
    orbit->add_option("--cap", cfg.cap, "Abort above this many tuples");
    orbit->add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));
    orbit->add_flag("--json", cfg.json, "Shorthand for --format json");

    CLI::App* decompose = app.add_subcommand(
        "decompose", "Read quiver-rep JSON on stdin, write its barcode");

    CLI::App* nf =
        app.add_subcommand("nf", "Normal form of a braid word");
    nf->add_option("--strands", cfg.strands, "Strand count")->required();
    nf->add_option("word", cfg.word, "Braid word, e.g. \"1 2 -1\"");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (classify->parsed()) return run_classify(cfg);
        if (orbit->parsed()) return run_orbit(cfg);
        if (decompose->parsed()) return run_decompose();
        if (nf->parsed()) return run_nf(cfg);
    } catch (const milnor::orbit_cap_exceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
