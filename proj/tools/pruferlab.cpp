// Command-line front end: build a ring from a JSON spec, classify it,
// run the verification harness over a corpus directory, or search the
// standard family of small rings with a boolean condition query.
//
// Exit codes: 0 success, 1 verification found failures, 2 bad input
// (usage, spec, query, or unreadable file), 3 computational limits or
// internal errors.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "pruferlab/pruferlab.hpp"

namespace {

using namespace pruferlab;

RingSpec read_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(errc::io_error, "cannot open spec file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const std::exception& ex) {
        fail(errc::bad_spec, path + ": " + ex.what());
    }
    return RingSpec::from_json(j);
}

void emit(const nlohmann::ordered_json& j) { std::cout << j.dump(2) << "\n"; }

int run(int argc, char** argv) {
    CLI::App app{"exact classification of small commutative rings"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string format = "table";
    bool order_cap_set = false;
    app.add_option_function<int>(
           "--order-cap",
           [&](int v) {
               cfg.order_cap = v;
               order_cap_set = true;
           },
           "largest constructible ring order")
        ->check(CLI::PositiveNumber);
    app.add_option("--iso-cap", cfg.iso_cap, "largest order fed to isomorphism search")
        ->check(CLI::PositiveNumber);
    app.add_option("--degree-bound", cfg.degree_bound,
                   "polynomial degree bound for the content-formula sweep")
        ->check(CLI::PositiveNumber);
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"table", "machine"}))
        ->capture_default_str();

    std::string spec_path, corpus_dir, query;
    long max_order = 16;

    CLI::App* build_cmd = app.add_subcommand("build", "construct a ring and summarize it");
    build_cmd->add_option("--spec", spec_path, "JSON ring spec file")->required();

    CLI::App* classify_cmd =
        app.add_subcommand("classify", "decide all conditions for one ring");
    classify_cmd->add_option("--spec", spec_path, "JSON ring spec file")->required();

    CLI::App* verify_cmd =
        app.add_subcommand("verify", "run the whole verification harness on a corpus");
    verify_cmd->add_option("--corpus", corpus_dir, "directory of corpus .json entries")
        ->required();

    CLI::App* search_cmd =
        app.add_subcommand("search", "find small rings matching a condition query");
    search_cmd->add_option("--query", query,
                           "boolean query over: semihereditary, wdim_le_1, arithmetical, "
                           "gaussian, pruefer, local, total")
        ->required();
    search_cmd->add_option("--max-order", max_order, "largest candidate ring order")
        ->check(CLI::Range(2, 100))
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (!order_cap_set) {
        if (const char* env = std::getenv("PRUFERLAB_ORDER_CAP")) {
            char* end = nullptr;
            long v = std::strtol(env, &end, 10);
            if (end == env || *end != '\0' || v < 1)
                fail(errc::bad_spec, "PRUFERLAB_ORDER_CAP must be a positive integer");
            cfg.order_cap = static_cast<int>(v);
        }
    }

    if (build_cmd->parsed()) {
        RingPtr R = pruferlab::build(read_spec(spec_path), cfg);
        if (format == "machine") {
            emit(ring_summary_json(R, cfg));
        } else {
            std::cout << R->provenance.name() << "\n" << summarize_ring(R, cfg) << "\n";
        }
        return 0;
    }

    if (classify_cmd->parsed()) {
        RingPtr R = pruferlab::build(read_spec(spec_path), cfg);
        ClassificationReport C = classify(R, cfg);
        if (format == "machine") emit(classification_json(C));
        else std::cout << render_classification(C);
        return 0;
    }

    if (verify_cmd->parsed()) {
        VerificationReport V = run_verification(load_corpus(corpus_dir), cfg);
        if (format == "machine") emit(verification_json(V));
        else std::cout << render_verification(V);
        return V.ok() ? 0 : 1;
    }

    SearchResult S = search_rings(query, max_order, cfg);
    if (format == "machine") {
        nlohmann::ordered_json j;
        j["query"] = S.query;
        j["max_order"] = S.max_order;
        j["candidates"] = S.candidates;
        nlohmann::ordered_json hits = nlohmann::ordered_json::array();
        for (const SearchHit& h : S.hits) {
            nlohmann::ordered_json row;
            row["name"] = h.name;
            row["order"] = h.order;
            row["flags"] = h.flags;
            hits.push_back(row);
        }
        j["hits"] = hits;
        emit(j);
    } else {
        for (const SearchHit& h : S.hits)
            std::cout << "order=" << h.order << "  " << h.name << "\n";
        std::cout << S.hits.size() << " of " << S.candidates << " candidates match\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const pruferlab::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.exit_code();
    } catch (const std::logic_error& e) {
        std::cerr << "internal check failed: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
