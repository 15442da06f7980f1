// nieptk command-line front end. Talks to the shared library exclusively
// through the C API; documents are JSON text on stdin/stdout or --in/--out.
#include <CLI11.hpp>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "nieptk/nieptk.h"

namespace {

std::string read_input(const std::string& path) {
    if (path.empty()) {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream f(path);
    if (!f) {
        std::cerr << "error: cannot open " << path << "\n";
        std::exit(NIEP_ERR_INVALID);
    }
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const char* text) {
    if (path.empty()) {
        std::cout << text << "\n";
        return;
    }
    std::ofstream f(path);
    if (!f) {
        std::cerr << "error: cannot open " << path << " for writing\n";
        std::exit(NIEP_ERR_INVALID);
    }
    f << text << "\n";
}

[[noreturn]] void bail(int rc) {
    std::cerr << "error: " << niep_last_error() << "\n";
    std::exit(rc);
}

niep_doc* parse_or_bail(const std::string& text) {
    niep_doc* d = nullptr;
    int rc = niep_doc_parse(text.c_str(), &d);
    if (rc != NIEP_OK) bail(rc);
    return d;
}

void render_and_emit(niep_doc* out, const std::string& out_path) {
    char* text = nullptr;
    int rc = niep_doc_render(out, &text);
    if (rc != NIEP_OK) bail(rc);
    write_output(out_path, text);
    niep_string_free(text);
    niep_doc_free(out);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"nieptk: circulant and block-circulant spectra toolkit"};
    app.require_subcommand(1);
    app.fallthrough();

    niep_options opts;
    niep_options_init(&opts);
    std::string in_path, out_path;
    bool exact = false;
    app.add_option("--tol", opts.tol, "numeric tolerance");
    app.add_flag("--exact", exact, "rational backend for rational inputs");
    app.add_option("--seed", opts.seed, "seed for randomized commands");
    app.add_option("--max-candidates", opts.max_candidates, "rearrangement search budget");
    app.add_option("--in", in_path, "input document path (default: stdin)");
    app.add_option("--out", out_path, "output document path (default: stdout)");

    auto* eigs = app.add_subcommand("circulant-eigs", "eigenvalues of a circulant");
    auto* realize = app.add_subcommand("realize-circulant", "circulant with a given spectrum");
    bool require_nonneg = false;
    realize->add_flag("--require-nonnegative", require_nonneg,
                      "fail (exit 4) if the first row has a negative entry");
    auto* guo = app.add_subcommand("guo", "least Perron root completing a spectrum");
    std::string guo_mode = "circulant";
    guo->add_option("--mode", guo_mode, "circulant or block")
        ->check(CLI::IsMember({"circulant", "block"}));
    std::size_t guo_rows = 0, guo_cols = 0;
    guo->add_option("--rows", guo_rows, "block mode: eigenvalue layout rows (order of each S)");
    guo->add_option("--cols", guo_cols, "block mode: eigenvalue layout columns (block order)");
    auto* block = app.add_subcommand("block", "operations on a coefficient-matrix family");
    std::string block_op;
    block->add_option("op", block_op, "assemble | spectrum | classify | check-nonneg")
        ->required()
        ->check(CLI::IsMember({"assemble", "spectrum", "classify", "check-nonneg"}));
    auto* ematrix = app.add_subcommand("ematrix", "operations on an eigenvalue layout");
    std::string ematrix_op;
    ematrix->add_option("op", ematrix_op, "validate | phi | realize | min-perron")
        ->required()
        ->check(CLI::IsMember({"validate", "phi", "realize", "min-perron"}));
    auto* verify = app.add_subcommand("verify", "check a block matrix against a spectrum");
    std::string spectrum_path;
    verify->add_option("--spectrum", spectrum_path, "spectrum document path")->required();

    CLI11_PARSE(app, argc, argv);
    opts.exact = exact ? 1 : 0;
    opts.require_nonnegative = require_nonneg ? 1 : 0;

    niep_doc* in = parse_or_bail(read_input(in_path));
    niep_doc* out = nullptr;
    int rc = NIEP_OK;

    if (eigs->parsed()) {
        rc = niep_circulant_eigs(in, &opts, &out);
    } else if (realize->parsed()) {
        rc = niep_realize_circulant(in, &opts, &out);
    } else if (guo->parsed()) {
        if (guo_mode == "circulant") {
            rc = niep_guo_circulant(in, &opts, &out);
        } else {
            // rows/cols may come from flags or already sit in the payload
            if (guo_rows && guo_cols) {
                char* text = nullptr;
                if (niep_doc_render(in, &text) != NIEP_OK) bail(NIEP_ERR_INVALID);
                std::string patched(text);
                niep_string_free(text);
                std::string inject = "\"rows\": " + std::to_string(guo_rows) +
                                     ", \"cols\": " + std::to_string(guo_cols) + ", ";
                auto pos = patched.find("\"payload\": {");
                if (pos == std::string::npos) {
                    std::cerr << "error: malformed document\n";
                    return NIEP_ERR_INVALID;
                }
                patched.insert(pos + std::strlen("\"payload\": {"), inject);
                niep_doc_free(in);
                in = parse_or_bail(patched);
            }
            rc = niep_guo_block(in, &opts, &out);
        }
    } else if (block->parsed()) {
        rc = niep_block_op(in, block_op.c_str(), &opts, &out);
    } else if (ematrix->parsed()) {
        rc = niep_ematrix_op(in, ematrix_op.c_str(), &opts, &out);
        if (rc == NIEP_ERR_NOT_REALIZABLE && ematrix_op == "realize")
            std::cerr << niep_last_error() << "\n";
    } else if (verify->parsed()) {
        niep_doc* spec = parse_or_bail(read_input(spectrum_path));
        rc = niep_verify(in, spec, &opts, &out);
        niep_doc_free(spec);
    }

    niep_doc_free(in);
    if (rc != NIEP_OK) bail(rc);
    render_and_emit(out, out_path);
    return 0;
}
