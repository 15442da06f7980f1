#include "nieptk/nieptk.h"

#include <cstring>
#include <string>

#include "core/block.hpp"
#include "core/circulant.hpp"
#include "core/dft.hpp"
#include "core/ematrix.hpp"
#include "core/exact.hpp"
#include "core/guo.hpp"
#include "core/json_io.hpp"
#include "core/polynomial.hpp"
#include "core/spectra.hpp"
#include "core/structure.hpp"

using namespace nieptk;

struct niep_doc {
    json j;
    std::string kind;
};

namespace {

thread_local std::string g_error;

int fail(int code, const std::string& msg) {
    g_error = msg;
    return code;
}

template <typename F>
int guarded(F&& f) {
    try {
        g_error.clear();
        return f();
    } catch (const not_realizable_error& e) {
        return fail(NIEP_ERR_NOT_REALIZABLE, e.what());
    } catch (const invalid_argument_error& e) {
        return fail(NIEP_ERR_INVALID, e.what());
    } catch (const unsupported_size_error& e) {
        return fail(NIEP_ERR_INVALID, e.what());
    } catch (const numeric_error& e) {
        return fail(NIEP_ERR_NUMERIC, e.what());
    } catch (const nlohmann::json::exception& e) {
        return fail(NIEP_ERR_INVALID, e.what());
    } catch (const std::exception& e) {
        return fail(NIEP_ERR_NUMERIC, e.what());
    }
}

niep_options defaults() {
    niep_options o;
    niep_options_init(&o);
    return o;
}

const niep_options& opts_or_default(const niep_options* opts) {
    static thread_local niep_options fallback;
    if (opts) return *opts;
    fallback = defaults();
    return fallback;
}

int emit(const std::string& kind, json payload, double tol, niep_doc** out) {
    *out = new niep_doc{make_envelope(kind, std::move(payload), tol), kind};
    return NIEP_OK;
}

Document doc_of(const niep_doc* d, const char* expected_kind) {
    if (!d) throw invalid_argument_error("null document");
    Document doc = parse_envelope(d->j);
    if (expected_kind && doc.kind != expected_kind)
        throw invalid_argument_error("expected a '" + std::string(expected_kind) +
                                     "' document, got '" + doc.kind + "'");
    return doc;
}

json permutation_tuple_to_json(const PermutationTuple& t) {
    json arr = json::array();
    for (const auto& row : t) arr.push_back(row);
    return arr;
}

// --- exact backend helpers -------------------------------------------------

// complex rational (re, im); im requires 4 | m to be representable
struct RatComplex {
    exact::Rat re, im;
};

RatComplex rational_complex_from_json(const json& j) {
    auto part = [](const json& v) -> exact::Rat {
        std::string text;
        if (v.is_string())
            text = v.get<std::string>();
        else if (v.is_number_integer())
            text = std::to_string(v.get<long long>());
        else if (v.is_number())
            text = v.dump();
        else
            throw invalid_argument_error("exact mode: entries must be rational");
        auto r = exact::parse_rational(text);
        if (!r) throw invalid_argument_error("exact mode: bad rational literal '" + text + "'");
        return *r;
    };
    if (j.is_number() || j.is_string()) return {part(j), exact::Rat(0)};
    if (!j.is_array() || j.size() != 2)
        throw invalid_argument_error("complex value must be [re, im]");
    return {part(j[0]), part(j[1])};
}

exact::Cyclo cyclo_from_rat_complex(const exact::FieldPtr& field, const RatComplex& rc) {
    exact::Cyclo v(field, rc.re);
    if (rc.im != 0) {
        if (field->order() % 4 != 0)
            throw numeric_error(
                "exact mode: imaginary rational entries need an order divisible by 4");
        v += exact::Cyclo::root_power(field, static_cast<long long>(field->order() / 4))
                 .scaled(rc.im);
    }
    return v;
}

json cyclo_to_rational_json(const exact::Cyclo& v) {
    if (!v.is_rational())
        throw numeric_error("exact mode: result entry is not rational; rerun without --exact");
    return json::array({exact::to_string(v.rational()), "0"});
}

}  // namespace

extern "C" {

void niep_options_init(niep_options* opts) {
    if (!opts) return;
    opts->tol = 1e-10;
    opts->exact = 0;
    opts->require_nonnegative = 0;
    opts->seed = 0;
    opts->max_candidates = 200000;
}

int niep_doc_parse(const char* json_text, niep_doc** out) {
    return guarded([&] {
        if (!json_text || !out) return fail(NIEP_ERR_INVALID, "null argument");
        json j = json::parse(json_text);
        Document doc = parse_envelope(j);
        *out = new niep_doc{std::move(j), doc.kind};
        return NIEP_OK;
    });
}

int niep_doc_render(const niep_doc* doc, char** json_text) {
    return guarded([&] {
        if (!doc || !json_text) return fail(NIEP_ERR_INVALID, "null argument");
        std::string s = doc->j.dump(2);
        *json_text = new char[s.size() + 1];
        std::memcpy(*json_text, s.c_str(), s.size() + 1);
        return NIEP_OK;
    });
}

const char* niep_doc_kind(const niep_doc* doc) { return doc ? doc->kind.c_str() : nullptr; }

void niep_doc_free(niep_doc* doc) { delete doc; }

void niep_string_free(char* text) { delete[] text; }

const char* niep_last_error(void) { return g_error.c_str(); }

const char* niep_version(void) { return "0.1.0"; }

int niep_circulant_eigs(const niep_doc* circulant, const niep_options* opts, niep_doc** out) {
    const niep_options& o = opts_or_default(opts);
    return guarded([&] {
        Document doc = doc_of(circulant, "circulant");
        CVec row = circulant_from_payload(doc.payload);
        return emit("spectrum", spectrum_to_json(dft_eigenvalues(row)), o.tol, out);
    });
}

int niep_realize_circulant(const niep_doc* spectrum, const niep_options* opts, niep_doc** out) {
    const niep_options& o = opts_or_default(opts);
    return guarded([&] {
        Document doc = doc_of(spectrum, "spectrum");
        json payload;
        bool nonneg;
        double min_entry;
        if (o.exact) {
            const json& entries = doc.payload.at("entries");
            std::size_t m = entries.size();
            auto field = exact::make_field(m);
            exact::CycloVec spec;
            for (const json& j : entries)
                spec.push_back(cyclo_from_rat_complex(field, rational_complex_from_json(j)));
            exact::CycloVec row = exact::idft_coefficients(field, spec);
            json arr = json::array();
            nonneg = true;
            min_entry = 0.0;
            for (const exact::Cyclo& v : row) {
                json e = cyclo_to_rational_json(v);
                double re = exact::parse_rational(e[0].get<std::string>())->get_d();
                min_entry = std::min(min_entry, re);
                if (re < 0) nonneg = false;
                arr.push_back(std::move(e));
            }
            payload = json{{"first_row", std::move(arr)}};
        } else {
            CVec spec = spectrum_from_payload(doc.payload);
            Circulant c = circulant_from_spectrum(spec);
            NonnegativityVerdict v = nonnegativity(c, o.tol);
            nonneg = v.nonnegative;
            min_entry = v.min_entry;
            payload = circulant_to_json(c.first_row);
        }
        payload["nonnegative"] = nonneg;
        payload["min_entry"] = min_entry;
        if (o.require_nonnegative && !nonneg)
            throw not_realizable_error("realize-circulant: first row is not nonnegative (min entry " +
                                           std::to_string(min_entry) + ")",
                                       0.0);
        return emit("circulant", std::move(payload), o.tol, out);
    });
}

int niep_guo_circulant(const niep_doc* tail, const niep_options* opts, niep_doc** out) {
    const niep_options& o = opts_or_default(opts);
    return guarded([&] {
        Document doc = doc_of(tail, "spectrum");
        CVec t = spectrum_from_payload(doc.payload);
        GuoResult res = guo_index(t);
        json payload{{"mode", "circulant"},
                     {"lambda0", res.lambda0},
                     {"max_tail_modulus", res.max_tail_modulus},
                     {"assignment", res.assignment},
                     {"witness", circulant_to_json(res.witness.first_row)}};
        return emit("report", std::move(payload), o.tol, out);
    });
}

int niep_guo_block(const niep_doc* spectrum, const niep_options* opts, niep_doc** out) {
    const niep_options& o = opts_or_default(opts);
    return guarded([&] {
        Document doc = doc_of(spectrum, "spectrum");
        CVec entries = spectrum_from_payload(doc.payload);
        if (!doc.payload.contains("rows") || !doc.payload.contains("cols"))
            throw invalid_argument_error(
                "guo block mode needs 'rows' and 'cols' in the spectrum payload");
        std::size_t rows = doc.payload.at("rows").get<std::size_t>();
        std::size_t cols = doc.payload.at("cols").get<std::size_t>();
        if (rows * cols != entries.size())
            throw invalid_argument_error("rows*cols must equal the number of entries");

        // Perron entry to (1,1), rest in given order
        double rho = 0.0;
        for (const cplx& z : entries) rho = std::max(rho, std::abs(z));
        std::size_t pi = entries.size();
        for (std::size_t i = 0; i < entries.size(); ++i)
            if (std::abs(entries[i].imag()) <= 1e-9 && entries[i].real() > 0 &&
                std::abs(entries[i]) >= rho - 1e-9) {
                pi = i;
                break;
            }
        if (pi == entries.size())
            throw invalid_argument_error("no real positive max-modulus entry for the Perron slot");
        std::swap(entries[0], entries[pi]);
        CMat grid(rows, CVec(cols));
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) grid[i][j] = entries[i * cols + j];
        EMatrix e = ematrix_from_entries(std::move(grid));
        BlockGuoResult res = min_perron(e, o.max_candidates);
        json payload{{"mode", "block"},
                     {"minimal_perron", res.minimal_perron},
                     {"trace_floor", res.trace_floor},
                     {"search_complete", res.search_complete},
                     {"candidates_tried", res.candidates_tried},
                     {"layout", ematrix_to_json(res.layout)},
                     {"witness", block_matrix_to_json(res.witness)}};
        return emit("report", std::move(payload), o.tol, out);
    });
}

int niep_block_op(const niep_doc* family, const char* op, const niep_options* opts,
                  niep_doc** out) {
    const niep_options& o = opts_or_default(opts);
    return guarded([&] {
        if (!op) throw invalid_argument_error("null op");
        Document doc = doc_of(family, "s-family");
        std::string opname(op);
        if (opname == "assemble") {
            if (o.exact) {
                const json& mats = doc.payload.at("matrices");
                std::size_t m = mats.size();
                auto field = exact::make_field(m);
                std::size_t n = mats[0].size();
                std::vector<std::vector<std::vector<exact::Rat>>> s(
                    m, std::vector<std::vector<exact::Rat>>(n, std::vector<exact::Rat>(n)));
                for (std::size_t k = 0; k < m; ++k)
                    for (std::size_t i = 0; i < n; ++i)
                        for (std::size_t j = 0; j < n; ++j) {
                            RatComplex rc = rational_complex_from_json(mats[k][i][j]);
                            if (rc.im != 0)
                                throw invalid_argument_error(
                                    "exact assemble: matrices must be rational and real");
                            s[k][i][j] = rc.re;
                        }
                auto blocks = exact::assemble(field, s);
                json grid = json::array();
                for (std::size_t u = 0; u < n; ++u) {
                    json row = json::array();
                    for (std::size_t v = 0; v < n; ++v) {
                        json fr = json::array();
                        for (std::size_t k = 0; k < m; ++k)
                            fr.push_back(cyclo_to_rational_json(blocks[u][v][k]));
                        row.push_back(std::move(fr));
                    }
                    grid.push_back(std::move(row));
                }
                return emit("block-matrix",
                            json{{"n", n}, {"m", m}, {"blocks", std::move(grid)}}, o.tol, out);
            }
            SFamily s = sfamily_from_payload(doc.payload);
            return emit("block-matrix", block_matrix_to_json(assemble(s)), o.tol, out);
        }
        SFamily s = sfamily_from_payload(doc.payload);
        if (opname == "spectrum")
            return emit("spectrum", spectrum_to_json(family_spectrum(s)), o.tol, out);
        if (opname == "classify") {
            StructureReport rep = classify_family(s, o.tol);
            json payload{{"diagonal", rep.diagonal},
                         {"circulant", rep.circulant},
                         {"symmetric_real", rep.symmetric_real},
                         {"permutatively_equivalent",
                          rep.permutatively_equivalent
                              ? permutation_tuple_to_json(*rep.permutatively_equivalent)
                              : json(nullptr)}};
            return emit("report", std::move(payload), o.tol, out);
        }
        if (opname == "check-nonneg") {
            bool ok = is_nonnegative_family(s, o.tol);
            return emit("report", json{{"nonnegative_family", ok}}, o.tol, out);
        }
        throw invalid_argument_error("unknown block op '" + opname + "'");
    });
}

int niep_ematrix_op(const niep_doc* ematrix, const char* op, const niep_options* opts,
                    niep_doc** out) {
    const niep_options& o = opts_or_default(opts);
    return guarded([&] {
        if (!op) throw invalid_argument_error("null op");
        Document doc = doc_of(ematrix, "e-matrix");
        EMatrix e = ematrix_from_payload(doc.payload);
        std::string opname(op);
        if (opname == "validate") {
            EMatrixReport rep = validate_ematrix(e, std::max(o.tol, 1e-9));
            json payload{{"conjugation_closed", rep.conjugation_closed},
                         {"perron_max_modulus", rep.perron_max_modulus},
                         {"column_conjugation", rep.column_conjugation},
                         {"middle_column_real", rep.middle_column_real},
                         {"s0_nonnegative", rep.s0_nonnegative},
                         {"ok", rep.ok()}};
            return emit("report", std::move(payload), o.tol, out);
        }
        if (opname == "phi")
            return emit("report", json{{"phi", phi(e, std::max(o.tol, 1e-9))}}, o.tol, out);
        if (opname == "realize") {
            CirculantBlockMatrix a = realize_ematrix(e, std::max(o.tol, 1e-9));
            return emit("block-matrix", block_matrix_to_json(a), o.tol, out);
        }
        if (opname == "min-perron") {
            BlockGuoResult res = min_perron(e, o.max_candidates);
            json payload{{"mode", "block"},
                         {"minimal_perron", res.minimal_perron},
                         {"trace_floor", res.trace_floor},
                         {"search_complete", res.search_complete},
                         {"candidates_tried", res.candidates_tried},
                         {"layout", ematrix_to_json(res.layout)},
                         {"witness", block_matrix_to_json(res.witness)}};
            return emit("report", std::move(payload), o.tol, out);
        }
        throw invalid_argument_error("unknown e-matrix op '" + opname + "'");
    });
}

int niep_verify(const niep_doc* block_matrix, const niep_doc* spectrum, const niep_options* opts,
                niep_doc** out) {
    const niep_options& o = opts_or_default(opts);
    return guarded([&] {
        Document mdoc = doc_of(block_matrix, "block-matrix");
        Document sdoc = doc_of(spectrum, "spectrum");
        CirculantBlockMatrix a = block_matrix_from_payload(mdoc.payload);
        CVec expected = spectrum_from_payload(sdoc.payload);
        if (a.n * a.m > 12)
            throw unsupported_size_error("verify: full-matrix oracle limited to mn <= 12");
        CVec actual = matrix_eigenvalues(a.materialize());
        double dist = multiset_match_distance(actual, expected);
        double match_tol = std::max(o.tol, 1e-8);
        json payload{{"match", dist <= match_tol},
                     {"max_matched_distance", dist},
                     {"dimension", a.n * a.m}};
        return emit("report", std::move(payload), o.tol, out);
    });
}

}  // extern "C"
