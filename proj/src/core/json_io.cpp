#include "json_io.hpp"

#include "exact.hpp"

namespace nieptk {

namespace {
constexpr const char* kToolName = "nieptk";
constexpr const char* kToolVersion = "0.1.0";

double scalar_from_json(const json& j) {
    if (j.is_number()) return j.get<double>();
    if (j.is_string()) {
        auto r = exact::parse_rational(j.get<std::string>());
        if (!r) throw invalid_argument_error("bad rational literal: " + j.get<std::string>());
        return r->get_d();
    }
    throw invalid_argument_error("expected a number or rational string");
}
}  // namespace

json make_envelope(const std::string& kind, json payload, double tol) {
    return json{{"kind", kind},
                {"payload", std::move(payload)},
                {"meta", {{"tool", kToolName}, {"version", kToolVersion}, {"tol", tol}}}};
}

Document parse_envelope(const json& doc) {
    if (!doc.is_object() || !doc.contains("kind") || !doc.contains("payload"))
        throw invalid_argument_error("document must have 'kind' and 'payload'");
    std::string kind = doc.at("kind").get<std::string>();
    static const char* known[] = {"spectrum", "circulant",   "s-family",
                                  "block-matrix", "e-matrix", "report"};
    bool ok = false;
    for (const char* k : known) ok = ok || kind == k;
    if (!ok) throw invalid_argument_error("unknown document kind '" + kind + "'");
    return Document{kind, doc.at("payload")};
}

json complex_to_json(const cplx& z) { return json::array({z.real(), z.imag()}); }

cplx complex_from_json(const json& j) {
    if (j.is_number() || j.is_string()) return {scalar_from_json(j), 0.0};
    if (!j.is_array() || j.size() != 2)
        throw invalid_argument_error("complex value must be [re, im]");
    return {scalar_from_json(j[0]), scalar_from_json(j[1])};
}

json spectrum_to_json(const CVec& entries) {
    json arr = json::array();
    for (const cplx& z : entries) arr.push_back(complex_to_json(z));
    return json{{"entries", std::move(arr)}};
}

CVec spectrum_from_payload(const json& payload) {
    if (!payload.contains("entries") || !payload.at("entries").is_array())
        throw invalid_argument_error("spectrum payload needs an 'entries' array");
    CVec out;
    for (const json& j : payload.at("entries")) out.push_back(complex_from_json(j));
    if (out.empty()) throw invalid_argument_error("spectrum must be nonempty");
    return out;
}

json circulant_to_json(const CVec& first_row) {
    json arr = json::array();
    for (const cplx& z : first_row) arr.push_back(complex_to_json(z));
    return json{{"first_row", std::move(arr)}};
}

CVec circulant_from_payload(const json& payload) {
    if (!payload.contains("first_row") || !payload.at("first_row").is_array())
        throw invalid_argument_error("circulant payload needs a 'first_row' array");
    CVec out;
    for (const json& j : payload.at("first_row")) out.push_back(complex_from_json(j));
    if (out.empty()) throw invalid_argument_error("circulant first row must be nonempty");
    return out;
}

namespace {
json cmat_to_json(const CMat& m) {
    json rows = json::array();
    for (const auto& row : m) {
        json r = json::array();
        for (const cplx& z : row) r.push_back(complex_to_json(z));
        rows.push_back(std::move(r));
    }
    return rows;
}

CMat cmat_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw invalid_argument_error("matrix must be a nonempty array");
    CMat m;
    for (const json& row : j) {
        if (!row.is_array()) throw invalid_argument_error("matrix rows must be arrays");
        std::vector<cplx> r;
        for (const json& z : row) r.push_back(complex_from_json(z));
        m.push_back(std::move(r));
    }
    return m;
}
}  // namespace

json sfamily_to_json(const SFamily& s) {
    json mats = json::array();
    for (const CMat& m : s.s) mats.push_back(cmat_to_json(m));
    return json{{"n", s.n}, {"m", s.m}, {"matrices", std::move(mats)}};
}

SFamily sfamily_from_payload(const json& payload) {
    if (!payload.contains("matrices")) throw invalid_argument_error("s-family needs 'matrices'");
    SFamily s;
    for (const json& j : payload.at("matrices")) s.s.push_back(cmat_from_json(j));
    s.m = s.s.size();
    if (s.m == 0) throw invalid_argument_error("s-family must contain at least one matrix");
    s.n = s.s[0].size();
    for (const CMat& m : s.s) {
        if (m.size() != s.n) throw invalid_argument_error("s-family matrices differ in size");
        for (const auto& row : m)
            if (row.size() != s.n) throw invalid_argument_error("s-family matrices not square");
    }
    return s;
}

json block_matrix_to_json(const CirculantBlockMatrix& a) {
    json grid = json::array();
    for (const auto& row : a.blocks) {
        json r = json::array();
        for (const CVec& b : row) {
            json fr = json::array();
            for (const cplx& z : b) fr.push_back(complex_to_json(z));
            r.push_back(std::move(fr));
        }
        grid.push_back(std::move(r));
    }
    return json{{"n", a.n}, {"m", a.m}, {"blocks", std::move(grid)}};
}

CirculantBlockMatrix block_matrix_from_payload(const json& payload) {
    if (!payload.contains("blocks")) throw invalid_argument_error("block-matrix needs 'blocks'");
    std::vector<std::vector<CVec>> blocks;
    for (const json& row : payload.at("blocks")) {
        std::vector<CVec> r;
        for (const json& b : row) {
            CVec fr;
            for (const json& z : b) fr.push_back(complex_from_json(z));
            r.push_back(std::move(fr));
        }
        blocks.push_back(std::move(r));
    }
    return block_matrix_from_rows(std::move(blocks));
}

json ematrix_to_json(const EMatrix& e) {
    return json{{"rows", e.rows}, {"cols", e.cols}, {"entries", cmat_to_json(e.entries)}};
}

EMatrix ematrix_from_payload(const json& payload) {
    if (!payload.contains("entries")) throw invalid_argument_error("e-matrix needs 'entries'");
    CMat entries = cmat_from_json(payload.at("entries"));
    return ematrix_from_entries(std::move(entries));
}

}  // namespace nieptk
