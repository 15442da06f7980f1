#ifndef NIEPTK_JSON_IO_HPP
#define NIEPTK_JSON_IO_HPP

#include <json.hpp>
#include <string>

#include "block.hpp"
#include "ematrix.hpp"
#include "types.hpp"

namespace nieptk {

using json = nlohmann::ordered_json;

// Every document is {"kind": ..., "payload": ..., "meta": {...}}.
// Complex numbers are two-element arrays [re, im]; in exact mode the parts
// are rational strings "p/q".
struct Document {
    std::string kind;
    json payload;
};

json make_envelope(const std::string& kind, json payload, double tol);
Document parse_envelope(const json& doc);

json complex_to_json(const cplx& z);
cplx complex_from_json(const json& j);

json spectrum_to_json(const CVec& entries);
CVec spectrum_from_payload(const json& payload);

json circulant_to_json(const CVec& first_row);
CVec circulant_from_payload(const json& payload);

json sfamily_to_json(const SFamily& s);
SFamily sfamily_from_payload(const json& payload);

json block_matrix_to_json(const CirculantBlockMatrix& a);
CirculantBlockMatrix block_matrix_from_payload(const json& payload);

json ematrix_to_json(const EMatrix& e);
EMatrix ematrix_from_payload(const json& payload);

}  // namespace nieptk

#endif
