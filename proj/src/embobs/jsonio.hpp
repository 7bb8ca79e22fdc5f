#ifndef EMBOBS_JSONIO_HPP
#define EMBOBS_JSONIO_HPP

#include "charclass.hpp"
#include "coincide.hpp"
#include "cover.hpp"
#include "deleted.hpp"
#include "lambda.hpp"
#include "simplicial.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace embobs::io {

using nlohmann::json;
using simplicial::Rational;
using simplicial::SimplicialComplex;

std::string rational_to_string(const Rational& r);
Rational rational_from_string(const std::string& s);

// {"vertices": [...], "facets": [[...], ...]}; closure computed on load.
SimplicialComplex complex_from_json(const json& j);
json complex_to_json(const SimplicialComplex& k);

// {"kind": "skeleton", "m": M} | {"kind": "partition", "parts": [[...],...]}
// | {"kind": "explicit", "members": [[[...],...],...]}
simplicial::CoverFamily family_from_json(const SimplicialComplex& k, const json& j);

// {"dimension": m, "images": {"vertex": ["p/q", ...], ...}}
coincide::PLMap plmap_from_json(const SimplicialComplex& k, const json& j);
json plmap_to_json(const SimplicialComplex& k, const coincide::PLMap& f);

json witness_to_json(const SimplicialComplex& k, const coincide::CoincidenceWitness& w);

// Presented GF(2) total class:
// {"dimension": d, "generators": [{"name","degree","truncation"},...],
//  "total": [["1"], ["T"], ...]} with monomial strings like "T^2*U".
charclass::ManifoldPresentation presentation_from_json(const json& j);

struct QuotientBuild {
    deleted::QuotientComplex quotient;
    std::optional<std::size_t> subcomplex_size; // family mode only
};

// mode: "full" | "cap:M" | "family" (family JSON required then); max_degree
// additionally caps the materialized degrees.
QuotientBuild build_quotient(const SimplicialComplex& k, const std::string& mode,
                             const std::optional<json>& family, std::optional<int> max_degree);

json char_vector_to_json(const charclass::CharClassVector& v);

// Results payloads used by the C API and the CLI.
json dualsw_report(const charclass::ManifoldPresentation& mp);
json capd_report(const charclass::ManifoldPresentation& mp);
json division_report(const charclass::ManifoldPresentation& mp, int m);
json index_report(const SimplicialComplex& k, const std::string& mode,
                  const std::optional<json>& family, std::optional<int> max_degree,
                  bool emit_cocycles);
json cover_report(const SimplicialComplex& k, const json& family, int m, int r, int threads,
                  bool* holds_out);
json coincide_report(const SimplicialComplex& k, const coincide::PLMap& f,
                     std::optional<int> cap, int threads);
json ktheory_report(int d, unsigned f, int n);
json fh_report(long long l, long long m, long long k, long long r, long long cap_d,
               bool* admissible_out);

} // namespace embobs::io

#endif
