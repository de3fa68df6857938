#pragma once

#include <json.hpp>

#include "gradedmf/decompose.hpp"
#include "gradedmf/hom.hpp"
#include "gradedmf/mf.hpp"
#include "gradedmf/quiver.hpp"
#include "gradedmf/stability.hpp"

namespace gmf {

using Json = nlohmann::json;

// Polynomial: array of {"c": "num/den", "e": [exponents]}, descending
// lexicographic on e, reduced fractions, no zero terms. The internal term
// order already is the canonical one.
Json poly_to_json(const Poly& p);
Poly poly_from_json(const Json& j, int nvars);

Json mf_to_json(const GradedMF& m);
GradedMF mf_from_json(const Json& j);

Json verification_to_json(const VerificationReport& rep);
Json hom_report_to_json(const HomReport& rep);
Json decomposition_to_json(const Decomposition& dec, bool with_certificate);
Json labels_to_json(const std::vector<IndecompLabel>& labels);
Json hn_to_json(const HNFiltration& hn);
Json bridgeland_to_json(const BridgelandReport& rep);
Json serre_report_to_json(const SerreDualityReport& rep);
Json equivalence_to_json(const EquivalenceReport& rep);
Json imat_to_json(const IMat& m);

} // namespace gmf
