#pragma once

#include <string>
#include <string_view>

#include "json.hpp"
#include "pjl/bipoly.hpp"
#include "pjl/caselab.hpp"
#include "pjl/intersection.hpp"
#include "pjl/minor_split.hpp"
#include "pjl/puiseux.hpp"

namespace pjl {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "pjl/1";

/// Integer and p/q literals, x, y, + - * / ^ and parentheses. Division only
/// by nonzero constants. Throws SyntaxError with a byte offset.
BiPoly parse_poly(std::string_view text);

Json rational_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json tree_to_json(const RootTree& tree);
/// Inverse of tree_to_json; fields with equal minimal polynomials are shared.
RootTree tree_from_json(const Json& j);

Json classification_json(const RootTree& tree, const RootClassification& c);
Json report_json(const IntersectionReport& r);

Json case_json(const MohCaseData& c);
/// Missing optional keys take the defaults of MohCaseData.
MohCaseData case_from_json(const Json& j);
Json verdict_json(const CaseVerdict& v);

Json delta_sequence_json(const DeltaSequence& s, bool strict);
Json ode_json(const UniPoly& p, int l, const FieldElement& c, int m, const OdeSolution& s);

}  // namespace pjl
