#pragma once

#include "rankcurv/complex.hpp"
#include "rankcurv/curvature.hpp"
#include "rankcurv/ensemble.hpp"
#include "rankcurv/invariants.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace rankcurv {

using Json = nlohmann::ordered_json;

enum class InputFormat { Poset, Map, Simplicial };

/// poset, map or simplicial; ParseError otherwise.
InputFormat parse_input_format(std::string_view name);
/// From the top-level key: "elements", "faces" or "simplices".
InputFormat detect_format(const Json& j);

/// ParseError on malformed text.
Json parse_json_text(std::string_view text);
/// IOError when unreadable, ParseError when malformed.
Json read_json_file(const std::string& path);

// Schema errors are ParseError; structural errors come from the constructors.
Poset poset_from_json(const Json& j);                  // {"elements": [...], "covers": [[lo, hi], ...]}
PolyMap map_from_json(const Json& j);                  // {"faces": [[v, ...], ...]}
SimplicialComplex2 simplicial_from_json(const Json& j); // {"simplices": [[v, ...], ...]}

Json poset_to_json(const Poset& p);
Json map_to_json(const PolyMap& m);

Json rational_to_json(const Rational& q);  // {"num": n, "den": d}
Rational rational_from_json(const Json& j);

/// One object per kind with keys kind, values, aggregates, verdicts.
Json kind_report_to_json(const RankedPoset& p, const CurvatureReport& report, const KindValues& kind);
/// The single kind object when one kind was requested, otherwise an array of them.
Json report_to_json(const RankedPoset& p, const CurvatureReport& report);
/// Rows kind,element,value.
std::string report_to_csv(const RankedPoset& p, const CurvatureReport& report);

Json verification_to_json(const Verification& v);
Json negativity_to_json(const NegativityRecord& r);
Json positive_average_to_json(const PositiveAverageRecord& r);
Json classification_to_json(const ClassificationResult& c);
Json ensemble_to_json(const EnsembleSummary& s);

/// Rows key,value for any JSON value; nested keys are joined with '.', arrays
/// with ';', and {"num","den"} objects rendered as num/den.
std::string json_to_csv(const Json& j);

} // namespace rankcurv
