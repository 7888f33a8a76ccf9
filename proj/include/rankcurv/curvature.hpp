#pragma once

#include "rankcurv/poset.hpp"
#include "rankcurv/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rankcurv {

// Extended curvatures on a ranked poset of rank 2. Each throws WrongRank if the
// poset does not have rank 2 or the element has the wrong rank.
//   R0(v) = 1 + 3/2 A0 - A0^2
//   R1(e) = 1 + 6 A1 + 3/2 B1 - U1 - D1
//   R2(s) = 1 + 6 B2 - B2^2
Rational r0(const RankedPoset& p, ElementIndex v);
Rational r1(const RankedPoset& p, ElementIndex e);
Rational r2(const RankedPoset& p, ElementIndex sigma);

/// Forman's curvature A(x) + B(x) - #parallel neighbours, at any rank.
std::int64_t forman_curvature(const RankedPoset& p, ElementIndex x);

/// Forman's curvature at an edge; WrongRank unless x has rank 1.
std::int64_t ric(const RankedPoset& p, ElementIndex e);

struct Averages {
    Rational r1;
    Rational a1;
    Rational b1;
};

/// Means over the rank-1 level. EmptyLevel if there is none, WrongRank if the
/// poset does not have rank 2.
Averages averages(const RankedPoset& p);

struct SufficientlyCovered {
    bool holds = false;
    Rational lhs;  // (A1 + B1)^2 - 6 A1 - 3/2 B1 - 1 with averages
};

SufficientlyCovered sufficiently_covered_from(const Rational& a1_mean, const Rational& b1_mean);
SufficientlyCovered is_sufficiently_covered(const RankedPoset& p);

/// Stone's vertex curvature, 2 - sum over rank-2 elements s > v of (1 - 2/B2(s)).
Rational stone_star_surface(const RankedPoset& p, ElementIndex v);
/// Poset form 2 - A0(v) + sum over rank-2 elements s > v of 2/B2(s).
Rational stone_star_general(const RankedPoset& p, ElementIndex v);

enum class CurvatureKind { R0, R1, R2, Ric, Stone, StoneGeneral };

std::string_view to_string(CurvatureKind kind);
/// Accepts r0, r1, r2, ric, stone, stone-general; throws ParseError otherwise.
CurvatureKind parse_curvature_kind(std::string_view name);
int element_rank(CurvatureKind kind);

struct KindValues {
    CurvatureKind kind;
    std::vector<std::pair<ElementIndex, Rational>> values;  // element order
    Rational sum;
    bool all_negative = false;
};

struct CurvatureReport {
    std::vector<KindValues> kinds;
    Rational sum_r0;
    Rational sum_r1;
    Rational sum_r2;
    Averages means;
    SufficientlyCovered sufficiently_covered;
};

/// Per-element values for each requested kind plus aggregates. When `only` is
/// given, per-element values are restricted to those elements (sorted indices);
/// aggregates always cover the whole poset.
CurvatureReport full_report(const RankedPoset& p, const std::vector<CurvatureKind>& kinds,
                            const std::optional<std::vector<ElementIndex>>& only = std::nullopt);

} // namespace rankcurv
