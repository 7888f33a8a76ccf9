#include "rankcurv/curvature.hpp"

#include <algorithm>

namespace rankcurv {

namespace {

void require_rank(const RankedPoset& p, ElementIndex x, int wanted, const char* what)
{
    if (x >= p.poset().size())
        throw Error(ErrorKind::UnknownIdentifier, "element index out of range");
    if (p.max_rank() != 2 || p.poset().empty())
        throw Error(ErrorKind::WrongRank,
                    std::string(what) + " is defined on posets of rank 2, this one has rank " +
                        std::to_string(p.max_rank()),
                    p.poset().name(x));
    if (p.rank_of(x) != wanted)
        throw Error(ErrorKind::WrongRank,
                    std::string(what) + " needs an element of rank " + std::to_string(wanted) + ", '" +
                        p.poset().name(x) + "' has rank " + std::to_string(p.rank_of(x)),
                    p.poset().name(x));
}

Rational quadratic_term(std::int64_t k, std::int64_t linear_num, std::int64_t linear_den)
{
    return Rational(1) + Rational(linear_num * k, linear_den) - Rational(k * k);
}

std::int64_t up_count(const RankedPoset& p, ElementIndex x)
{
    return static_cast<std::int64_t>(p.poset().upper_covers(x).size());
}

std::int64_t down_count(const RankedPoset& p, ElementIndex x)
{
    return static_cast<std::int64_t>(p.poset().lower_covers(x).size());
}

} // namespace

Rational r0(const RankedPoset& p, ElementIndex v)
{
    require_rank(p, v, 0, "R0");
    return quadratic_term(up_count(p, v), 3, 2);
}

Rational r1(const RankedPoset& p, ElementIndex e)
{
    require_rank(p, e, 1, "R1");
    const auto c = local_counts(p.poset(), p.rank(), e);
    return Rational(1) + Rational(6 * c.a) + Rational(3 * c.b, 2) - Rational(c.u) - Rational(c.d);
}

Rational r2(const RankedPoset& p, ElementIndex sigma)
{
    require_rank(p, sigma, 2, "R2");
    return quadratic_term(down_count(p, sigma), 6, 1);
}

std::int64_t forman_curvature(const RankedPoset& p, ElementIndex x)
{
    const auto c = local_counts(p.poset(), p.rank(), x);
    return c.a + c.b - c.n;
}

std::int64_t ric(const RankedPoset& p, ElementIndex e)
{
    if (e >= p.poset().size())
        throw Error(ErrorKind::UnknownIdentifier, "element index out of range");
    if (p.rank_of(e) != 1)
        throw Error(ErrorKind::WrongRank, "Ric needs an element of rank 1, '" + p.poset().name(e) + "' has rank " +
                                              std::to_string(p.rank_of(e)),
                    p.poset().name(e));
    return forman_curvature(p, e);
}

Averages averages(const RankedPoset& p)
{
    const auto& edges = p.level(1);
    if (edges.empty())
        throw Error(ErrorKind::EmptyLevel, "poset has no rank-1 elements");
    if (p.max_rank() != 2)
        throw Error(ErrorKind::WrongRank, "averages need a poset of rank 2, this one has rank " +
                                              std::to_string(p.max_rank()));
    Rational sr, sa, sb;
    for (auto e : edges) {
        sr += r1(p, e);
        sa += up_count(p, e);
        sb += down_count(p, e);
    }
    const auto n = static_cast<std::int64_t>(edges.size());
    return {sr / n, sa / n, sb / n};
}

SufficientlyCovered sufficiently_covered_from(const Rational& a1_mean, const Rational& b1_mean)
{
    const Rational s = a1_mean + b1_mean;
    const Rational lhs = s * s - Rational(6) * a1_mean - Rational(3, 2) * b1_mean - Rational(1);
    return {lhs >= 0, lhs};
}

SufficientlyCovered is_sufficiently_covered(const RankedPoset& p)
{
    const auto m = averages(p);
    return sufficiently_covered_from(m.a1, m.b1);
}

namespace {

template <typename Term>
Rational stone_sum(const RankedPoset& p, ElementIndex v, Term term)
{
    require_rank(p, v, 0, "R*");
    Rational sum;
    for (auto s : p.poset().above(v).to_vector())
        if (p.rank_of(s) == 2)
            sum += term(down_count(p, s));
    return sum;
}

} // namespace

Rational stone_star_surface(const RankedPoset& p, ElementIndex v)
{
    return Rational(2) - stone_sum(p, v, [](std::int64_t b) { return Rational(1) - Rational(2, b); });
}

Rational stone_star_general(const RankedPoset& p, ElementIndex v)
{
    const auto sum = stone_sum(p, v, [](std::int64_t b) { return Rational(2, b); });
    return Rational(2) - Rational(up_count(p, v)) + sum;
}

std::string_view to_string(CurvatureKind kind)
{
    switch (kind) {
    case CurvatureKind::R0: return "r0";
    case CurvatureKind::R1: return "r1";
    case CurvatureKind::R2: return "r2";
    case CurvatureKind::Ric: return "ric";
    case CurvatureKind::Stone: return "stone";
    case CurvatureKind::StoneGeneral: return "stone-general";
    }
    return "unknown";
}

CurvatureKind parse_curvature_kind(std::string_view name)
{
    for (auto k : {CurvatureKind::R0, CurvatureKind::R1, CurvatureKind::R2, CurvatureKind::Ric, CurvatureKind::Stone,
                   CurvatureKind::StoneGeneral})
        if (to_string(k) == name)
            return k;
    throw Error(ErrorKind::ParseError, "unknown curvature kind '" + std::string(name) + "'");
}

int element_rank(CurvatureKind kind)
{
    switch (kind) {
    case CurvatureKind::R1:
    case CurvatureKind::Ric: return 1;
    case CurvatureKind::R2: return 2;
    default: return 0;
    }
}

namespace {

Rational evaluate(const RankedPoset& p, CurvatureKind kind, ElementIndex x)
{
    switch (kind) {
    case CurvatureKind::R0: return r0(p, x);
    case CurvatureKind::R1: return r1(p, x);
    case CurvatureKind::R2: return r2(p, x);
    case CurvatureKind::Ric: return Rational(ric(p, x));
    case CurvatureKind::Stone: return stone_star_surface(p, x);
    case CurvatureKind::StoneGeneral: return stone_star_general(p, x);
    }
    return {};
}

} // namespace

CurvatureReport full_report(const RankedPoset& p, const std::vector<CurvatureKind>& kinds,
                            const std::optional<std::vector<ElementIndex>>& only)
{
    CurvatureReport report;
    report.means = averages(p);
    report.sufficiently_covered = sufficiently_covered_from(report.means.a1, report.means.b1);
    for (auto v : p.level(0))
        report.sum_r0 += r0(p, v);
    for (auto e : p.level(1))
        report.sum_r1 += r1(p, e);
    for (auto s : p.level(2))
        report.sum_r2 += r2(p, s);

    for (auto kind : kinds) {
        KindValues kv{kind, {}, {}, true};
        for (auto x : p.level(element_rank(kind))) {
            if (only && !std::binary_search(only->begin(), only->end(), x))
                continue;
            const auto value = evaluate(p, kind, x);
            kv.values.emplace_back(x, value);
            kv.sum += value;
            kv.all_negative = kv.all_negative && value < 0;
        }
        report.kinds.push_back(std::move(kv));
    }
    return report;
}

} // namespace rankcurv
