#include "helpers.hpp"

#include "rankcurv/curvature.hpp"

#include <doctest.h>

using namespace rankcurv;

namespace {

ErrorKind kind_of(const std::function<void()>& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::IOError;
}

struct Uniform {
    Rational r0, r1, r2;
    std::int64_t ric;
    Rational stone;
};

// Every element of a given rank carries the same value on these maps.
void check_uniform(const PolyMap& m, const Uniform& u)
{
    const auto p = face_poset_of_map(m);
    for (auto v : p.level(0)) {
        CHECK(r0(p, v) == u.r0);
        CHECK(stone_star_surface(p, v) == u.stone);
        CHECK(stone_star_general(p, v) == u.stone);
    }
    for (auto e : p.level(1)) {
        CHECK(r1(p, e) == u.r1);
        CHECK(ric(p, e) == u.ric);
    }
    for (auto s : p.level(2))
        CHECK(r2(p, s) == u.r2);
}

} // namespace

TEST_CASE("values on regular maps")
{
    check_uniform(tetrahedron(), {Rational(-7, 2), 4, 10, 4, 1});
    check_uniform(cube(), {Rational(-7, 2), 2, 9, 2, Rational(1, 2)});
    check_uniform(octahedron(), {-9, 2, 10, 2, Rational(2, 3)});
    check_uniform(icosahedron(), {Rational(-33, 2), 0, 10, 0, Rational(1, 3)});
    check_uniform(torus_grid(4, 5), {-9, 0, 9, 0, 0});
    check_uniform(fixture_klein_dual(), {Rational(-7, 2), -4, -6, -4, Rational(-1, 7)});
    check_uniform(klein_triangulation(), {Rational(-75, 2), -4, 10, -4, Rational(-1, 3)});
}

TEST_CASE("one-face counterexample")
{
    const auto p = fixture_fig_counterexample();
    const auto& P = p.poset();
    CHECK(r0(p, P.index_of("v")) == Rational(-7, 2));
    for (const auto* e : {"e1", "e2", "e3"}) {
        CHECK(r1(p, P.index_of(e)) == Rational(5, 2));
        CHECK(ric(p, P.index_of(e)) == 2);
    }
    CHECK(r2(p, P.index_of("sigma")) == 10);
    const auto m = averages(p);
    CHECK(m.r1 == Rational(5, 2));
    CHECK(m.a1 == 1);
    CHECK(m.b1 == 1);
    const auto sc = is_sufficiently_covered(p);
    CHECK_FALSE(sc.holds);
    CHECK(sc.lhs == Rational(-9, 2));
}

TEST_CASE("curvatures agree with the integer oracle on random posets")
{
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
        const auto p = random_ranked_poset(seed, {5, 8, 4, 0.35, 0.45});
        const auto raw = testing::to_raw(p.poset());
        for (auto v : p.level(0))
            CHECK(r0(p, v) * 2 == oracle::twice_r0(oracle::counts(raw, p.poset().name(v)).a));
        for (auto e : p.level(1)) {
            const auto c = oracle::counts(raw, p.poset().name(e));
            CHECK(r1(p, e) * 2 == oracle::twice_r1(c));
            CHECK(ric(p, e) == c.a + c.b - c.n);
        }
        for (auto s : p.level(2))
            CHECK(r2(p, s) * 2 == oracle::twice_r2(oracle::counts(raw, p.poset().name(s)).b));
    }
}

TEST_CASE("Forman curvature of map edges matches the face-list oracle")
{
    for (const auto& [name, m] : testing::surface_fixtures()) {
        CAPTURE(name);
        const auto p = face_poset_of_map(m);
        const auto faces = m.face_names();
        for (std::size_t e = 0; e < m.edges().size(); ++e) {
            const auto x = p.poset().index_of(map_edge_id(m, e));
            const auto expected = oracle::map_edge_ric(faces, m.vertices()[m.edges()[e].first],
                                                       m.vertices()[m.edges()[e].second]);
            CHECK(ric(p, x) == expected);
            CHECK(r1(p, x) == expected);
        }
    }
}

TEST_CASE("Stone curvature matches the face-list oracle")
{
    for (const auto& [name, m] : testing::surface_fixtures()) {
        CAPTURE(name);
        const auto p = face_poset_of_map(m);
        const auto faces = m.face_names();
        for (std::size_t v = 0; v < m.vertices().size(); ++v) {
            const auto x = p.poset().index_of(map_vertex_id(m, v));
            const auto o = oracle::stone_vertex(faces, m.vertices()[v]);
            CHECK(stone_star_surface(p, x) == Rational(o.num, o.den));
            CHECK(stone_star_general(p, x) == Rational(o.num, o.den));
        }
    }
}

TEST_CASE("infinite-example window")
{
    for (int k : {3, 4, 7}) {
        const auto w = fixture_fig_infinite_window(k);
        const auto& p = w.poset;
        CHECK(r0(p, w.vertex) == Rational(3, 2));
        CHECK(r1(p, w.edge) == 4);
        CHECK(r2(p, w.face) == 9);
        CHECK(ric(p, w.edge) == 2);
        CHECK(stone_star_general(p, w.vertex) == 3);
        CHECK(stone_star_surface(p, w.vertex) == 2);
        // every interior value is strictly positive
        for (auto x : w.interior) {
            const int r = p.rank_of(x);
            const auto value = r == 0 ? r0(p, x) : r == 1 ? r1(p, x) : r2(p, x);
            CHECK(value > 0);
        }
    }
}

TEST_CASE("rank preconditions")
{
    const auto p = face_poset_of_map(cube());
    const auto v = p.level(0).front();
    const auto e = p.level(1).front();
    const auto s = p.level(2).front();
    CHECK(kind_of([&] { r0(p, e); }) == ErrorKind::WrongRank);
    CHECK(kind_of([&] { r1(p, s); }) == ErrorKind::WrongRank);
    CHECK(kind_of([&] { r2(p, v); }) == ErrorKind::WrongRank);
    CHECK(kind_of([&] { ric(p, v); }) == ErrorKind::WrongRank);
    CHECK(kind_of([&] { stone_star_surface(p, e); }) == ErrorKind::WrongRank);
    CHECK(kind_of([&] { r0(p, 9999); }) == ErrorKind::UnknownIdentifier);

    const RankedPoset rank1(Poset::build({"a", "b", "c"}, {{"a", "c"}, {"b", "c"}}));
    CHECK(kind_of([&] { r0(rank1, 0); }) == ErrorKind::WrongRank);
    CHECK(kind_of([&] { averages(rank1); }) == ErrorKind::WrongRank);
    CHECK(ric(rank1, 2) == 2);  // Ric itself only needs rank 1

    const RankedPoset points(Poset::build({"a", "b"}, {}));
    CHECK(kind_of([&] { averages(points); }) == ErrorKind::EmptyLevel);
}

TEST_CASE("sufficiently covered")
{
    // with B = 2 the left side is A(A - 2)
    for (int a = 0; a <= 6; ++a) {
        const auto sc = sufficiently_covered_from(a, 2);
        CHECK(sc.lhs == a * (a - 2));
    }
    CHECK(sufficiently_covered_from(Rational(3, 2), 2).lhs == Rational(-3, 4));
    CHECK(sufficiently_covered_from(Rational(9, 4), Rational(20, 9)).holds);
    CHECK(is_sufficiently_covered(face_poset_of_map(cube())).holds);
}

TEST_CASE("curvature kinds")
{
    for (auto k : {CurvatureKind::R0, CurvatureKind::R1, CurvatureKind::R2, CurvatureKind::Ric, CurvatureKind::Stone,
                   CurvatureKind::StoneGeneral})
        CHECK(parse_curvature_kind(to_string(k)) == k);
    CHECK(kind_of([] { parse_curvature_kind("r3"); }) == ErrorKind::ParseError);
    CHECK(element_rank(CurvatureKind::Ric) == 1);
    CHECK(element_rank(CurvatureKind::Stone) == 0);
    CHECK(element_rank(CurvatureKind::R2) == 2);
}

TEST_CASE("full report")
{
    const auto p = face_poset_of_map(fixture_klein_dual());
    const auto report = full_report(p, {CurvatureKind::R0, CurvatureKind::Ric, CurvatureKind::R2});
    REQUIRE(report.kinds.size() == 3);
    for (const auto& k : report.kinds)
        CHECK(k.all_negative);
    CHECK(report.kinds[0].values.size() == 56);
    CHECK(report.kinds[1].sum == -4 * 84);
    CHECK(report.sum_r0 - report.sum_r1 + report.sum_r2 == -4);
    CHECK(report.means.r1 == -4);

    const auto c = face_poset_of_map(cube());
    const std::vector<ElementIndex> only{c.level(1)[0], c.level(1)[3]};
    const auto partial = full_report(c, {CurvatureKind::R1, CurvatureKind::R0}, only);
    CHECK(partial.kinds[0].values.size() == 2);
    CHECK(partial.kinds[1].values.empty());
    CHECK(partial.kinds[0].sum == 4);
    CHECK(partial.sum_r1 == 24);
    CHECK_FALSE(partial.kinds[0].all_negative);
}
