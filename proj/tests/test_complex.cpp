#include "helpers.hpp"

#include "rankcurv/invariants.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace rankcurv;

namespace {

using Faces = std::vector<std::vector<std::string>>;

std::string invalid_condition(const Faces& faces)
{
    try {
        PolyMap m(faces);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::InvalidMap);
        return e.witness();
    }
    return "valid";
}

Faces renamed(const Faces& faces, const std::string& suffix)
{
    Faces out = faces;
    for (auto& f : out)
        for (auto& v : f)
            v += suffix;
    return out;
}

std::string grid(int i, int j)
{
    return "(" + std::to_string(i % 3) + "," + std::to_string(j % 3) + ")";
}

} // namespace

TEST_CASE("simplicial complexes are closed under faces")
{
    const auto k = SimplicialComplex2::from_simplices({{"c", "a", "b"}});
    CHECK(k.simplices().size() == 7);
    const auto p = face_poset_of_simplicial(k);
    CHECK(f_vector(p.rank()) == std::vector<std::size_t>{3, 3, 1});
    CHECK(p.poset().contains("a,b,c"));
    CHECK(p.poset().contains("a,c"));
    CHECK(p.poset().upper_covers(p.poset().index_of("a")).size() == 2);

    const auto sphere = face_poset_of_simplicial(
        SimplicialComplex2::from_simplices({{"1", "2", "3"}, {"1", "2", "4"}, {"1", "3", "4"}, {"2", "3", "4"}}));
    CHECK(f_vector(sphere.rank()) == std::vector<std::size_t>{4, 6, 4});

    for (const Faces& bad : {Faces{{}}, Faces{{"a", "b", "c", "d"}}, Faces{{"a", "a"}}}) {
        try {
            SimplicialComplex2::from_simplices(bad);
            FAIL("expected InvalidComplex");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::InvalidComplex);
        }
    }
}

TEST_CASE("map validation names the failed condition")
{
    const auto tet = tetrahedron().face_names();
    CHECK(invalid_condition({{"a", "b"}}) == "face-length");
    CHECK(invalid_condition({{"a", "b", "a"}}) == "face-repeats-vertex");
    CHECK(invalid_condition({{"a", "b", "c"}}) == "edge-in-two-faces");
    CHECK(invalid_condition({{"a", "b", "c"}, {"a", "c", "b"}}) == "vertex-degree");
    CHECK(invalid_condition({}) == "connected");

    Faces disjoint = tet;
    for (const auto& f : renamed(tet, "'"))
        disjoint.push_back(f);
    CHECK(invalid_condition(disjoint) == "connected");

    // two tetrahedra glued at one vertex: its link is two triangles
    Faces pinched = tet;
    for (auto f : renamed(tet, "'")) {
        for (auto& v : f)
            if (v == "0'")
                v = "0";
        pinched.push_back(f);
    }
    CHECK(invalid_condition(pinched) == "vertex-link-cycle");

    // 3x3 torus with two squares merged into a hexagon that meets another
    // square in two disjoint edges
    Faces merged{{grid(0, 0), grid(1, 0), grid(2, 0), grid(2, 1), grid(1, 1), grid(0, 1)}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (!(j == 0 && i < 2))
                merged.push_back({grid(i, j), grid(i + 1, j), grid(i + 1, j + 1), grid(i, j + 1)});
    CHECK(invalid_condition(merged) == "faces-meet-properly");
}

TEST_CASE("standard surfaces")
{
    struct Expect {
        PolyMap map;
        std::vector<std::size_t> f;
        std::int64_t chi;
    };
    const std::vector<Expect> cases{
        {tetrahedron(), {4, 6, 4}, 2},
        {cube(), {8, 12, 6}, 2},
        {octahedron(), {6, 12, 8}, 2},
        {icosahedron(), {12, 30, 20}, 2},
        {torus_grid(3, 3), {9, 18, 9}, 0},
        {torus_grid(5, 4), {20, 40, 20}, 0},
        {torus_triangulated(3, 4), {12, 36, 24}, 0},
        {projective_plane6(), {6, 15, 10}, 1},
        {klein_triangulation(), {24, 84, 56}, -4},
        {fixture_klein_dual(), {56, 84, 24}, -4},
    };
    for (const auto& c : cases) {
        CHECK(c.map.f_vector() == c.f);
        CHECK(c.map.euler_characteristic() == c.chi);
        CHECK(c.map.euler_characteristic() == oracle::map_euler(c.map.face_names()));
    }
    CHECK_THROWS_AS(torus_grid(2, 5), Error);
    CHECK_THROWS_AS(torus_triangulated(3, 2), Error);
}

TEST_CASE("Klein maps are equivelar")
{
    const auto k = klein_triangulation();
    for (const auto& f : k.faces())
        CHECK(f.size() == 3);
    for (std::size_t v = 0; v < k.vertices().size(); ++v)
        CHECK(k.degree(v) == 7);

    const auto d = fixture_klein_dual();
    for (const auto& f : d.faces())
        CHECK(f.size() == 7);
    for (std::size_t v = 0; v < d.vertices().size(); ++v)
        CHECK(d.degree(v) == 3);
    CHECK(orientable(k));
}

TEST_CASE("map face posets")
{
    const auto m = cube();
    const auto p = face_poset_of_map(m);
    CHECK(f_vector(p.rank()) == std::vector<std::size_t>{8, 12, 6});
    CHECK(p.poset().name(0) == map_vertex_id(m, 0));
    CHECK(map_face_id(3) == "f:3");
    for (std::size_t e = 0; e < m.edges().size(); ++e) {
        const auto id = map_edge_id(m, e);
        CHECK(p.rank_of(p.poset().index_of(id)) == 1);
        CHECK(m.edge_index(m.edges()[e].first, m.edges()[e].second) == e);
        CHECK(m.edge_index(m.edges()[e].second, m.edges()[e].first) == e);
    }
    CHECK_THROWS_AS((void)m.edge_index(0, 7), Error);  // opposite corners
}

TEST_CASE("duals")
{
    for (const auto& [name, m] : testing::surface_fixtures()) {
        CAPTURE(name);
        const auto d = dual_map(m);
        const auto f = m.f_vector();
        CHECK(d.f_vector() == std::vector<std::size_t>{f[2], f[1], f[0]});
        CHECK(d.euler_characteristic() == m.euler_characteristic());
        CHECK(isomorphic(dual_map(d), m));
    }
    CHECK(isomorphic(dual_map(cube()), octahedron()));
    CHECK(isomorphic(dual_map(tetrahedron()), tetrahedron()));
    CHECK_FALSE(isomorphic(cube(), octahedron()));
    CHECK(isomorphic(torus_grid(3, 4), torus_grid(4, 3)));
    CHECK_FALSE(isomorphic(torus_grid(3, 4), torus_grid(3, 3)));
}

TEST_CASE("isomorphism ignores labels, starting points and orientation")
{
    Faces faces = icosahedron().face_names();
    for (auto& f : faces) {
        std::rotate(f.begin(), f.begin() + 1, f.end());
        std::reverse(f.begin(), f.end());
        for (auto& v : f)
            v = "x" + v;
    }
    std::reverse(faces.begin(), faces.end());
    CHECK(isomorphic(PolyMap(faces), icosahedron()));

    // same f-vector, different maps
    CHECK(torus_grid(3, 8).f_vector() == torus_grid(4, 6).f_vector());
    CHECK_FALSE(isomorphic(torus_grid(3, 8), torus_grid(4, 6)));
}

TEST_CASE("coherent orientation")
{
    for (const auto& [name, m] : testing::surface_fixtures()) {
        CAPTURE(name);
        const auto o = coherently_oriented(m);
        if (name == "rp2") {
            CHECK_FALSE(o.has_value());
            continue;
        }
        REQUIRE(o.has_value());
        std::set<std::pair<std::string, std::string>> darts;
        for (const auto& f : o->face_names())
            for (std::size_t i = 0; i < f.size(); ++i)
                CHECK(darts.insert({f[i], f[(i + 1) % f.size()]}).second);
        CHECK(darts.size() == 2 * m.edges().size());
    }
}

TEST_CASE("random posets")
{
    const auto a = random_ranked_poset(11, {});
    const auto b = random_ranked_poset(11, {});
    CHECK(a.poset().names() == b.poset().names());
    CHECK(a.poset().cover_pairs() == b.poset().cover_pairs());
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const auto p = random_ranked_poset(seed, {3, 5, 2, 0.3, 0.6});
        CHECK(p.max_rank() == 2);
        CHECK(f_vector(p.rank()) == std::vector<std::size_t>{3, 5, 2});
    }
    CHECK_THROWS_AS(random_ranked_poset(0, {0, 1, 1, 0.5, 0.5}), Error);
    CHECK_THROWS_AS(random_ranked_poset(0, {1, 1, 1, 1.5, 0.5}), Error);
}

TEST_CASE("random maps are polyhedral and reproducible")
{
    std::size_t non_triangles = 0;
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        RandomMapParams params;
        params.surface = seed % 2 ? SeedSurface::Torus : SeedSurface::Sphere;
        const auto m = random_map(seed, params);
        CHECK(m.face_names() == random_map(seed, params).face_names());
        CHECK(m.euler_characteristic() == (seed % 2 ? 0 : 2));
        CHECK(orientable(m));
        CHECK(is_polyhedral_map_poset(face_poset_of_map(m)).verdict);
        for (const auto& f : m.faces())
            non_triangles += f.size() > 3;
    }
    CHECK(non_triangles > 0);
    RandomMapParams bad;
    bad.flips = -1;
    CHECK_THROWS_AS(random_map(0, bad), Error);
}

TEST_CASE("infinite-example window")
{
    CHECK_THROWS_AS(fixture_fig_infinite_window(2), Error);
    for (int k : {3, 4, 6}) {
        const auto w = fixture_fig_infinite_window(k);
        CHECK(w.poset.max_rank() == 2);
        CHECK(w.is_interior(w.vertex));
        CHECK(w.is_interior(w.edge));
        CHECK(w.is_interior(w.face));
        CHECK(std::is_sorted(w.interior.begin(), w.interior.end()));
        const auto& P = w.poset.poset();
        // the truncated spine ends and their neighbours are excluded
        for (const auto* id : {"g0", "x0", "g0:v0"})
            CHECK_FALSE(w.is_interior(P.index_of(id)));
        const auto last = "g" + std::to_string(2 * k);
        CHECK_FALSE(w.is_interior(P.index_of(last)));
        CHECK(w.interior.size() < P.size());
    }
}

TEST_CASE("fixture registry")
{
    for (const auto& name : fixture_names()) {
        CAPTURE(name);
        const auto f = load_fixture(name);
        CHECK(f.name == name);
        CHECK(f.poset.max_rank() == 2);
    }
    CHECK(f_vector(load_fixture("torus:4x4").poset.rank()) == std::vector<std::size_t>{16, 32, 16});
    CHECK(load_fixture("torus").name == "torus:3x3");
    CHECK(load_fixture("fig-infinite").window.has_value());
    CHECK(load_fixture("cube").map.has_value());
    CHECK_FALSE(load_fixture("fig-counterexample").map.has_value());

    auto kind = [](const char* name) {
        try {
            load_fixture(name);
        } catch (const Error& e) {
            return e.kind();
        }
        return ErrorKind::IOError;
    };
    CHECK(kind("dodecahedron") == ErrorKind::ParseError);
    CHECK(kind("torus:4") == ErrorKind::ParseError);
    CHECK(kind("torus:axb") == ErrorKind::ParseError);
    CHECK(kind("cube:3") == ErrorKind::ParseError);
    CHECK(kind("torus:2x4") == ErrorKind::ParameterOutOfRange);
    CHECK(kind("fig-infinite:2") == ErrorKind::ParameterOutOfRange);
}
