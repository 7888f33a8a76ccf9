#include "helpers.hpp"

#include "rankcurv/poset.hpp"

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
    FAIL("no error thrown");
    return ErrorKind::ParseError;
}

// diamond: a < b, c < d
Poset diamond()
{
    return Poset::build({"a", "b", "c", "d"}, {{"a", "b"}, {"a", "c"}, {"b", "d"}, {"c", "d"}});
}

} // namespace

TEST_CASE("build rejects malformed Hasse diagrams")
{
    CHECK(kind_of([] { Poset::build({"a", "a"}, {}); }) == ErrorKind::DuplicateElement);
    CHECK(kind_of([] { Poset::build({"a"}, {{"a", "z"}}); }) == ErrorKind::UnknownIdentifier);
    CHECK(kind_of([] { Poset::build({"a"}, {{"a", "a"}}); }) == ErrorKind::SelfCover);
    CHECK(kind_of([] { Poset::build({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"c", "a"}}); }) ==
          ErrorKind::CycleDetected);
    CHECK(kind_of([] { Poset::build({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}}); }) ==
          ErrorKind::NotACover);
}

TEST_CASE("transitively redundant pair names the pair")
{
    try {
        Poset::build({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}});
        FAIL("expected NotACover");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotACover);
        CHECK(e.witness() == "a<c");
    }
}

TEST_CASE("repeated cover pairs collapse")
{
    const auto p = Poset::build({"a", "b"}, {{"a", "b"}, {"a", "b"}});
    CHECK(p.upper_covers(0).size() == 1);
    CHECK(p.cover_pairs().size() == 1);
}

TEST_CASE("order relation and covers")
{
    const auto p = diamond();
    CHECK(p.less(p.index_of("a"), p.index_of("d")));
    CHECK_FALSE(p.less(p.index_of("b"), p.index_of("c")));
    CHECK_FALSE(p.less(p.index_of("d"), p.index_of("a")));
    CHECK(p.less_equal(1, 1));
    CHECK(p.above(0).count() == 3);
    CHECK(p.below(3).count() == 3);
    CHECK(p.upper_covers(p.index_of("a")) == std::vector<ElementIndex>{1, 2});
    CHECK(Poset::is_covering_finite());
    CHECK(kind_of([&] { (void)p.index_of("zz"); }) == ErrorKind::UnknownIdentifier);

    // every element appears after its lower covers
    std::vector<std::size_t> pos(p.size());
    for (std::size_t i = 0; i < p.topological_order().size(); ++i)
        pos[p.topological_order()[i]] = i;
    for (const auto& [lo, hi] : p.cover_pairs())
        CHECK(pos[lo] < pos[hi]);
}

TEST_CASE("rank function, levels and f-vector")
{
    const auto p = diamond();
    const auto rf = compute_rank(p);
    CHECK(rf.ranks() == std::vector<int>{0, 1, 1, 2});
    CHECK(rf.max_rank() == 2);
    CHECK(f_vector(rf) == std::vector<std::size_t>{1, 2, 1});
    CHECK(rf.level(1) == std::vector<ElementIndex>{1, 2});
    CHECK(rf.level(7).empty());
    CHECK(level_sets(p, rf).size() == 3);
    CHECK(compute_rank(p).ranks() == rf.ranks());
    CHECK(compute_rank(Poset{}).max_rank() == 0);
}

TEST_CASE("NotRanked carries the conflicting element")
{
    // c covers b (rank 1) and d (rank 0)
    const auto p = Poset::build({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"d", "c"}});
    try {
        compute_rank(p);
        FAIL("expected NotRanked");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotRanked);
        CHECK(e.witness() == "c");
    }
}

TEST_CASE("rank agrees with the longest-path oracle on random posets")
{
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const auto p = random_ranked_poset(seed, {});
        const auto raw = testing::to_raw(p.poset());
        REQUIRE(oracle::is_ranked(raw));
        for (ElementIndex x = 0; x < p.poset().size(); ++x)
            CHECK(p.rank_of(x) == oracle::rank(raw, p.poset().name(x)));
    }
}

TEST_CASE("local counts on the diamond")
{
    const auto p = diamond();
    const auto rf = compute_rank(p);
    // b: one upper cover d with two lower covers, one lower cover a with two upper covers
    const auto b = local_counts(p, rf, "b");
    CHECK(b == LocalCounts{1, 1, 2, 2, 0});
    const auto a = local_counts(p, rf, "a");
    CHECK(a == LocalCounts{2, 0, 2, 0, 0});
    const auto d = local_counts(p, rf, "d");
    CHECK(d == LocalCounts{0, 2, 0, 2, 0});
}

TEST_CASE("parallel neighbours exclude the element itself")
{
    // v has an upper cover but no lower cover; it must not count as its own neighbour
    const auto p = Poset::build({"v", "w", "e", "f"}, {{"v", "e"}, {"w", "e"}, {"w", "f"}});
    const auto rf = compute_rank(p);
    const auto pn = parallel_neighbors(p, rf, "v");
    CHECK(pn.coface_set == std::vector<ElementIndex>{p.index_of("w")});
    CHECK(pn.face_set.empty());
    CHECK(pn.n == 1);
    CHECK(parallel_neighbors(p, rf, "f").n == 1);
    for (ElementIndex x = 0; x < p.size(); ++x) {
        const auto q = parallel_neighbors(p, rf, x);
        CHECK(std::find(q.coface_set.begin(), q.coface_set.end(), x) == q.coface_set.end());
        CHECK(std::find(q.face_set.begin(), q.face_set.end(), x) == q.face_set.end());
    }
}

TEST_CASE("local counts match the brute-force oracle")
{
    for (std::uint64_t seed = 100; seed < 160; ++seed) {
        const auto p = random_ranked_poset(seed, {5, 7, 4, 0.5, 0.5});
        const auto raw = testing::to_raw(p.poset());
        for (ElementIndex x = 0; x < p.poset().size(); ++x) {
            const auto c = local_counts(p.poset(), p.rank(), x);
            const auto o = oracle::counts(raw, p.poset().name(x));
            CHECK(c.a == o.a);
            CHECK(c.b == o.b);
            CHECK(c.u == o.u);
            CHECK(c.d == o.d);
            CHECK(c.n == o.n);
            // counts are non-negative, u vanishes with a, d vanishes with b
            CHECK(c.n >= 0);
            if (c.a == 0)
                CHECK(c.u == 0);
            if (c.b == 0)
                CHECK(c.d == 0);
        }
    }
}

TEST_CASE("N at an edge of an almost polyhedral poset follows the face and vertex sums")
{
    for (const auto& [name, m] : testing::surface_fixtures()) {
        CAPTURE(name);
        const auto p = face_poset_of_map(m);
        const auto& P = p.poset();
        for (auto e : p.level(1)) {
            const auto c = local_counts(P, p.rank(), e);
            std::int64_t expected = 0;
            for (auto s : P.upper_covers(e))
                expected += static_cast<std::int64_t>(P.lower_covers(s).size()) - 3;
            for (auto v : P.lower_covers(e))
                expected += static_cast<std::int64_t>(P.upper_covers(v).size()) - c.a - 1;
            CHECK(c.n == expected);
        }
    }
}

TEST_CASE("counting identities hold at every rank")
{
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const auto p = random_ranked_poset(seed, {6, 9, 5, 0.45, 0.35});
        for (int i = -1; i <= 3; ++i)
            CHECK(verify_counting_identities(p.poset(), p.rank(), i).all_hold());
    }
    const auto d = diamond();
    const auto ids = verify_counting_identities(d, compute_rank(d), 1);
    REQUIRE(ids.checks.size() == 3);
    CHECK(ids.checks[0].lhs == 2);  // sum A_1
    CHECK(ids.checks[1].lhs == 4);  // sum U_1 = B_2(d)^2
    CHECK(ids.checks[2].rhs == 4);  // A_0(a)^2
}

TEST_CASE("interval cardinality")
{
    const auto p = diamond();
    CHECK(interval_cardinality(p, "a", "d") == 4);
    CHECK(interval_cardinality(p, "a", "b") == 2);
    CHECK(interval_cardinality(p, "b", "b") == 1);
    CHECK(kind_of([&] { interval_cardinality(p, "b", "c"); }) == ErrorKind::NotComparable);

    const auto q = random_ranked_poset(5, {});
    const auto raw = testing::to_raw(q.poset());
    for (ElementIndex a = 0; a < q.poset().size(); ++a)
        for (ElementIndex b = 0; b < q.poset().size(); ++b)
            if (q.poset().less_equal(a, b))
                CHECK(interval_cardinality(q.poset(), a, b) ==
                      oracle::interval(raw, q.poset().name(a), q.poset().name(b)));
}
