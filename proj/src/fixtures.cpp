#include "rankcurv/complex.hpp"

#include <algorithm>
#include <queue>

namespace rankcurv {

namespace {

using Covers = std::vector<std::pair<std::string, std::string>>;

} // namespace

bool Window::is_interior(ElementIndex i) const
{
    return std::binary_search(interior.begin(), interior.end(), i);
}

// One vertex v, three edges over v, one face over all three edges.
RankedPoset fixture_fig_counterexample()
{
    return RankedPoset(Poset::build({"v", "e1", "e2", "e3", "sigma"},
                                    {{"v", "e1"},
                                     {"v", "e2"},
                                     {"v", "e3"},
                                     {"e1", "sigma"},
                                     {"e2", "sigma"},
                                     {"e3", "sigma"}}));
}

// Periodic pattern, unit j (spine indices 2j and 2j+1):
//   spine edges g<i>, each over two private vertices g<i>:v0, g<i>:v1;
//   spine faces x<i> over g<i> and g<i+1>;
//   hexagon h<j> over g<2j> and five edges h<j>:e0..e4, each over six private vertices.
// The window keeps g0..g<2k>, x0..x<2k-1> and h0..h<k-1>; g0 and g<2k> lose covers.
Window fixture_fig_infinite_window(int k)
{
    if (k < 3)
        throw Error(ErrorKind::ParameterOutOfRange, "window needs at least 3 repetitions");

    const int spine = 2 * k;
    std::vector<std::string> vertices, edges, faces;
    Covers covers;
    auto g = [](int i) { return "g" + std::to_string(i); };
    auto x = [](int i) { return "x" + std::to_string(i); };
    auto h = [](int j) { return "h" + std::to_string(j); };

    for (int i = 0; i <= spine; ++i) {
        edges.push_back(g(i));
        for (int s = 0; s < 2; ++s) {
            vertices.push_back(g(i) + ":v" + std::to_string(s));
            covers.emplace_back(vertices.back(), g(i));
        }
    }
    for (int i = 0; i < spine; ++i) {
        faces.push_back(x(i));
        covers.emplace_back(g(i), x(i));
        covers.emplace_back(g(i + 1), x(i));
    }
    for (int j = 0; j < k; ++j) {
        faces.push_back(h(j));
        covers.emplace_back(g(2 * j), h(j));
        for (int t = 0; t < 5; ++t) {
            const auto e = h(j) + ":e" + std::to_string(t);
            edges.push_back(e);
            covers.emplace_back(e, h(j));
            for (int s = 0; s < 6; ++s) {
                vertices.push_back(e + ":v" + std::to_string(s));
                covers.emplace_back(vertices.back(), e);
            }
        }
    }

    std::vector<std::string> names = vertices;
    names.insert(names.end(), edges.begin(), edges.end());
    names.insert(names.end(), faces.begin(), faces.end());

    Window w{RankedPoset(Poset::build(std::move(names), covers)), {}, 0, 0, 0};
    const auto& p = w.poset.poset();

    std::vector<int> dist(p.size(), -1);
    std::queue<ElementIndex> queue;
    for (auto id : {g(0), g(spine)}) {
        const auto i = p.index_of(id);
        dist[i] = 0;
        queue.push(i);
    }
    while (!queue.empty()) {
        const auto i = queue.front();
        queue.pop();
        for (const auto* nbrs : {&p.upper_covers(i), &p.lower_covers(i)})
            for (auto nb : *nbrs)
                if (dist[nb] < 0) {
                    dist[nb] = dist[i] + 1;
                    queue.push(nb);
                }
    }
    for (ElementIndex i = 0; i < p.size(); ++i)
        if (dist[i] < 0 || dist[i] >= 2)
            w.interior.push_back(i);

    const int mid = k / 2;
    w.vertex = p.index_of(g(2 * mid + 1) + ":v0");
    w.edge = p.index_of(h(mid) + ":e0");
    w.face = p.index_of(x(2 * mid));
    return w;
}

PolyMap fixture_klein_dual()
{
    return dual_map(klein_triangulation());
}

// A face m whose boundary is two disjoint triangles.
RankedPoset fixture_noncw_almost_polyhedral()
{
    std::vector<std::string> names{"p1", "p2", "p3", "p4", "p5", "p6"};
    Covers covers;
    const std::vector<std::pair<int, int>> edges{{1, 2}, {2, 3}, {3, 1}, {4, 5}, {5, 6}, {6, 4}};
    for (const auto& [a, b] : edges) {
        const auto e = "p" + std::to_string(a) + "p" + std::to_string(b);
        names.push_back(e);
        covers.emplace_back("p" + std::to_string(a), e);
        covers.emplace_back("p" + std::to_string(b), e);
        covers.emplace_back(e, "m");
    }
    names.push_back("m");
    return RankedPoset(Poset::build(std::move(names), covers));
}

// Two vertices, two edges each joining both, one disk glued along both edges.
RankedPoset fixture_cw_not_almost_polyhedral()
{
    return RankedPoset(Poset::build({"u", "w", "a", "b", "disk"},
                                    {{"u", "a"}, {"w", "a"}, {"u", "b"}, {"w", "b"}, {"a", "disk"}, {"b", "disk"}}));
}

} // namespace rankcurv
