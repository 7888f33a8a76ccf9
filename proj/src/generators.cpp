#include "rankcurv/complex.hpp"

#include <array>
#include <map>
#include <set>

namespace rankcurv {

namespace {

using Faces = std::vector<std::vector<std::string>>;

Faces numbered(const std::vector<std::vector<int>>& faces)
{
    Faces out;
    for (const auto& f : faces) {
        std::vector<std::string> names;
        for (int v : f)
            names.push_back(std::to_string(v));
        out.push_back(std::move(names));
    }
    return out;
}

std::string grid_vertex(int i, int j)
{
    return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

} // namespace

PolyMap tetrahedron()
{
    return PolyMap(numbered({{0, 1, 2}, {0, 2, 3}, {0, 3, 1}, {1, 3, 2}}));
}

PolyMap cube()
{
    // Vertex bits are (x, y, z).
    return PolyMap(numbered({{0, 2, 3, 1}, {4, 5, 7, 6}, {0, 1, 5, 4}, {2, 6, 7, 3}, {0, 4, 6, 2}, {1, 3, 7, 5}}));
}

PolyMap octahedron()
{
    return PolyMap(numbered({{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 1}, {5, 2, 1}, {5, 3, 2}, {5, 4, 3}, {5, 1, 4}}));
}

PolyMap icosahedron()
{
    // Apex 0, upper ring 1..5, lower ring 6..10 (6+k sits between 1+k and 1+(k+1)), apex 11.
    std::vector<std::vector<int>> faces;
    for (int k = 0; k < 5; ++k) {
        const int u = 1 + k, un = 1 + (k + 1) % 5;
        const int l = 6 + k, ln = 6 + (k + 1) % 5;
        faces.push_back({0, u, un});
        faces.push_back({u, l, un});
        faces.push_back({un, l, ln});
        faces.push_back({11, ln, l});
    }
    return PolyMap(numbered(faces));
}

PolyMap torus_grid(int m, int n)
{
    if (m < 3 || n < 3)
        throw Error(ErrorKind::ParameterOutOfRange, "torus grid needs m, n >= 3");
    Faces faces;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j)
            faces.push_back({grid_vertex(i, j), grid_vertex((i + 1) % m, j), grid_vertex((i + 1) % m, (j + 1) % n),
                             grid_vertex(i, (j + 1) % n)});
    return PolyMap(faces);
}

PolyMap torus_triangulated(int m, int n)
{
    if (m < 3 || n < 3)
        throw Error(ErrorKind::ParameterOutOfRange, "triangulated torus needs m, n >= 3");
    Faces faces;
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) {
            const auto a = grid_vertex(i, j);
            const auto b = grid_vertex((i + 1) % m, j);
            const auto c = grid_vertex((i + 1) % m, (j + 1) % n);
            const auto d = grid_vertex(i, (j + 1) % n);
            faces.push_back({a, b, c});
            faces.push_back({a, c, d});
        }
    }
    return PolyMap(faces);
}

PolyMap projective_plane6()
{
    return PolyMap(numbered({{1, 2, 3},
                             {1, 3, 4},
                             {1, 4, 5},
                             {1, 5, 6},
                             {1, 6, 2},
                             {2, 3, 5},
                             {3, 4, 6},
                             {4, 5, 2},
                             {5, 6, 3},
                             {6, 2, 4}}));
}

// ---------------------------------------------------------------------------
// Klein's map from PSL(2,7)

namespace {

constexpr int kMod = 7;

struct Mat {
    std::array<int, 4> e{};  // a b / c d, entries mod 7, sign-normalised

    bool operator<(const Mat& o) const { return e < o.e; }
    bool operator==(const Mat& o) const { return e == o.e; }
};

// Representative of {M, -M}: first nonzero entry in 1..3.
Mat normalise(std::array<int, 4> e)
{
    for (auto& x : e)
        x = ((x % kMod) + kMod) % kMod;
    for (int x : e) {
        if (x == 0)
            continue;
        if (x > 3)
            for (auto& y : e)
                y = (kMod - y) % kMod;
        break;
    }
    return Mat{e};
}

Mat operator*(const Mat& p, const Mat& q)
{
    const auto& a = p.e;
    const auto& b = q.e;
    return normalise({a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2],
                      a[2] * b[1] + a[3] * b[3]});
}

int order(const Mat& g)
{
    const Mat identity = normalise({1, 0, 0, 1});
    Mat x = g;
    int k = 1;
    while (!(x == identity)) {
        x = x * g;
        ++k;
    }
    return k;
}

} // namespace

PolyMap klein_triangulation()
{
    // Darts are group elements; s (order 7) rotates around a vertex, t (order 2)
    // reverses an edge, and t*s (order 3) walks around a triangle.
    const Mat s = normalise({1, 1, 0, 1});
    std::vector<Mat> elements;
    for (int a = 0; a < kMod; ++a)
        for (int b = 0; b < kMod; ++b)
            for (int c = 0; c < kMod; ++c)
                for (int d = 0; d < kMod; ++d)
                    if (((a * d - b * c) % kMod + kMod) % kMod == 1) {
                        auto m = normalise({a, b, c, d});
                        if (m.e == std::array<int, 4>{a, b, c, d})
                            elements.push_back(m);
                    }

    std::optional<Mat> t;
    for (const auto& cand : elements) {
        if (order(cand) == 2 && order(s * cand) == 3) {
            t = cand;
            break;
        }
    }
    if (!t)
        throw Error(ErrorKind::InvalidMap, "no (2,3,7) generating pair found in PSL(2,7)");

    std::map<Mat, std::size_t> index;
    std::vector<Mat> group{normalise({1, 0, 0, 1})};
    index.emplace(group.front(), 0);
    for (std::size_t h = 0; h < group.size(); ++h) {
        for (const auto& gen : {s, *t}) {
            const auto next = group[h] * gen;
            if (index.emplace(next, group.size()).second)
                group.push_back(next);
        }
    }
    if (group.size() != 168)
        throw Error(ErrorKind::InvalidMap, "generators span " + std::to_string(group.size()) + " elements, not 168");

    // Vertex of a dart: its right coset of <s>.
    std::vector<std::size_t> vertex_of(group.size(), SIZE_MAX);
    std::size_t vertex_count = 0;
    for (std::size_t g = 0; g < group.size(); ++g) {
        if (vertex_of[g] != SIZE_MAX)
            continue;
        Mat x = group[g];
        for (int k = 0; k < 7; ++k) {
            vertex_of[index.at(x)] = vertex_count;
            x = x * s;
        }
        ++vertex_count;
    }

    const Mat step = *t * s;
    std::vector<bool> seen(group.size(), false);
    Faces faces;
    for (std::size_t g = 0; g < group.size(); ++g) {
        if (seen[g])
            continue;
        std::vector<std::string> tri;
        Mat x = group[g];
        for (int k = 0; k < 3; ++k) {
            const auto id = index.at(x);
            seen[id] = true;
            tri.push_back("k" + std::to_string(vertex_of[id]));
            x = x * step;
        }
        faces.push_back(std::move(tri));
    }
    return PolyMap(faces);
}

} // namespace rankcurv
