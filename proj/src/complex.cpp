#include "rankcurv/complex.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <queue>
#include <set>

namespace rankcurv {

namespace {

class DisjointSets {
public:
    explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

    std::size_t find(std::size_t x)
    {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }
    void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

private:
    std::vector<std::size_t> parent_;
};

[[noreturn]] void invalid_map(const std::string& condition, const std::string& detail)
{
    throw Error(ErrorKind::InvalidMap, condition + ": " + detail, condition);
}

std::string join(const std::vector<std::string>& parts, const std::string& sep)
{
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i != 0)
            out += sep;
        out += parts[i];
    }
    return out;
}

} // namespace

// ---------------------------------------------------------------------------
// Simplicial complexes

SimplicialComplex2 SimplicialComplex2::from_simplices(const std::vector<std::vector<std::string>>& simplices)
{
    std::set<std::vector<std::string>> all;
    for (auto s : simplices) {
        if (s.empty() || s.size() > 3)
            throw Error(ErrorKind::InvalidComplex,
                        "simplex with " + std::to_string(s.size()) + " vertices (need 1 to 3)");
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end())
            throw Error(ErrorKind::InvalidComplex, "simplex repeats vertex '" +
                                                       *std::adjacent_find(s.begin(), s.end()) + "'");
        const auto k = s.size();
        for (unsigned mask = 1; mask < (1U << k); ++mask) {
            std::vector<std::string> face;
            for (std::size_t i = 0; i < k; ++i)
                if (mask & (1U << i))
                    face.push_back(s[i]);
            all.insert(std::move(face));
        }
    }
    SimplicialComplex2 out;
    out.simplices_.assign(all.begin(), all.end());
    std::stable_sort(out.simplices_.begin(), out.simplices_.end(),
                     [](const auto& a, const auto& b) { return a.size() < b.size(); });
    return out;
}

RankedPoset face_poset_of_simplicial(const SimplicialComplex2& k)
{
    std::vector<std::string> names;
    std::vector<std::pair<std::string, std::string>> covers;
    for (const auto& s : k.simplices()) {
        names.push_back(join(s, ","));
        if (s.size() < 2)
            continue;
        for (std::size_t drop = 0; drop < s.size(); ++drop) {
            std::vector<std::string> face;
            for (std::size_t i = 0; i < s.size(); ++i)
                if (i != drop)
                    face.push_back(s[i]);
            covers.emplace_back(join(face, ","), names.back());
        }
    }
    return RankedPoset(Poset::build(std::move(names), covers));
}

// ---------------------------------------------------------------------------
// Polyhedral maps

PolyMap::PolyMap(const std::vector<std::vector<std::string>>& faces)
{
    if (faces.empty())
        invalid_map("connected", "map has no faces");

    std::map<std::string, std::size_t> vertex_index;
    for (const auto& face : faces) {
        std::vector<std::size_t> cycle;
        for (const auto& v : face) {
            auto [it, inserted] = vertex_index.emplace(v, vertex_names_.size());
            if (inserted)
                vertex_names_.push_back(v);
            cycle.push_back(it->second);
        }
        if (cycle.size() < 3)
            invalid_map("face-length", "face " + std::to_string(faces_.size()) + " has fewer than 3 vertices");
        auto sorted = cycle;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            invalid_map("face-repeats-vertex", "face " + std::to_string(faces_.size()) + " repeats a vertex");
        faces_.push_back(std::move(cycle));
    }

    const std::size_t nv = vertex_names_.size();
    std::map<Edge, std::size_t> edge_lookup;
    std::vector<std::vector<std::size_t>> faces_on_edge;
    for (std::size_t f = 0; f < faces_.size(); ++f) {
        const auto& cyc = faces_[f];
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            const auto u = cyc[i];
            const auto w = cyc[(i + 1) % cyc.size()];
            const Edge key{std::min(u, w), std::max(u, w)};
            auto [it, inserted] = edge_lookup.emplace(key, edges_.size());
            if (inserted) {
                edges_.push_back(key);
                faces_on_edge.emplace_back();
            }
            faces_on_edge[it->second].push_back(f);
        }
    }
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        if (faces_on_edge[e].size() != 2)
            invalid_map("edge-in-two-faces", "edge " + vertex_names_[edges_[e].first] + "-" +
                                                 vertex_names_[edges_[e].second] + " lies in " +
                                                 std::to_string(faces_on_edge[e].size()) + " face(s)");
        edge_faces_.emplace_back(faces_on_edge[e][0], faces_on_edge[e][1]);
    }

    degree_.assign(nv, 0);
    for (const auto& [u, w] : edges_) {
        ++degree_[u];
        ++degree_[w];
    }
    for (std::size_t v = 0; v < nv; ++v)
        if (degree_[v] < 3)
            invalid_map("vertex-degree", "vertex " + vertex_names_[v] + " has degree " + std::to_string(degree_[v]));

    // Link of v: nodes are the edges at v, each face through v joins its two edges at v.
    // Every node already has degree two, so the link is one cycle iff it is connected.
    {
        std::vector<std::vector<std::pair<std::size_t, std::size_t>>> joins(nv);
        for (const auto& cyc : faces_) {
            for (std::size_t i = 0; i < cyc.size(); ++i) {
                const auto v = cyc[i];
                const auto prev = cyc[(i + cyc.size() - 1) % cyc.size()];
                const auto next = cyc[(i + 1) % cyc.size()];
                joins[v].emplace_back(edge_lookup.at({std::min(v, prev), std::max(v, prev)}),
                                      edge_lookup.at({std::min(v, next), std::max(v, next)}));
            }
        }
        std::vector<std::size_t> local(edges_.size());
        for (std::size_t v = 0; v < nv; ++v) {
            std::vector<std::size_t> ids;
            for (const auto& [a, b] : joins[v]) {
                ids.push_back(a);
                ids.push_back(b);
            }
            std::sort(ids.begin(), ids.end());
            ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
            for (std::size_t k = 0; k < ids.size(); ++k)
                local[ids[k]] = k;
            DisjointSets ds(ids.size());
            for (const auto& [a, b] : joins[v])
                ds.unite(local[a], local[b]);
            for (std::size_t k = 1; k < ids.size(); ++k)
                if (ds.find(k) != ds.find(0))
                    invalid_map("vertex-link-cycle", "link of vertex " + vertex_names_[v] + " is not a single cycle");
        }
    }

    // Two faces may share one vertex, or the two ends of one common edge, nothing more.
    {
        std::vector<std::vector<std::size_t>> faces_at(nv);
        for (std::size_t f = 0; f < faces_.size(); ++f)
            for (auto v : faces_[f])
                faces_at[v].push_back(f);
        for (std::size_t f = 0; f < faces_.size(); ++f) {
            std::map<std::size_t, std::vector<std::size_t>> shared;
            for (auto v : faces_[f])
                for (auto g : faces_at[v])
                    if (g > f)
                        shared[g].push_back(v);
            for (const auto& [g, common] : shared) {
                if (common.size() == 1)
                    continue;
                bool ok = false;
                if (common.size() == 2) {
                    auto it = edge_lookup.find({std::min(common[0], common[1]), std::max(common[0], common[1])});
                    if (it != edge_lookup.end()) {
                        const auto& [f1, f2] = edge_faces_[it->second];
                        ok = (f1 == f && f2 == g) || (f1 == g && f2 == f);
                    }
                }
                if (!ok)
                    invalid_map("faces-meet-properly", "faces " + std::to_string(f) + " and " + std::to_string(g) +
                                                           " share " + std::to_string(common.size()) +
                                                           " vertices but not exactly one edge");
            }
        }
    }

    edge_lookup_ = std::move(edge_lookup);

    DisjointSets ds(nv);
    for (const auto& [u, w] : edges_)
        ds.unite(u, w);
    for (std::size_t v = 1; v < nv; ++v)
        if (ds.find(v) != ds.find(0))
            invalid_map("connected", "vertex " + vertex_names_[v] + " is not connected to " + vertex_names_[0]);
}

std::vector<std::vector<std::string>> PolyMap::face_names() const
{
    std::vector<std::vector<std::string>> out;
    for (const auto& cyc : faces_) {
        std::vector<std::string> names;
        for (auto v : cyc)
            names.push_back(vertex_names_[v]);
        out.push_back(std::move(names));
    }
    return out;
}

std::size_t PolyMap::edge_index(std::size_t u, std::size_t v) const
{
    auto it = edge_lookup_.find({std::min(u, v), std::max(u, v)});
    if (it == edge_lookup_.end())
        throw Error(ErrorKind::UnknownIdentifier, "no edge " + vertex_names_.at(u) + "-" + vertex_names_.at(v));
    return it->second;
}

std::string map_vertex_id(const PolyMap& m, std::size_t v)
{
    return "v:" + m.vertices()[v];
}

std::string map_edge_id(const PolyMap& m, std::size_t e)
{
    const auto& [u, w] = m.edges()[e];
    return "e:" + m.vertices()[u] + "|" + m.vertices()[w];
}

std::string map_face_id(std::size_t f)
{
    return "f:" + std::to_string(f);
}

RankedPoset face_poset_of_map(const PolyMap& m)
{
    std::vector<std::string> names;
    std::vector<std::pair<std::string, std::string>> covers;
    for (std::size_t v = 0; v < m.vertices().size(); ++v)
        names.push_back(map_vertex_id(m, v));
    std::map<PolyMap::Edge, std::string> edge_name;
    for (std::size_t e = 0; e < m.edges().size(); ++e) {
        names.push_back(map_edge_id(m, e));
        edge_name.emplace(m.edges()[e], names.back());
        covers.emplace_back(map_vertex_id(m, m.edges()[e].first), names.back());
        covers.emplace_back(map_vertex_id(m, m.edges()[e].second), names.back());
    }
    for (std::size_t f = 0; f < m.faces().size(); ++f) {
        names.push_back(map_face_id(f));
        const auto& cyc = m.faces()[f];
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            const auto u = cyc[i];
            const auto w = cyc[(i + 1) % cyc.size()];
            covers.emplace_back(edge_name.at({std::min(u, w), std::max(u, w)}), names.back());
        }
    }
    return RankedPoset(Poset::build(std::move(names), covers));
}

// ---------------------------------------------------------------------------
// Duality and orientation

namespace {

std::size_t position_in(const std::vector<std::size_t>& cyc, std::size_t v)
{
    return static_cast<std::size_t>(std::find(cyc.begin(), cyc.end(), v) - cyc.begin());
}

std::size_t next_in(const std::vector<std::size_t>& cyc, std::size_t pos) { return cyc[(pos + 1) % cyc.size()]; }
std::size_t prev_in(const std::vector<std::size_t>& cyc, std::size_t pos)
{
    return cyc[(pos + cyc.size() - 1) % cyc.size()];
}

std::size_t other_face(const PolyMap& m, std::size_t edge, std::size_t f)
{
    const auto& [f1, f2] = m.edge_faces(edge);
    return f1 == f ? f2 : f1;
}

} // namespace

PolyMap dual_map(const PolyMap& m)
{
    const auto& faces = m.faces();
    std::vector<std::vector<std::size_t>> faces_at(m.vertices().size());
    for (std::size_t f = 0; f < faces.size(); ++f)
        for (auto v : faces[f])
            faces_at[v].push_back(f);

    std::vector<std::vector<std::string>> dual_faces;
    for (std::size_t v = 0; v < m.vertices().size(); ++v) {
        // Walk around v: leave each face through the edge at v we did not enter by.
        const auto start = faces_at[v].front();
        auto face = start;
        auto entered_from = prev_in(faces[start], position_in(faces[start], v));
        std::vector<std::string> star;
        for (std::size_t k = 0; k < m.degree(v); ++k) {
            star.push_back("f" + std::to_string(face));
            const auto pos = position_in(faces[face], v);
            const auto exit_to =
                prev_in(faces[face], pos) == entered_from ? next_in(faces[face], pos) : prev_in(faces[face], pos);
            face = other_face(m, m.edge_index(v, exit_to), face);
            entered_from = exit_to;
        }
        dual_faces.push_back(std::move(star));
    }
    return PolyMap(dual_faces);
}

std::optional<PolyMap> coherently_oriented(const PolyMap& m)
{
    const auto& faces = m.faces();
    // +1 when face f runs u -> w along the edge, -1 when it runs w -> u.
    auto direction = [&](std::size_t f, std::size_t u, std::size_t w) {
        const auto pos = position_in(faces[f], u);
        return next_in(faces[f], pos) == w ? 1 : -1;
    };
    std::vector<int> sign(faces.size(), 0);
    std::queue<std::size_t> queue;
    sign[0] = 1;
    queue.push(0);
    while (!queue.empty()) {
        const auto f = queue.front();
        queue.pop();
        const auto& cyc = faces[f];
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            const auto u = cyc[i];
            const auto w = cyc[(i + 1) % cyc.size()];
            const auto g = other_face(m, m.edge_index(u, w), f);
            const int wanted = -sign[f] * direction(g, u, w);
            if (sign[g] == 0) {
                sign[g] = wanted;
                queue.push(g);
            } else if (sign[g] != wanted) {
                return std::nullopt;
            }
        }
    }
    auto names = m.face_names();
    for (std::size_t f = 0; f < names.size(); ++f)
        if (sign[f] < 0)
            std::reverse(names[f].begin(), names[f].end());
    return PolyMap(names);
}

namespace {

// Flags (vertex, edge, face) encoded as (face, position, direction).
class FlagSystem {
public:
    explicit FlagSystem(const PolyMap& m)
    {
        std::size_t total = 0;
        for (const auto& cyc : m.faces()) {
            offset_.push_back(total);
            total += 2 * cyc.size();
        }
        size_ = total;
        for (std::size_t f = 0; f < m.faces().size(); ++f)
            for (std::size_t i = 0; i < m.faces()[f].size(); ++i)
                for (int d = 0; d < 2; ++d)
                    decode_.push_back({f, i, d});
        moves_.resize(size_);
        for (std::size_t id = 0; id < size_; ++id) {
            const auto [f, i, d] = decode_[id];
            const auto& cyc = m.faces()[f];
            const auto len = cyc.size();
            const auto j = d == 1 ? (i + 1) % len : (i + len - 1) % len;
            moves_[id][0] = encode(f, j, 1 - d);
            moves_[id][1] = encode(f, i, 1 - d);
            const auto x = cyc[i];
            const auto y = cyc[j];
            const auto g = other_face(m, m.edge_index(x, y), f);
            const auto& other = m.faces()[g];
            const auto k = position_in(other, x);
            moves_[id][2] = encode(g, k, next_in(other, k) == y ? 1 : 0);
        }
    }

    std::size_t size() const { return size_; }

    std::vector<std::size_t> code_from(std::size_t start) const
    {
        std::vector<std::size_t> label(size_, SIZE_MAX);
        std::vector<std::size_t> order;
        label[start] = 0;
        order.push_back(start);
        for (std::size_t h = 0; h < order.size(); ++h) {
            for (int r = 0; r < 3; ++r) {
                const auto nb = moves_[order[h]][static_cast<std::size_t>(r)];
                if (label[nb] == SIZE_MAX) {
                    label[nb] = order.size();
                    order.push_back(nb);
                }
            }
        }
        std::vector<std::size_t> code;
        for (auto id : order)
            for (int r = 0; r < 3; ++r)
                code.push_back(label[moves_[id][static_cast<std::size_t>(r)]]);
        return code;
    }

private:
    struct Flag {
        std::size_t face;
        std::size_t pos;
        int dir;
    };

    std::size_t encode(std::size_t f, std::size_t i, int d) const { return offset_[f] + 2 * i + static_cast<std::size_t>(d); }

    std::size_t size_ = 0;
    std::vector<std::size_t> offset_;
    std::vector<Flag> decode_;
    std::vector<std::array<std::size_t, 3>> moves_;
};

} // namespace

bool isomorphic(const PolyMap& a, const PolyMap& b)
{
    if (a.f_vector() != b.f_vector())
        return false;
    const FlagSystem fa(a);
    const FlagSystem fb(b);
    if (fa.size() != fb.size())
        return false;
    const auto reference = fa.code_from(0);
    for (std::size_t s = 0; s < fb.size(); ++s)
        if (fb.code_from(s) == reference)
            return true;
    return false;
}

} // namespace rankcurv
