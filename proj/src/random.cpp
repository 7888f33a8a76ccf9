#include "rankcurv/complex.hpp"

#include "rng.hpp"

#include <algorithm>

namespace rankcurv {

RankedPoset random_ranked_poset(std::uint64_t seed, const RandomPosetParams& params)
{
    if (params.n0 < 1 || params.n1 < 1 || params.n2 < 1)
        throw Error(ErrorKind::ParameterOutOfRange, "level sizes must be >= 1");
    if (!(params.lower_density >= 0.0 && params.lower_density <= 1.0) ||
        !(params.upper_density >= 0.0 && params.upper_density <= 1.0))
        throw Error(ErrorKind::ParameterOutOfRange, "densities must lie in [0, 1]");

    detail::Rng rng(seed);
    std::vector<std::string> names;
    for (int i = 0; i < params.n0; ++i)
        names.push_back("v" + std::to_string(i));
    for (int i = 0; i < params.n1; ++i)
        names.push_back("e" + std::to_string(i));
    for (int i = 0; i < params.n2; ++i)
        names.push_back("f" + std::to_string(i));

    std::vector<std::pair<std::string, std::string>> covers;
    // Each upper element covers every lower one independently, and at least one.
    auto connect = [&](const std::string& lo_prefix, int lo_count, const std::string& hi_prefix, int hi_count,
                       double density) {
        for (int hi = 0; hi < hi_count; ++hi) {
            bool any = false;
            for (int lo = 0; lo < lo_count; ++lo) {
                if (rng.chance(density)) {
                    covers.emplace_back(lo_prefix + std::to_string(lo), hi_prefix + std::to_string(hi));
                    any = true;
                }
            }
            if (!any)
                covers.emplace_back(lo_prefix + std::to_string(rng.below(static_cast<std::uint64_t>(lo_count))),
                                    hi_prefix + std::to_string(hi));
        }
    };
    connect("v", params.n0, "e", params.n1, params.lower_density);
    connect("e", params.n1, "f", params.n2, params.upper_density);
    return RankedPoset(Poset::build(std::move(names), covers));
}

namespace {

using Faces = std::vector<std::vector<std::string>>;

// Rotate `face` so that it starts with the directed edge a -> b; false if absent.
bool rotate_to(std::vector<std::string>& face, const std::string& a, const std::string& b)
{
    const auto n = face.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (face[i] == a && face[(i + 1) % n] == b) {
            std::rotate(face.begin(), face.begin() + static_cast<std::ptrdiff_t>(i), face.end());
            return true;
        }
    }
    return false;
}

std::optional<PolyMap> try_build(const Faces& faces)
{
    try {
        return PolyMap(faces);
    } catch (const Error&) {
        return std::nullopt;
    }
}

} // namespace

PolyMap random_map(std::uint64_t seed, const RandomMapParams& params)
{
    if (params.insertions < 0 || params.flips < 0 || params.merges < 0)
        throw Error(ErrorKind::ParameterOutOfRange, "operation counts must be >= 0");

    detail::Rng rng(seed);
    const PolyMap seed_map =
        params.surface == SeedSurface::Sphere ? tetrahedron() : *coherently_oriented(torus_triangulated(3, 3));
    PolyMap map = *coherently_oriented(seed_map);
    Faces faces = map.face_names();
    int fresh = 0;

    // Edge endpoints as (a, b) with face f1 running a -> b; returns the two face indices.
    auto pick_edge = [&](std::string& a, std::string& b, std::size_t& f1, std::size_t& f2) {
        const auto e = rng.below(map.edges().size());
        a = map.vertices()[map.edges()[e].first];
        b = map.vertices()[map.edges()[e].second];
        std::tie(f1, f2) = map.edge_faces(e);
        auto probe = faces[f1];
        if (!rotate_to(probe, a, b))
            std::swap(a, b);
    };

    int insertions = params.insertions;
    int flips = params.flips;
    while (insertions + flips > 0) {
        const bool insert = rng.below(static_cast<std::uint64_t>(insertions + flips)) <
                            static_cast<std::uint64_t>(insertions);
        if (insert) {
            --insertions;
            const auto f = rng.below(faces.size());
            if (faces[f].size() != 3)
                continue;
            const auto tri = faces[f];
            const auto c = "n" + std::to_string(fresh++);
            faces[f] = {tri[0], tri[1], c};
            faces.push_back({tri[1], tri[2], c});
            faces.push_back({tri[2], tri[0], c});
            map = PolyMap(faces);
        } else {
            --flips;
            std::string a, b;
            std::size_t f1 = 0, f2 = 0;
            pick_edge(a, b, f1, f2);
            auto t1 = faces[f1];
            auto t2 = faces[f2];
            if (t1.size() != 3 || t2.size() != 3 || !rotate_to(t1, a, b) || !rotate_to(t2, b, a))
                continue;
            // (a, b, c) and (b, a, d) become (b, c, d) and (c, a, d).
            const auto& c = t1[2];
            const auto& d = t2[2];
            Faces next = faces;
            next[f1] = {b, c, d};
            next[f2] = {c, a, d};
            if (auto built = try_build(next)) {
                faces = std::move(next);
                map = std::move(*built);
            }
        }
    }

    for (int k = 0; k < params.merges; ++k) {
        std::string a, b;
        std::size_t f1 = 0, f2 = 0;
        pick_edge(a, b, f1, f2);
        auto p = faces[f1];
        auto q = faces[f2];
        if (!rotate_to(p, a, b) || !rotate_to(q, b, a))
            continue;
        // p = a b p.., q = b a q..; the merged face is b p.. a q..
        std::vector<std::string> merged(p.begin() + 1, p.end());
        merged.push_back(a);
        merged.insert(merged.end(), q.begin() + 2, q.end());
        Faces next;
        for (std::size_t f = 0; f < faces.size(); ++f)
            if (f != f1 && f != f2)
                next.push_back(faces[f]);
        next.push_back(std::move(merged));
        if (auto built = try_build(next)) {
            faces = std::move(next);
            map = std::move(*built);
        }
    }
    return map;
}

} // namespace rankcurv
