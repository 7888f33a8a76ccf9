#pragma once

#include "oracles.hpp"
#include "rankcurv/complex.hpp"
#include "rankcurv/fixtures.hpp"

#include <string>
#include <utility>
#include <vector>

namespace testing {

inline oracle::Raw to_raw(const rankcurv::Poset& p)
{
    oracle::Raw raw;
    raw.elements = p.names();
    for (const auto& [lo, hi] : p.cover_pairs())
        raw.covers.emplace_back(p.name(lo), p.name(hi));
    return raw;
}

inline std::vector<std::pair<std::string, rankcurv::PolyMap>> surface_fixtures()
{
    using namespace rankcurv;
    return {
        {"tetrahedron", tetrahedron()},
        {"cube", cube()},
        {"octahedron", octahedron()},
        {"icosahedron", icosahedron()},
        {"torus:3x3", torus_grid(3, 3)},
        {"torus:5x4", torus_grid(5, 4)},
        {"torus-tri:3x4", torus_triangulated(3, 4)},
        {"rp2", projective_plane6()},
        {"klein", klein_triangulation()},
        {"klein-dual", fixture_klein_dual()},
    };
}

} // namespace testing
