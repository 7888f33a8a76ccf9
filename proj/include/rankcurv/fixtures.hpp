#pragma once

#include "rankcurv/complex.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rankcurv {

/// A named example. `map` is set for surface fixtures, `window` for the finite
/// piece of the infinite example.
struct Fixture {
    std::string name;
    RankedPoset poset;
    std::optional<PolyMap> map;
    std::optional<Window> window;
};

/// Names: tetrahedron, cube, icosahedron, torus:MxN, fig-counterexample,
/// fig-infinite:K, fig-ap-noncw, fig-cw-nonap, klein-dual. "torus" and
/// "fig-infinite" alone mean torus:3x3 and fig-infinite:4.
/// Unknown names throw ParseError; bad parameters throw ParameterOutOfRange.
Fixture load_fixture(std::string_view name);

/// One instance of every fixture family.
const std::vector<std::string>& fixture_names();

} // namespace rankcurv
