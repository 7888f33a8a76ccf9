#include "rankcurv/fixtures.hpp"

#include <charconv>

namespace rankcurv {

namespace {

int parse_count(std::string_view text, std::string_view whole)
{
    int value = 0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end || text.empty())
        throw Error(ErrorKind::ParseError, "bad parameter in fixture name '" + std::string(whole) + "'");
    return value;
}

Fixture from_map(std::string name, PolyMap m)
{
    Fixture f{std::move(name), face_poset_of_map(m), std::move(m), std::nullopt};
    return f;
}

} // namespace

Fixture load_fixture(std::string_view name)
{
    const auto colon = name.find(':');
    const auto family = name.substr(0, colon);
    const auto arg = colon == std::string_view::npos ? std::string_view{} : name.substr(colon + 1);
    const bool has_arg = colon != std::string_view::npos;

    if (family == "tetrahedron" && !has_arg)
        return from_map("tetrahedron", tetrahedron());
    if (family == "cube" && !has_arg)
        return from_map("cube", cube());
    if (family == "icosahedron" && !has_arg)
        return from_map("icosahedron", icosahedron());
    if (family == "klein-dual" && !has_arg)
        return from_map("klein-dual", fixture_klein_dual());
    if (family == "torus") {
        int m = 3, n = 3;
        if (has_arg) {
            const auto x = arg.find('x');
            if (x == std::string_view::npos)
                throw Error(ErrorKind::ParseError, "torus fixture needs the form torus:MxN");
            m = parse_count(arg.substr(0, x), name);
            n = parse_count(arg.substr(x + 1), name);
        }
        return from_map("torus:" + std::to_string(m) + "x" + std::to_string(n), torus_grid(m, n));
    }
    if (family == "fig-infinite") {
        const int k = has_arg ? parse_count(arg, name) : 4;
        auto w = fixture_fig_infinite_window(k);
        Fixture f{"fig-infinite:" + std::to_string(k), w.poset, std::nullopt, std::move(w)};
        return f;
    }
    if (family == "fig-counterexample" && !has_arg)
        return {"fig-counterexample", fixture_fig_counterexample(), std::nullopt, std::nullopt};
    if (family == "fig-ap-noncw" && !has_arg)
        return {"fig-ap-noncw", fixture_noncw_almost_polyhedral(), std::nullopt, std::nullopt};
    if (family == "fig-cw-nonap" && !has_arg)
        return {"fig-cw-nonap", fixture_cw_not_almost_polyhedral(), std::nullopt, std::nullopt};
    throw Error(ErrorKind::ParseError, "unknown fixture '" + std::string(name) + "'", std::string(name));
}

const std::vector<std::string>& fixture_names()
{
    static const std::vector<std::string> names = {
        "tetrahedron",   "cube",           "icosahedron",  "torus:3x3",    "torus:5x4",
        "fig-counterexample", "fig-infinite:4", "fig-ap-noncw", "fig-cw-nonap", "klein-dual",
    };
    return names;
}

} // namespace rankcurv
