#include "cli.hpp"

#include "rankcurv/fixtures.hpp"
#include "rankcurv/io.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

namespace rankcurv::cli {

namespace {

enum Exit { Ok = 0, IoFailure = 1, ParseFailure = 2, NotRankedExit = 3, DomainFailure = 4, VerdictFails = 5 };

int exit_code(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::IOError: return IoFailure;
    case ErrorKind::ParseError: return ParseFailure;
    case ErrorKind::NotRanked: return NotRankedExit;
    default: return DomainFailure;
    }
}

struct Common {
    std::string input;
    std::string fixture;
    std::string format;
    std::string output;
    std::string emit = "json";
};

struct Loaded {
    Poset poset;
    std::optional<PolyMap> map;
    std::optional<Window> window;
};

void add_common(CLI::App* sub, Common& c)
{
    auto* in = sub->add_option("--input", c.input, "JSON file with a poset, map or simplicial complex");
    auto* fx = sub->add_option("--fixture", c.fixture, "built-in example, e.g. cube or torus:4x4");
    in->excludes(fx);
    fx->excludes(in);
    sub->add_option("--format", c.format, "input format")->check(CLI::IsMember({"poset", "map", "simplicial"}));
    sub->add_option("--output", c.output, "write here instead of stdout");
    sub->add_option("--emit", c.emit, "output format")->check(CLI::IsMember({"json", "csv"}));
}

Loaded load(const Common& c)
{
    if (c.input.empty() == c.fixture.empty())
        throw Error(ErrorKind::ParseError, "give exactly one of --input or --fixture");
    if (!c.fixture.empty()) {
        auto f = load_fixture(c.fixture);
        return {f.poset.poset(), std::move(f.map), std::move(f.window)};
    }
    const auto j = read_json_file(c.input);
    const auto format = c.format.empty() ? detect_format(j) : parse_input_format(c.format);
    switch (format) {
    case InputFormat::Poset: return {poset_from_json(j), std::nullopt, std::nullopt};
    case InputFormat::Map: {
        auto m = map_from_json(j);
        auto p = face_poset_of_map(m).poset();
        return {std::move(p), std::move(m), std::nullopt};
    }
    case InputFormat::Simplicial:
        return {face_poset_of_simplicial(simplicial_from_json(j)).poset(), std::nullopt, std::nullopt};
    }
    throw Error(ErrorKind::ParseError, "unknown input format");
}

PolyMap require_map(const Loaded& in, const RankedPoset& p)
{
    if (in.map)
        return *in.map;
    if (auto m = map_from_face_poset(p))
        return *m;
    throw Error(ErrorKind::InvalidMap, "input is not the face poset of a polyhedral map");
}

void emit(const Common& c, std::ostream& out, const std::string& text)
{
    if (c.output.empty()) {
        out << text;
        return;
    }
    std::ofstream file(c.output, std::ios::binary);
    if (!file)
        throw Error(ErrorKind::IOError, "cannot write '" + c.output + "'", c.output);
    file << text;
    if (!file)
        throw Error(ErrorKind::IOError, "cannot write '" + c.output + "'", c.output);
}

void emit_json(const Common& c, std::ostream& out, const Json& j)
{
    emit(c, out, c.emit == "csv" ? json_to_csv(j) : j.dump(2) + "\n");
}

std::vector<CurvatureKind> parse_kinds(const std::string& list)
{
    std::vector<CurvatureKind> kinds;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty())
            kinds.push_back(parse_curvature_kind(item));
    if (kinds.empty())
        throw Error(ErrorKind::ParseError, "--kinds is empty");
    return kinds;
}

int cmd_rank(const Common& c, std::ostream& out, std::ostream& err)
{
    const auto in = load(c);
    try {
        const RankedPoset p(in.poset);
        Json levels = Json::object();
        for (int i = 0; i <= p.max_rank(); ++i) {
            Json names = Json::array();
            for (auto x : p.level(i))
                names.push_back(p.poset().name(x));
            levels[std::to_string(i)] = std::move(names);
        }
        emit_json(c, out,
                  {{"ranked", true},
                   {"rank", p.max_rank()},
                   {"f_vector", f_vector(p.rank())},
                   {"euler_characteristic", ranked_euler_char(p)},
                   {"covering_finite", Poset::is_covering_finite()},
                   {"levels", std::move(levels)}});
        return Ok;
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::NotRanked)
            throw;
        emit_json(c, out, {{"ranked", false}, {"witness", e.witness()}, {"message", e.what()}});
        err << "not ranked: " << e.what() << "\n";
        return NotRankedExit;
    }
}

int cmd_curvature(const Common& c, const std::string& kinds, std::ostream& out)
{
    const auto in = load(c);
    const RankedPoset p(in.poset);
    std::optional<std::vector<ElementIndex>> only;
    if (in.window)
        only = in.window->interior;
    const auto report = full_report(p, parse_kinds(kinds), only);
    if (c.emit == "csv")
        emit(c, out, report_to_csv(p, report));
    else
        emit(c, out, report_to_json(p, report).dump(2) + "\n");
    return Ok;
}

int cmd_verify(const Common& c, const std::string& theorem, std::ostream& out)
{
    const auto in = load(c);
    const RankedPoset p(in.poset);
    Json j;
    bool holds = false;
    if (theorem == "gb" || theorem == "gb-ric" || theorem == "identities") {
        const auto v = theorem == "gb"       ? verify_gauss_bonnet(p)
                       : theorem == "gb-ric" ? verify_gauss_bonnet_ric(p)
                                             : verify_all_counting_identities(p);
        j = verification_to_json(v);
        holds = v.holds;
    } else if (theorem == "gb-stone") {
        const auto v = verify_stone_gauss_bonnet(require_map(in, p));
        j = verification_to_json(v);
        holds = v.holds;
    } else if (theorem == "negativity") {
        const auto r = negativity_criterion(require_map(in, p));
        j = negativity_to_json(r);
        holds = r.holds();
    } else {
        const auto r = positive_average_check(p);
        j = positive_average_to_json(r);
        holds = r.holds();
    }
    emit_json(c, out, j);
    return holds ? Ok : VerdictFails;
}

int cmd_classify(const Common& c, std::ostream& out)
{
    const auto in = load(c);
    Json j = Json::object();
    std::optional<RankedPoset> p;
    try {
        p.emplace(in.poset);
        j["ranked"] = {{"verdict", true}, {"witnesses", Json::array()}};
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::NotRanked)
            throw;
        j["ranked"] = {{"verdict", false},
                       {"witnesses", Json::array({{{"condition", "rank"}, {"elements", {e.witness()}}}})}};
    }
    j["covering_finite"] = {{"verdict", Poset::is_covering_finite()}, {"witnesses", Json::array()}};
    if (p) {
        j["rank"] = p->max_rank();
        if (p->max_rank() == 2) {
            const auto sc = is_sufficiently_covered(*p);
            j["sufficiently_covered"] = {
                {"verdict", sc.holds}, {"lhs", rational_to_json(sc.lhs)}, {"witnesses", Json::array()}};
            j["almost_polyhedral"] = classification_to_json(is_almost_polyhedral(*p));
        }
        j["polyhedral_map"] = classification_to_json(is_polyhedral_map_poset(*p));
        std::optional<PolyMap> m = in.map;
        if (!m)
            m = map_from_face_poset(*p);
        if (m)
            j["orientable"] = {{"verdict", orientable(*m)}, {"witnesses", Json::array()}};
    }
    emit_json(c, out, j);
    return Ok;
}

int cmd_dual(const Common& c, std::ostream& out)
{
    const auto in = load(c);
    const RankedPoset p(in.poset);
    const auto d = dual_map(require_map(in, p));
    if (c.emit == "csv") {
        std::string text = "face,vertices\n";
        const auto faces = d.face_names();
        for (std::size_t f = 0; f < faces.size(); ++f) {
            text += std::to_string(f) + ",";
            for (std::size_t i = 0; i < faces[f].size(); ++i)
                text += (i ? " " : "") + faces[f][i];
            text += "\n";
        }
        emit(c, out, text);
    } else {
        emit(c, out, map_to_json(d).dump(2) + "\n");
    }
    return Ok;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Curvatures and Euler characteristics of ranked posets of rank 2", "rankcurv"};
    app.require_subcommand(1);

    Common rank_opts, curv_opts, verify_opts, classify_opts, ensemble_opts, dual_opts;
    auto* rank = app.add_subcommand("rank", "rank function and f-vector");
    add_common(rank, rank_opts);

    std::string kinds = "r0,r1,r2,ric";
    auto* curvature = app.add_subcommand("curvature", "per-element curvature report");
    add_common(curvature, curv_opts);
    curvature->add_option("--kinds", kinds, "comma list of r0,r1,r2,ric,stone,stone-general");

    std::string theorem;
    auto* verify = app.add_subcommand("verify", "check one theorem on the input");
    add_common(verify, verify_opts);
    verify->add_option("theorem", theorem, "gb, gb-ric, gb-stone, identities, positive-average or negativity")
        ->required()
        ->check(CLI::IsMember({"gb", "gb-ric", "gb-stone", "identities", "positive-average", "negativity"}));

    auto* classify = app.add_subcommand("classify", "structural predicates with witnesses");
    add_common(classify, classify_opts);

    EnsembleParams params;
    std::string ensemble_theorem;
    auto* ensemble = app.add_subcommand("ensemble", "batch check over seeded random instances");
    ensemble->add_option("--output", ensemble_opts.output, "write here instead of stdout");
    ensemble->add_option("--emit", ensemble_opts.emit, "output format")->check(CLI::IsMember({"json", "csv"}));
    ensemble->add_option("--theorem", ensemble_theorem, "positive-average, lemma-r1-ric, gb or identities")
        ->required()
        ->check(CLI::IsMember({"positive-average", "lemma-r1-ric", "gb", "identities"}));
    ensemble->add_option("--n", params.n, "number of instances");
    ensemble->add_option("--seed", params.seed, "base seed");
    ensemble->add_option("--n0", params.n0, "rank-0 level size");
    ensemble->add_option("--n1", params.n1, "rank-1 level size");
    ensemble->add_option("--n2", params.n2, "rank-2 level size");

    auto* dual = app.add_subcommand("dual", "dual of a polyhedral map");
    add_common(dual, dual_opts);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return Ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return Ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return ParseFailure;
    }

    try {
        if (rank->parsed())
            return cmd_rank(rank_opts, out, err);
        if (curvature->parsed())
            return cmd_curvature(curv_opts, kinds, out);
        if (verify->parsed())
            return cmd_verify(verify_opts, theorem, out);
        if (classify->parsed())
            return cmd_classify(classify_opts, out);
        if (ensemble->parsed()) {
            const auto summary = run_ensemble(parse_ensemble_theorem(ensemble_theorem), params);
            emit_json(ensemble_opts, out, ensemble_to_json(summary));
            return summary.counterexamples == 0 ? Ok : VerdictFails;
        }
        if (dual->parsed())
            return cmd_dual(dual_opts, out);
    } catch (const Error& e) {
        err << "error: " << e.what();
        if (!e.witness().empty())
            err << " [witness: " << e.witness() << "]";
        err << "\n";
        return exit_code(e.kind());
    }
    return ParseFailure;
}

} // namespace rankcurv::cli
