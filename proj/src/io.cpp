#include "rankcurv/io.hpp"

#include <fstream>
#include <sstream>

namespace rankcurv {

InputFormat parse_input_format(std::string_view name)
{
    if (name == "poset")
        return InputFormat::Poset;
    if (name == "map")
        return InputFormat::Map;
    if (name == "simplicial")
        return InputFormat::Simplicial;
    throw Error(ErrorKind::ParseError, "unknown input format '" + std::string(name) + "'");
}

InputFormat detect_format(const Json& j)
{
    if (j.is_object()) {
        if (j.contains("elements"))
            return InputFormat::Poset;
        if (j.contains("faces"))
            return InputFormat::Map;
        if (j.contains("simplices"))
            return InputFormat::Simplicial;
    }
    throw Error(ErrorKind::ParseError, "cannot tell the input format: expected a key elements, faces or simplices");
}

Json parse_json_text(std::string_view text)
{
    try {
        return Json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorKind::ParseError, std::string("malformed JSON: ") + e.what());
    }
}

Json read_json_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(ErrorKind::IOError, "cannot open '" + path + "'", path);
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad())
        throw Error(ErrorKind::IOError, "cannot read '" + path + "'", path);
    return parse_json_text(buf.str());
}

namespace {

const Json& field(const Json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key))
        throw Error(ErrorKind::ParseError, std::string("missing field '") + key + "'");
    return j.at(key);
}

std::string label(const Json& j, const char* where)
{
    if (j.is_string())
        return j.get<std::string>();
    if (j.is_number_integer())
        return std::to_string(j.get<std::int64_t>());
    throw Error(ErrorKind::ParseError, std::string("identifiers in ") + where + " must be strings");
}

std::vector<std::vector<std::string>> label_lists(const Json& j, const char* key)
{
    const auto& arr = field(j, key);
    if (!arr.is_array())
        throw Error(ErrorKind::ParseError, std::string("'") + key + "' must be an array");
    std::vector<std::vector<std::string>> out;
    for (const auto& item : arr) {
        if (!item.is_array())
            throw Error(ErrorKind::ParseError, std::string("entries of '") + key + "' must be arrays");
        auto& row = out.emplace_back();
        for (const auto& v : item)
            row.push_back(label(v, key));
    }
    return out;
}

} // namespace

Poset poset_from_json(const Json& j)
{
    const auto& elems = field(j, "elements");
    if (!elems.is_array())
        throw Error(ErrorKind::ParseError, "'elements' must be an array");
    std::vector<std::string> names;
    for (const auto& e : elems)
        names.push_back(label(e, "elements"));
    std::vector<std::pair<std::string, std::string>> covers;
    for (auto& pair : label_lists(j, "covers")) {
        if (pair.size() != 2)
            throw Error(ErrorKind::ParseError, "each cover must be a pair [lower, upper]");
        covers.emplace_back(std::move(pair[0]), std::move(pair[1]));
    }
    return Poset::build(std::move(names), covers);
}

PolyMap map_from_json(const Json& j)
{
    return PolyMap(label_lists(j, "faces"));
}

SimplicialComplex2 simplicial_from_json(const Json& j)
{
    return SimplicialComplex2::from_simplices(label_lists(j, "simplices"));
}

Json poset_to_json(const Poset& p)
{
    Json covers = Json::array();
    for (const auto& [lo, hi] : p.cover_pairs())
        covers.push_back({p.name(lo), p.name(hi)});
    return {{"elements", p.names()}, {"covers", std::move(covers)}};
}

Json map_to_json(const PolyMap& m)
{
    return {{"faces", m.face_names()}};
}

Json rational_to_json(const Rational& q)
{
    return {{"num", q.numerator()}, {"den", q.denominator()}};
}

Rational rational_from_json(const Json& j)
{
    const auto& num = field(j, "num");
    const auto& den = field(j, "den");
    if (!num.is_number_integer() || !den.is_number_integer() || den.get<std::int64_t>() == 0)
        throw Error(ErrorKind::ParseError, "a rational needs integer num and nonzero den");
    return {num.get<std::int64_t>(), den.get<std::int64_t>()};
}

Json kind_report_to_json(const RankedPoset& p, const CurvatureReport& report, const KindValues& kind)
{
    Json values = Json::object();
    bool all_positive = true;
    bool all_zero = true;
    for (const auto& [x, q] : kind.values) {
        values[p.poset().name(x)] = rational_to_json(q);
        all_positive = all_positive && q > 0;
        all_zero = all_zero && q == 0;
    }
    const auto chi = ranked_euler_char(p);
    const Rational gb = report.sum_r0 - report.sum_r1 + report.sum_r2;
    Json aggregates = {
        {"count", kind.values.size()},
        {"sum", rational_to_json(kind.sum)},
        {"sum_r0", rational_to_json(report.sum_r0)},
        {"sum_r1", rational_to_json(report.sum_r1)},
        {"sum_r2", rational_to_json(report.sum_r2)},
        {"gauss_bonnet_sum", rational_to_json(gb)},
        {"euler_characteristic", chi},
        {"mean_r1", rational_to_json(report.means.r1)},
        {"mean_a1", rational_to_json(report.means.a1)},
        {"mean_b1", rational_to_json(report.means.b1)},
        {"sufficiently_covered_lhs", rational_to_json(report.sufficiently_covered.lhs)},
    };
    Json verdicts = {
        {"all_negative", kind.all_negative},
        {"all_positive", all_positive},
        {"all_zero", all_zero},
        {"sufficiently_covered", report.sufficiently_covered.holds},
        {"gauss_bonnet", gb == chi},
    };
    return {{"kind", std::string(to_string(kind.kind))},
            {"values", std::move(values)},
            {"aggregates", std::move(aggregates)},
            {"verdicts", std::move(verdicts)}};
}

Json report_to_json(const RankedPoset& p, const CurvatureReport& report)
{
    if (report.kinds.size() == 1)
        return kind_report_to_json(p, report, report.kinds.front());
    Json out = Json::array();
    for (const auto& k : report.kinds)
        out.push_back(kind_report_to_json(p, report, k));
    return out;
}

namespace {

std::string csv_cell(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

bool is_rational(const Json& j)
{
    return j.is_object() && j.size() == 2 && j.contains("num") && j.contains("den");
}

std::string scalar_text(const Json& j)
{
    if (is_rational(j))
        return to_string(rational_from_json(j));
    if (j.is_string())
        return j.get<std::string>();
    if (j.is_array()) {
        std::string out;
        for (const auto& item : j)
            out += (out.empty() ? "" : ";") + scalar_text(item);
        return out;
    }
    if (j.is_object())
        return j.dump();
    return j.dump();
}

void flatten(const Json& j, const std::string& prefix, std::string& out)
{
    if (j.is_object() && !is_rational(j)) {
        for (const auto& [k, v] : j.items())
            flatten(v, prefix.empty() ? k : prefix + "." + k, out);
        return;
    }
    out += csv_cell(prefix) + "," + csv_cell(scalar_text(j)) + "\n";
}

} // namespace

std::string report_to_csv(const RankedPoset& p, const CurvatureReport& report)
{
    std::string out = "kind,element,value\n";
    for (const auto& k : report.kinds)
        for (const auto& [x, q] : k.values)
            out += std::string(to_string(k.kind)) + "," + csv_cell(p.poset().name(x)) + "," + to_string(q) + "\n";
    return out;
}

Json verification_to_json(const Verification& v)
{
    Json out = {{"theorem", v.theorem},
                {"lhs", rational_to_json(v.lhs)},
                {"rhs", rational_to_json(v.rhs)},
                {"holds", v.holds},
                {"witnesses", v.witnesses}};
    for (const auto& [name, q] : v.extras)
        out[name] = rational_to_json(q);
    return out;
}

Json negativity_to_json(const NegativityRecord& r)
{
    return {{"theorem", "negativity"},
            {"lhs", r.all_negative},
            {"rhs", r.all_faces_at_least_7},
            {"holds", r.holds()},
            {"witnesses", r.nonnegative_cells},
            {"all_negative", r.all_negative},
            {"min_face", r.min_face},
            {"iff", r.iff_holds},
            {"euler_characteristic", r.euler},
            {"nonnegative_euler_has_small_face", r.nonnegative_euler_has_small_face}};
}

Json positive_average_to_json(const PositiveAverageRecord& r)
{
    Json out = {{"theorem", "positive-average"},
                {"lhs", rational_to_json(r.means.r1)},
                {"rhs", rational_to_json(Rational(r.euler))},
                {"holds", r.holds()},
                {"witnesses", Json::array()},
                {"sufficiently_covered", r.sufficiently_covered.holds},
                {"sufficiently_covered_lhs", rational_to_json(r.sufficiently_covered.lhs)},
                {"mean_r1_positive", r.r1_mean_positive},
                {"euler_positive", r.euler_positive},
                {"mean_a1", rational_to_json(r.means.a1)},
                {"mean_b1", rational_to_json(r.means.b1)},
                {"almost_polyhedral", r.almost_polyhedral}};
    if (r.ric_mean)
        out["mean_ric"] = rational_to_json(*r.ric_mean);
    if (r.ric_implication_holds)
        out["ric_implication_holds"] = *r.ric_implication_holds;
    return out;
}

Json classification_to_json(const ClassificationResult& c)
{
    Json witnesses = Json::array();
    for (const auto& w : c.witnesses)
        witnesses.push_back({{"condition", w.condition}, {"elements", w.elements}});
    return {{"verdict", c.verdict}, {"witnesses", std::move(witnesses)}};
}

Json ensemble_to_json(const EnsembleSummary& s)
{
    auto opt_rational = [](const std::optional<Rational>& q) { return q ? rational_to_json(*q) : Json(nullptr); };
    auto opt_int = [](const std::optional<std::int64_t>& v) { return v ? Json(*v) : Json(nullptr); };
    return {{"theorem", std::string(to_string(s.theorem))},
            {"instances", s.instances},
            {"qualifying", s.qualifying},
            {"counterexamples", s.counterexamples},
            {"counterexample_indices", s.counterexample_indices},
            {"min_mean_r1", opt_rational(s.min_r1_mean)},
            {"max_mean_r1", opt_rational(s.max_r1_mean)},
            {"min_euler_characteristic", opt_int(s.min_euler)},
            {"max_euler_characteristic", opt_int(s.max_euler)},
            {"min_qualifying_euler_characteristic", opt_int(s.min_qualifying_euler)}};
}

std::string json_to_csv(const Json& j)
{
    std::string out = "key,value\n";
    if (j.is_array()) {
        for (std::size_t i = 0; i < j.size(); ++i)
            flatten(j[i], std::to_string(i), out);
    } else {
        flatten(j, "", out);
    }
    return out;
}

} // namespace rankcurv
