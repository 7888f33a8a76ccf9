#include "rankcurv/invariants.hpp"

#include <algorithm>
#include <map>

namespace rankcurv {

std::int64_t ranked_euler_char(const RankedPoset& p)
{
    std::int64_t chi = 0;
    const auto f = f_vector(p.rank());
    for (std::size_t i = 0; i < f.size(); ++i)
        chi += (i % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(f[i]);
    return chi;
}

OrderComplex order_complex(const Poset& p)
{
    OrderComplex out;
    std::vector<ElementIndex> chain;
    auto extend = [&](auto&& self, ElementIndex top) -> void {
        if (out.chains.size() < chain.size())
            out.chains.resize(chain.size());
        out.chains[chain.size() - 1].push_back(chain);
        for (auto next : p.above(top).to_vector()) {
            chain.push_back(next);
            self(self, next);
            chain.pop_back();
        }
    };
    for (ElementIndex x = 0; x < p.size(); ++x) {
        chain.assign(1, x);
        extend(extend, x);
    }
    return out;
}

std::vector<std::int64_t> chain_counts(const Poset& p)
{
    // ending[x][k]: chains with k+1 elements whose top is x.
    std::vector<std::vector<std::int64_t>> ending(p.size());
    std::vector<std::int64_t> totals;
    for (auto x : p.topological_order()) {
        auto& row = ending[x];
        row.assign(1, 1);
        for (auto y : p.below(x).to_vector()) {
            const auto& prev = ending[y];
            if (row.size() < prev.size() + 1)
                row.resize(prev.size() + 1, 0);
            for (std::size_t k = 0; k < prev.size(); ++k)
                row[k + 1] += prev[k];
        }
        if (totals.size() < row.size())
            totals.resize(row.size(), 0);
        for (std::size_t k = 0; k < row.size(); ++k)
            totals[k] += row[k];
    }
    return totals;
}

std::int64_t order_complex_euler(const Poset& p)
{
    std::int64_t chi = 0;
    const auto counts = chain_counts(p);
    for (std::size_t k = 0; k < counts.size(); ++k)
        chi += (k % 2 == 0 ? 1 : -1) * counts[k];
    return chi;
}

// ---------------------------------------------------------------------------
// Gauss-Bonnet analogues

Verification verify_gauss_bonnet(const RankedPoset& p)
{
    Verification v{"gauss-bonnet", {}, Rational(ranked_euler_char(p)), false, {}, {}};
    if (p.max_rank() != 2)
        throw Error(ErrorKind::WrongRank, "Gauss-Bonnet needs a poset of rank 2, this one has rank " +
                                              std::to_string(p.max_rank()));
    Rational s0, s1, s2;
    for (auto x : p.level(0))
        s0 += r0(p, x);
    for (auto x : p.level(1))
        s1 += r1(p, x);
    for (auto x : p.level(2))
        s2 += r2(p, x);
    v.lhs = s0 - s1 + s2;
    v.holds = v.lhs == v.rhs;
    v.extras = {{"sum_r0", s0}, {"sum_r1", s1}, {"sum_r2", s2}};
    return v;
}

Verification verify_gauss_bonnet_ric(const RankedPoset& p)
{
    const auto ap = is_almost_polyhedral(p);
    if (!ap.verdict) {
        std::string detail;
        std::vector<std::string> conditions;
        for (const auto& w : ap.witnesses)
            if (std::find(conditions.begin(), conditions.end(), w.condition) == conditions.end())
                conditions.push_back(w.condition);
        for (const auto& c : conditions)
            detail += (detail.empty() ? "" : ", ") + c;
        throw Error(ErrorKind::NotAlmostPolyhedral, "violated condition(s) " + detail, detail);
    }
    Verification v{"gauss-bonnet-ric", {}, Rational(ranked_euler_char(p)), false, {}, {}};
    Rational s0, sric, s2;
    for (auto x : p.level(0))
        s0 += r0(p, x);
    for (auto x : p.level(1))
        sric += ric(p, x);
    for (auto x : p.level(2))
        s2 += r2(p, x);
    v.lhs = s0 - sric + s2;
    v.holds = v.lhs == v.rhs;
    v.extras = {{"sum_r0", s0}, {"sum_ric", sric}, {"sum_r2", s2},
                {"order_complex_euler", Rational(order_complex_euler(p.poset()))}};
    return v;
}

Verification verify_stone_gauss_bonnet(const PolyMap& m)
{
    const auto p = face_poset_of_map(m);
    Verification v{"stone-gauss-bonnet", {}, Rational(2 * m.euler_characteristic()), false, {}, {}};
    Rational general;
    for (auto x : p.level(0)) {
        const auto s = stone_star_surface(p, x);
        const auto g = stone_star_general(p, x);
        v.lhs += s;
        general += g;
        if (s != g)
            v.witnesses.push_back(p.poset().name(x));
    }
    v.holds = v.lhs == v.rhs && v.witnesses.empty();
    v.extras = {{"general_sum", general}};
    return v;
}

Verification verify_all_counting_identities(const RankedPoset& p)
{
    Verification v{"counting-identities", {}, {}, true, {}, {}};
    for (int i = 0; i <= p.max_rank(); ++i) {
        const auto ids = verify_counting_identities(p.poset(), p.rank(), i);
        for (const auto& c : ids.checks) {
            v.lhs += c.lhs;
            v.rhs += c.rhs;
            if (!c.holds) {
                v.holds = false;
                v.witnesses.push_back("i=" + std::to_string(i) + ": " + c.name);
            }
        }
    }
    return v;
}

// ---------------------------------------------------------------------------
// Classifiers

namespace {

// Pairs (x, y), x < y, in `level` that share at least two covers in the given direction.
std::vector<std::pair<ElementIndex, ElementIndex>> pairs_sharing_two(
    const Poset& p, const std::vector<ElementIndex>& level, bool via_lower)
{
    std::vector<std::pair<ElementIndex, ElementIndex>> out;
    for (auto x : level) {
        std::map<ElementIndex, int> shared;
        for (auto c : via_lower ? p.lower_covers(x) : p.upper_covers(x))
            for (auto y : via_lower ? p.upper_covers(c) : p.lower_covers(c))
                if (y > x)
                    ++shared[y];
        for (const auto& [y, count] : shared)
            if (count >= 2)
                out.emplace_back(x, y);
    }
    return out;
}

void require_rank_two(const RankedPoset& p, const char* what)
{
    if (p.max_rank() != 2)
        throw Error(ErrorKind::WrongRank, std::string(what) + " needs a poset of rank 2, this one has rank " +
                                              std::to_string(p.max_rank()));
}

} // namespace

ClassificationResult is_almost_polyhedral(const RankedPoset& p)
{
    require_rank_two(p, "almost-polyhedral check");
    const auto& poset = p.poset();
    ClassificationResult out{"almost_polyhedral", true, {}};
    auto name = [&](ElementIndex i) { return poset.name(i); };

    for (auto e : p.level(1))
        if (poset.lower_covers(e).size() != 2)
            out.witnesses.push_back({"1", {name(e)}});
    for (const auto& [a, b] : pairs_sharing_two(poset, p.level(1), true))
        out.witnesses.push_back({"2", {name(a), name(b)}});
    for (const auto& [a, b] : pairs_sharing_two(poset, p.level(1), false))
        out.witnesses.push_back({"3", {name(a), name(b)}});
    // [w, t] has 4 elements iff exactly two edges sit between w and t.
    for (auto t : p.level(2)) {
        std::map<ElementIndex, int> between;
        for (auto e : poset.lower_covers(t))
            for (auto w : poset.lower_covers(e))
                ++between[w];
        for (const auto& [w, count] : between)
            if (count != 2)
                out.witnesses.push_back({"4", {name(w), name(t)}});
    }
    out.verdict = out.witnesses.empty();
    return out;
}

namespace {

ClassificationResult classify_polyhedral(const RankedPoset& p, std::optional<PolyMap>* rebuilt_out)
{
    ClassificationResult out{"polyhedral_map", true, {}};
    if (p.max_rank() != 2) {
        out.verdict = false;
        out.witnesses.push_back({"rank-2", {}});
        return out;
    }
    const auto& poset = p.poset();
    auto name = [&](ElementIndex i) { return poset.name(i); };

    for (auto v : p.level(0))
        if (poset.upper_covers(v).size() < 3)
            out.witnesses.push_back({"vertex-degree", {name(v)}});
    for (auto e : p.level(1)) {
        if (poset.lower_covers(e).size() != 2)
            out.witnesses.push_back({"edge-two-vertices", {name(e)}});
        if (poset.upper_covers(e).size() != 2)
            out.witnesses.push_back({"edge-two-faces", {name(e)}});
    }
    if (!out.witnesses.empty()) {
        out.verdict = false;
        return out;
    }

    // Each face boundary must be one cycle; rebuild the map from those cycles and
    // let map validation check links, face intersections and connectivity.
    std::vector<std::vector<std::string>> faces;
    for (auto t : p.level(2)) {
        const auto& edges = poset.lower_covers(t);
        std::map<ElementIndex, std::vector<ElementIndex>> at_vertex;
        for (auto e : edges)
            for (auto w : poset.lower_covers(e))
                at_vertex[w].push_back(e);
        bool ok = edges.size() >= 3 && std::all_of(at_vertex.begin(), at_vertex.end(),
                                                   [](const auto& kv) { return kv.second.size() == 2; });
        std::vector<std::string> cycle;
        if (ok) {
            auto edge = edges.front();
            auto vertex = poset.lower_covers(edge).front();
            for (std::size_t k = 0; k < edges.size(); ++k) {
                cycle.push_back(name(vertex));
                const auto& ends = poset.lower_covers(edge);
                vertex = ends[0] == vertex ? ends[1] : ends[0];
                const auto& pair = at_vertex[vertex];
                edge = pair[0] == edge ? pair[1] : pair[0];
            }
            ok = edge == edges.front() && cycle.size() == at_vertex.size();
        }
        if (!ok) {
            out.witnesses.push_back({"face-boundary-cycle", {name(t)}});
            continue;
        }
        faces.push_back(std::move(cycle));
    }
    if (out.witnesses.empty()) {
        try {
            PolyMap rebuilt(faces);
            if (rebuilt_out)
                *rebuilt_out = std::move(rebuilt);
        } catch (const Error& err) {
            out.witnesses.push_back({err.witness(), {err.what()}});
        }
    }
    out.verdict = out.witnesses.empty();
    return out;
}

} // namespace

ClassificationResult is_polyhedral_map_poset(const RankedPoset& p)
{
    return classify_polyhedral(p, nullptr);
}

std::optional<PolyMap> map_from_face_poset(const RankedPoset& p)
{
    std::optional<PolyMap> m;
    classify_polyhedral(p, &m);
    return m;
}

bool orientable(const PolyMap& m)
{
    return coherently_oriented(m).has_value();
}

NegativityRecord negativity_criterion(const PolyMap& m)
{
    const auto p = face_poset_of_map(m);
    NegativityRecord rec;
    rec.euler = m.euler_characteristic();
    rec.all_negative = true;
    for (auto v : p.level(0))
        if (r0(p, v) >= 0)
            rec.nonnegative_cells.push_back(p.poset().name(v));
    for (auto e : p.level(1))
        if (ric(p, e) >= 0)
            rec.nonnegative_cells.push_back(p.poset().name(e));
    rec.min_face = SIZE_MAX;
    for (auto s : p.level(2)) {
        if (r2(p, s) >= 0)
            rec.nonnegative_cells.push_back(p.poset().name(s));
        rec.min_face = std::min(rec.min_face, p.poset().lower_covers(s).size());
    }
    rec.all_negative = rec.nonnegative_cells.empty();
    rec.all_faces_at_least_7 = rec.min_face >= 7;
    rec.iff_holds = rec.all_negative == rec.all_faces_at_least_7;
    if (rec.euler >= 0)
        rec.nonnegative_euler_has_small_face = rec.min_face <= 6 && !rec.all_negative;
    return rec;
}

PositiveAverageRecord positive_average_check(const RankedPoset& p)
{
    PositiveAverageRecord rec;
    rec.means = averages(p);
    rec.sufficiently_covered = sufficiently_covered_from(rec.means.a1, rec.means.b1);
    rec.r1_mean_positive = rec.means.r1 > 0;
    rec.euler = ranked_euler_char(p);
    rec.euler_positive = rec.euler > 0;
    rec.implication_holds = !(rec.sufficiently_covered.holds && rec.r1_mean_positive) || rec.euler_positive;

    rec.almost_polyhedral = is_almost_polyhedral(p).verdict;
    if (rec.almost_polyhedral) {
        Rational sum;
        for (auto e : p.level(1))
            sum += ric(p, e);
        rec.ric_mean = sum / static_cast<std::int64_t>(p.level(1).size());
        if (rec.means.a1 >= 2)
            rec.ric_implication_holds = !(*rec.ric_mean > 0) || rec.euler_positive;
    }
    return rec;
}

} // namespace rankcurv
