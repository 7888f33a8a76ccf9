#include "rankcurv/ensemble.hpp"

#include "rankcurv/invariants.hpp"
#include "rng.hpp"

namespace rankcurv {

std::string_view to_string(EnsembleTheorem t)
{
    switch (t) {
    case EnsembleTheorem::PositiveAverage: return "positive-average";
    case EnsembleTheorem::LemmaR1Ric: return "lemma-r1-ric";
    case EnsembleTheorem::GaussBonnet: return "gb";
    case EnsembleTheorem::Identities: return "identities";
    }
    return "unknown";
}

EnsembleTheorem parse_ensemble_theorem(std::string_view name)
{
    for (auto t : {EnsembleTheorem::PositiveAverage, EnsembleTheorem::LemmaR1Ric, EnsembleTheorem::GaussBonnet,
                   EnsembleTheorem::Identities})
        if (to_string(t) == name)
            return t;
    throw Error(ErrorKind::ParseError, "unknown ensemble theorem '" + std::string(name) + "'");
}

std::uint64_t instance_seed(std::uint64_t seed, std::size_t i)
{
    // splitmix64 finaliser
    std::uint64_t z = seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(i) + 1;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

RankedPoset ensemble_poset(std::uint64_t s, int n0, int n1, int n2)
{
    detail::Rng rng(s);
    RandomPosetParams params;
    params.n0 = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n0)));
    params.n1 = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n1)));
    params.n2 = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n2)));
    params.lower_density = 0.15 + 0.8 * rng.unit();
    params.upper_density = 0.15 + 0.8 * rng.unit();
    return random_ranked_poset(rng.below(UINT64_MAX), params);
}

PolyMap ensemble_map(std::uint64_t s)
{
    detail::Rng rng(s);
    RandomMapParams params;
    params.surface = rng.chance(0.5) ? SeedSurface::Torus : SeedSurface::Sphere;
    params.insertions = static_cast<int>(rng.below(9));
    params.flips = static_cast<int>(rng.below(31));
    params.merges = static_cast<int>(rng.below(5));
    return random_map(rng.below(UINT64_MAX), params);
}

namespace {

struct Tracker {
    EnsembleSummary& out;

    void observe(const Rational& r1_mean, std::int64_t chi)
    {
        if (!out.min_r1_mean || r1_mean < *out.min_r1_mean)
            out.min_r1_mean = r1_mean;
        if (!out.max_r1_mean || r1_mean > *out.max_r1_mean)
            out.max_r1_mean = r1_mean;
        if (!out.min_euler || chi < *out.min_euler)
            out.min_euler = chi;
        if (!out.max_euler || chi > *out.max_euler)
            out.max_euler = chi;
    }

    void fail(std::size_t i)
    {
        ++out.counterexamples;
        if (out.counterexample_indices.size() < 10)
            out.counterexample_indices.push_back(i);
    }
};

} // namespace

EnsembleSummary run_ensemble(EnsembleTheorem theorem, const EnsembleParams& params)
{
    if (params.n == 0)
        throw Error(ErrorKind::ParameterOutOfRange, "--n must be at least 1");
    if (params.n0 < 1 || params.n1 < 1 || params.n2 < 1)
        throw Error(ErrorKind::ParameterOutOfRange, "level sizes must be at least 1");

    EnsembleSummary out;
    out.theorem = theorem;
    Tracker track{out};
    for (std::size_t i = 0; i < params.n; ++i) {
        const auto s = instance_seed(params.seed, i);
        ++out.instances;
        if (theorem == EnsembleTheorem::LemmaR1Ric) {
            const auto p = face_poset_of_map(ensemble_map(s));
            ++out.qualifying;
            track.observe(averages(p).r1, ranked_euler_char(p));
            bool ok = is_almost_polyhedral(p).verdict;
            for (auto e : p.level(1))
                ok = ok && r1(p, e) == ric(p, e);
            if (!ok)
                track.fail(i);
            continue;
        }
        const auto p = ensemble_poset(s, params.n0, params.n1, params.n2);
        switch (theorem) {
        case EnsembleTheorem::PositiveAverage: {
            const auto rec = positive_average_check(p);
            track.observe(rec.means.r1, rec.euler);
            if (rec.sufficiently_covered.holds && rec.r1_mean_positive) {
                ++out.qualifying;
                if (!out.min_qualifying_euler || rec.euler < *out.min_qualifying_euler)
                    out.min_qualifying_euler = rec.euler;
            }
            if (!rec.holds())
                track.fail(i);
            break;
        }
        case EnsembleTheorem::GaussBonnet: {
            const auto v = verify_gauss_bonnet(p);
            ++out.qualifying;
            track.observe(averages(p).r1, ranked_euler_char(p));
            if (!v.holds)
                track.fail(i);
            break;
        }
        case EnsembleTheorem::Identities: {
            const auto v = verify_all_counting_identities(p);
            ++out.qualifying;
            track.observe(averages(p).r1, ranked_euler_char(p));
            if (!v.holds)
                track.fail(i);
            break;
        }
        case EnsembleTheorem::LemmaR1Ric: break;
        }
    }
    return out;
}

} // namespace rankcurv
