#pragma once

#include "rankcurv/complex.hpp"
#include "rankcurv/rational.hpp"

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace rankcurv {

enum class EnsembleTheorem { PositiveAverage, LemmaR1Ric, GaussBonnet, Identities };

std::string_view to_string(EnsembleTheorem t);
/// positive-average, lemma-r1-ric, gb, identities; ParseError otherwise.
EnsembleTheorem parse_ensemble_theorem(std::string_view name);

struct EnsembleParams {
    std::size_t n = 1000;
    std::uint64_t seed = 0;
    int n0 = 8;  // level sizes are drawn per instance from 1..nk
    int n1 = 12;
    int n2 = 8;
};

/// Seed of instance i, so that instances do not depend on each other.
std::uint64_t instance_seed(std::uint64_t seed, std::size_t i);

/// Random poset of instance seed s: level sizes in 1..n0, 1..n1, 1..n2 and cover
/// densities, all drawn from s.
RankedPoset ensemble_poset(std::uint64_t s, int n0, int n1, int n2);

/// Random map of instance seed s: sphere or torus seed, operation counts drawn from s.
PolyMap ensemble_map(std::uint64_t s);

struct EnsembleSummary {
    EnsembleTheorem theorem = EnsembleTheorem::GaussBonnet;
    std::size_t instances = 0;
    std::size_t qualifying = 0;  // instances meeting the theorem's hypothesis
    std::size_t counterexamples = 0;
    std::vector<std::size_t> counterexample_indices;  // first few
    std::optional<Rational> min_r1_mean;
    std::optional<Rational> max_r1_mean;
    std::optional<std::int64_t> min_euler;
    std::optional<std::int64_t> max_euler;
    std::optional<std::int64_t> min_qualifying_euler;
};

/// Runs params.n instances. Throws ParameterOutOfRange for n = 0 or a level size < 1.
EnsembleSummary run_ensemble(EnsembleTheorem theorem, const EnsembleParams& params);

} // namespace rankcurv
