#pragma once

#include "rankcurv/complex.hpp"
#include "rankcurv/curvature.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace rankcurv {

/// Alternating sum of level sizes.
std::int64_t ranked_euler_char(const RankedPoset& p);

/// Nonempty chains of a finite poset; chains[k] holds the chains with k+1 elements,
/// each listed bottom to top.
struct OrderComplex {
    std::vector<std::vector<std::vector<ElementIndex>>> chains;

    std::size_t simplex_count(std::size_t cardinality) const
    {
        return cardinality == 0 || cardinality > chains.size() ? 0 : chains[cardinality - 1].size();
    }
};

OrderComplex order_complex(const Poset& p);

/// Chain counts by cardinality, computed without listing the chains.
std::vector<std::int64_t> chain_counts(const Poset& p);
std::int64_t order_complex_euler(const Poset& p);

/// Outcome of checking one identity; both sides are always reported.
struct Verification {
    std::string theorem;
    Rational lhs;
    Rational rhs;
    bool holds = false;
    std::vector<std::string> witnesses;
    std::vector<std::pair<std::string, Rational>> extras;
};

/// Sum R0 - sum R1 + sum R2 against the ranked Euler characteristic. WrongRank
/// unless the poset has rank 2.
Verification verify_gauss_bonnet(const RankedPoset& p);

/// Same with Ric in place of R1. Throws NotAlmostPolyhedral first when the
/// poset is not almost polyhedral. The order-complex Euler characteristic is
/// reported as the extra "order_complex_euler".
Verification verify_gauss_bonnet_ric(const RankedPoset& p);

/// Sum of Stone's R* over the vertices of a map against 2 chi. Vertices where the
/// surface and poset forms disagree are listed as witnesses.
Verification verify_stone_gauss_bonnet(const PolyMap& m);

/// All three counting identities at every rank 0..r.
Verification verify_all_counting_identities(const RankedPoset& p);

struct ClassificationWitness {
    std::string condition;
    std::vector<std::string> elements;
};

struct ClassificationResult {
    std::string predicate;
    bool verdict = true;
    std::vector<ClassificationWitness> witnesses;
};

/// Conditions "1".."4" of the almost polyhedral definition; every violation is
/// reported. Throws WrongRank unless the poset has rank 2.
ClassificationResult is_almost_polyhedral(const RankedPoset& p);

/// Whether the poset is the face poset of a polyhedral map on a closed surface.
ClassificationResult is_polyhedral_map_poset(const RankedPoset& p);

/// The map whose face poset is p, with vertices named as in p; nullopt unless
/// p is the face poset of a polyhedral map.
std::optional<PolyMap> map_from_face_poset(const RankedPoset& p);

bool orientable(const PolyMap& m);

struct NegativityRecord {
    bool all_negative = false;         // R0, Ric and R2 negative at every cell
    bool all_faces_at_least_7 = false;
    std::size_t min_face = 0;
    bool iff_holds = false;
    std::int64_t euler = 0;
    bool nonnegative_euler_has_small_face = true;  // chi >= 0 implies min face <= 6
    std::vector<std::string> nonnegative_cells;

    bool holds() const { return iff_holds && nonnegative_euler_has_small_face; }
};

NegativityRecord negativity_criterion(const PolyMap& m);

struct PositiveAverageRecord {
    SufficientlyCovered sufficiently_covered;
    Averages means;
    bool r1_mean_positive = false;
    std::int64_t euler = 0;
    bool euler_positive = false;
    bool implication_holds = true;

    bool almost_polyhedral = false;
    std::optional<Rational> ric_mean;          // set when almost polyhedral
    std::optional<bool> ric_implication_holds; // set when almost polyhedral with mean A1 >= 2

    bool holds() const { return implication_holds && ric_implication_holds.value_or(true); }
};

PositiveAverageRecord positive_average_check(const RankedPoset& p);

} // namespace rankcurv
