#pragma once

#include "rankcurv/error.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace rankcurv {

using ElementIndex = std::size_t;

/// Fixed-size bitset over element indices, used for the order relation.
class ElementSet {
public:
    ElementSet() = default;
    explicit ElementSet(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

    void insert(ElementIndex i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
    bool contains(ElementIndex i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
    std::size_t count() const;
    std::size_t size() const { return size_; }

    ElementSet& operator|=(const ElementSet& other);
    friend ElementSet operator&(const ElementSet& a, const ElementSet& b);

    std::vector<ElementIndex> to_vector() const;

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

/// A finite poset given by its Hasse diagram.
///
/// Construction validates that the cover list is a genuine Hasse diagram: no
/// self covers, no cycles, and no pair that is implied transitively by a longer
/// chain. Elements keep the order they were given in, which fixes iteration
/// order everywhere downstream.
class Poset {
public:
    Poset() = default;

    /// Throws Error with DuplicateElement, UnknownIdentifier, SelfCover,
    /// CycleDetected or NotACover.
    static Poset build(std::vector<std::string> elements,
                       const std::vector<std::pair<std::string, std::string>>& covers);

    std::size_t size() const { return names_.size(); }
    bool empty() const { return names_.empty(); }

    const std::string& name(ElementIndex i) const { return names_.at(i); }
    const std::vector<std::string>& names() const { return names_; }

    /// Throws UnknownIdentifier.
    ElementIndex index_of(std::string_view id) const;
    bool contains(std::string_view id) const;

    /// Upper and lower covers, sorted by element index.
    const std::vector<ElementIndex>& upper_covers(ElementIndex i) const { return up_.at(i); }
    const std::vector<ElementIndex>& lower_covers(ElementIndex i) const { return down_.at(i); }

    /// Strictly greater / strictly smaller elements in the order.
    const ElementSet& above(ElementIndex i) const { return above_.at(i); }
    const ElementSet& below(ElementIndex i) const { return below_.at(i); }

    bool less(ElementIndex a, ElementIndex b) const { return above_.at(a).contains(b); }
    bool less_equal(ElementIndex a, ElementIndex b) const { return a == b || less(a, b); }

    /// A topological order of the elements (every element after its lower covers).
    const std::vector<ElementIndex>& topological_order() const { return topo_; }

    std::vector<std::pair<ElementIndex, ElementIndex>> cover_pairs() const;

    /// Finite posets are always covering-finite.
    static constexpr bool is_covering_finite() { return true; }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, ElementIndex> index_;
    std::vector<std::vector<ElementIndex>> up_;
    std::vector<std::vector<ElementIndex>> down_;
    std::vector<ElementSet> above_;
    std::vector<ElementSet> below_;
    std::vector<ElementIndex> topo_;
};

/// The unique rank function of a ranked poset.
class RankFunction {
public:
    RankFunction() = default;

    int operator()(ElementIndex i) const { return ranks_.at(i); }
    const std::vector<int>& ranks() const { return ranks_; }

    /// Maximum attained rank; 0 for the empty poset.
    int max_rank() const { return levels_.empty() ? 0 : static_cast<int>(levels_.size()) - 1; }

    /// Elements of rank i in element order; empty when i is out of range.
    const std::vector<ElementIndex>& level(int i) const;
    const std::vector<std::vector<ElementIndex>>& levels() const { return levels_; }

    friend RankFunction compute_rank(const Poset& p);

private:
    std::vector<int> ranks_;
    std::vector<std::vector<ElementIndex>> levels_;
};

/// Throws NotRanked, with the offending element as witness.
RankFunction compute_rank(const Poset& p);

std::vector<std::vector<ElementIndex>> level_sets(const Poset& p, const RankFunction& rf);
std::vector<std::size_t> f_vector(const RankFunction& rf);

/// A poset bundled with its rank function. Most curvature code takes this.
class RankedPoset {
public:
    RankedPoset() = default;
    explicit RankedPoset(Poset p) : poset_(std::move(p)), rank_(compute_rank(poset_)) {}

    const Poset& poset() const { return poset_; }
    const RankFunction& rank() const { return rank_; }
    int rank_of(ElementIndex i) const { return rank_(i); }
    int max_rank() const { return rank_.max_rank(); }
    const std::vector<ElementIndex>& level(int i) const { return rank_.level(i); }

private:
    Poset poset_;
    RankFunction rank_;
};

/// A_i(x), B_i(x), U_i(x), D_i(x) and N_i(x) for one element.
struct LocalCounts {
    std::int64_t a = 0;
    std::int64_t b = 0;
    std::int64_t u = 0;
    std::int64_t d = 0;
    std::int64_t n = 0;

    bool operator==(const LocalCounts&) const = default;
};

struct ParallelNeighbors {
    std::vector<ElementIndex> coface_set;  // share an upper cover with x
    std::vector<ElementIndex> face_set;    // share a lower cover with x
    std::int64_t n = 0;                    // |coface_set symmetric-difference face_set|
};

/// x itself is never a member of either set.
ParallelNeighbors parallel_neighbors(const Poset& p, const RankFunction& rf, ElementIndex x);
ParallelNeighbors parallel_neighbors(const Poset& p, const RankFunction& rf, std::string_view x);

LocalCounts local_counts(const Poset& p, const RankFunction& rf, ElementIndex x);
LocalCounts local_counts(const Poset& p, const RankFunction& rf, std::string_view x);

struct IdentityCheck {
    std::string name;
    std::int64_t lhs = 0;
    std::int64_t rhs = 0;
    bool holds = false;
};

struct CountingIdentities {
    int rank_index = 0;
    std::vector<IdentityCheck> checks;  // sum A = sum B, sum U = sum B^2, sum D = sum A^2
    bool all_hold() const;
};

/// Levels outside 0..r are treated as empty, so every identity is defined for any i.
CountingIdentities verify_counting_identities(const Poset& p, const RankFunction& rf, int i);

/// |[a, b]|; throws NotComparable unless a <= b.
std::size_t interval_cardinality(const Poset& p, ElementIndex a, ElementIndex b);
std::size_t interval_cardinality(const Poset& p, std::string_view a, std::string_view b);

} // namespace rankcurv
