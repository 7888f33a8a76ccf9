#include "rankcurv/poset.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace rankcurv {

std::string_view to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::DuplicateElement: return "DuplicateElement";
    case ErrorKind::UnknownIdentifier: return "UnknownIdentifier";
    case ErrorKind::CycleDetected: return "CycleDetected";
    case ErrorKind::NotACover: return "NotACover";
    case ErrorKind::SelfCover: return "SelfCover";
    case ErrorKind::NotRanked: return "NotRanked";
    case ErrorKind::NotComparable: return "NotComparable";
    case ErrorKind::InvalidComplex: return "InvalidComplex";
    case ErrorKind::InvalidMap: return "InvalidMap";
    case ErrorKind::ParameterOutOfRange: return "ParameterOutOfRange";
    case ErrorKind::WrongRank: return "WrongRank";
    case ErrorKind::EmptyLevel: return "EmptyLevel";
    case ErrorKind::NotAlmostPolyhedral: return "NotAlmostPolyhedral";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::IOError: return "IOError";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, std::string message, std::string witness)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message),
      kind_(kind),
      witness_(std::move(witness))
{
}

// ---------------------------------------------------------------------------
// ElementSet

std::size_t ElementSet::count() const
{
    std::size_t total = 0;
    for (auto w : words_)
        total += static_cast<std::size_t>(std::popcount(w));
    return total;
}

ElementSet& ElementSet::operator|=(const ElementSet& other)
{
    for (std::size_t k = 0; k < words_.size(); ++k)
        words_[k] |= other.words_[k];
    return *this;
}

ElementSet operator&(const ElementSet& a, const ElementSet& b)
{
    ElementSet out(a.size_);
    for (std::size_t k = 0; k < out.words_.size(); ++k)
        out.words_[k] = a.words_[k] & b.words_[k];
    return out;
}

std::vector<ElementIndex> ElementSet::to_vector() const
{
    std::vector<ElementIndex> out;
    for (std::size_t k = 0; k < words_.size(); ++k) {
        auto w = words_[k];
        while (w != 0) {
            out.push_back(k * 64 + static_cast<std::size_t>(std::countr_zero(w)));
            w &= w - 1;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Poset

Poset Poset::build(std::vector<std::string> elements,
                   const std::vector<std::pair<std::string, std::string>>& covers)
{
    Poset p;
    const std::size_t n = elements.size();
    p.index_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!p.index_.emplace(elements[i], i).second)
            throw Error(ErrorKind::DuplicateElement, "element '" + elements[i] + "' listed twice",
                        elements[i]);
    }
    p.names_ = std::move(elements);
    p.up_.assign(n, {});
    p.down_.assign(n, {});

    std::set<std::pair<ElementIndex, ElementIndex>> pairs;
    for (const auto& [lo, hi] : covers) {
        auto find = [&](const std::string& id) {
            auto it = p.index_.find(id);
            if (it == p.index_.end())
                throw Error(ErrorKind::UnknownIdentifier, "cover references unknown element '" + id + "'",
                            id);
            return it->second;
        };
        const auto a = find(lo);
        const auto b = find(hi);
        if (a == b)
            throw Error(ErrorKind::SelfCover, "element '" + lo + "' covers itself", lo);
        pairs.emplace(a, b);
    }
    for (const auto& [a, b] : pairs) {
        p.up_[a].push_back(b);
        p.down_[b].push_back(a);
    }
    for (auto& v : p.up_)
        std::sort(v.begin(), v.end());
    for (auto& v : p.down_)
        std::sort(v.begin(), v.end());

    // Kahn's algorithm; ties broken by element index for a stable order.
    std::vector<std::size_t> indeg(n);
    for (std::size_t i = 0; i < n; ++i)
        indeg[i] = p.down_[i].size();
    std::set<ElementIndex> ready;
    for (std::size_t i = 0; i < n; ++i)
        if (indeg[i] == 0)
            ready.insert(i);
    while (!ready.empty()) {
        const auto x = *ready.begin();
        ready.erase(ready.begin());
        p.topo_.push_back(x);
        for (auto y : p.up_[x])
            if (--indeg[y] == 0)
                ready.insert(y);
    }
    if (p.topo_.size() != n) {
        for (std::size_t i = 0; i < n; ++i)
            if (indeg[i] != 0)
                throw Error(ErrorKind::CycleDetected, "cover relation has a cycle through '" + p.names_[i] + "'",
                            p.names_[i]);
    }

    p.above_.assign(n, ElementSet(n));
    p.below_.assign(n, ElementSet(n));
    for (auto it = p.topo_.rbegin(); it != p.topo_.rend(); ++it) {
        const auto x = *it;
        for (auto y : p.up_[x]) {
            p.above_[x].insert(y);
            p.above_[x] |= p.above_[y];
        }
    }
    for (auto x : p.topo_) {
        for (auto z : p.down_[x]) {
            p.below_[x].insert(z);
            p.below_[x] |= p.below_[z];
        }
    }

    // A pair a < b is a genuine cover only if no other upper cover of a lies below b.
    for (std::size_t a = 0; a < n; ++a) {
        for (auto b : p.up_[a]) {
            for (auto c : p.up_[a]) {
                if (c != b && p.above_[c].contains(b))
                    throw Error(ErrorKind::NotACover,
                                "pair ('" + p.names_[a] + "', '" + p.names_[b] + "') is implied via '" +
                                    p.names_[c] + "'",
                                p.names_[a] + "<" + p.names_[b]);
            }
        }
    }
    return p;
}

ElementIndex Poset::index_of(std::string_view id) const
{
    auto it = index_.find(std::string(id));
    if (it == index_.end())
        throw Error(ErrorKind::UnknownIdentifier, "no element '" + std::string(id) + "'", std::string(id));
    return it->second;
}

bool Poset::contains(std::string_view id) const
{
    return index_.count(std::string(id)) != 0;
}

std::vector<std::pair<ElementIndex, ElementIndex>> Poset::cover_pairs() const
{
    std::vector<std::pair<ElementIndex, ElementIndex>> out;
    for (std::size_t a = 0; a < size(); ++a)
        for (auto b : up_[a])
            out.emplace_back(a, b);
    return out;
}

// ---------------------------------------------------------------------------
// Ranks

const std::vector<ElementIndex>& RankFunction::level(int i) const
{
    static const std::vector<ElementIndex> none;
    if (i < 0 || static_cast<std::size_t>(i) >= levels_.size())
        return none;
    return levels_[static_cast<std::size_t>(i)];
}

RankFunction compute_rank(const Poset& p)
{
    RankFunction rf;
    rf.ranks_.assign(p.size(), 0);
    // Minimal elements are forced to 0; every other element is forced to one more
    // than each of its lower covers, so all lower covers must agree.
    for (auto x : p.topological_order()) {
        const auto& down = p.lower_covers(x);
        if (down.empty())
            continue;
        const int r = rf.ranks_[down.front()];
        for (auto z : down) {
            if (rf.ranks_[z] != r)
                throw Error(ErrorKind::NotRanked,
                            "element '" + p.name(x) + "' covers '" + p.name(down.front()) + "' (rank " +
                                std::to_string(r) + ") and '" + p.name(z) + "' (rank " +
                                std::to_string(rf.ranks_[z]) + ")",
                            p.name(x));
        }
        rf.ranks_[x] = r + 1;
    }
    for (std::size_t i = 0; i < p.size(); ++i) {
        const auto r = static_cast<std::size_t>(rf.ranks_[i]);
        if (rf.levels_.size() <= r)
            rf.levels_.resize(r + 1);
        rf.levels_[r].push_back(i);
    }
    return rf;
}

std::vector<std::vector<ElementIndex>> level_sets(const Poset&, const RankFunction& rf)
{
    return rf.levels();
}

std::vector<std::size_t> f_vector(const RankFunction& rf)
{
    std::vector<std::size_t> out;
    for (const auto& level : rf.levels())
        out.push_back(level.size());
    return out;
}

// ---------------------------------------------------------------------------
// Local counts

ParallelNeighbors parallel_neighbors(const Poset& p, const RankFunction&, ElementIndex x)
{
    if (x >= p.size())
        throw Error(ErrorKind::UnknownIdentifier, "element index out of range");
    std::set<ElementIndex> cofaces;
    for (auto y : p.upper_covers(x))
        for (auto w : p.lower_covers(y))
            if (w != x)
                cofaces.insert(w);
    std::set<ElementIndex> faces;
    for (auto z : p.lower_covers(x))
        for (auto w : p.upper_covers(z))
            if (w != x)
                faces.insert(w);

    ParallelNeighbors out;
    out.coface_set.assign(cofaces.begin(), cofaces.end());
    out.face_set.assign(faces.begin(), faces.end());
    std::vector<ElementIndex> sym;
    std::set_symmetric_difference(cofaces.begin(), cofaces.end(), faces.begin(), faces.end(),
                                  std::back_inserter(sym));
    out.n = static_cast<std::int64_t>(sym.size());
    return out;
}

ParallelNeighbors parallel_neighbors(const Poset& p, const RankFunction& rf, std::string_view x)
{
    return parallel_neighbors(p, rf, p.index_of(x));
}

LocalCounts local_counts(const Poset& p, const RankFunction& rf, ElementIndex x)
{
    if (x >= p.size())
        throw Error(ErrorKind::UnknownIdentifier, "element index out of range");
    LocalCounts c;
    c.a = static_cast<std::int64_t>(p.upper_covers(x).size());
    c.b = static_cast<std::int64_t>(p.lower_covers(x).size());
    for (auto y : p.upper_covers(x))
        c.u += static_cast<std::int64_t>(p.lower_covers(y).size());
    for (auto z : p.lower_covers(x))
        c.d += static_cast<std::int64_t>(p.upper_covers(z).size());
    c.n = parallel_neighbors(p, rf, x).n;
    return c;
}

LocalCounts local_counts(const Poset& p, const RankFunction& rf, std::string_view x)
{
    return local_counts(p, rf, p.index_of(x));
}

bool CountingIdentities::all_hold() const
{
    return std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.holds; });
}

CountingIdentities verify_counting_identities(const Poset& p, const RankFunction& rf, int i)
{
    auto a = [&](ElementIndex x) { return static_cast<std::int64_t>(p.upper_covers(x).size()); };
    auto b = [&](ElementIndex x) { return static_cast<std::int64_t>(p.lower_covers(x).size()); };

    std::int64_t sum_a = 0, sum_u = 0, sum_d = 0;
    for (auto x : rf.level(i)) {
        const auto c = local_counts(p, rf, x);
        sum_a += c.a;
        sum_u += c.u;
        sum_d += c.d;
    }
    std::int64_t sum_b_up = 0, sum_b_up_sq = 0;
    for (auto y : rf.level(i + 1)) {
        sum_b_up += b(y);
        sum_b_up_sq += b(y) * b(y);
    }
    std::int64_t sum_a_down_sq = 0;
    for (auto z : rf.level(i - 1))
        sum_a_down_sq += a(z) * a(z);

    CountingIdentities out;
    out.rank_index = i;
    out.checks.push_back({"sum A_i = sum B_{i+1}", sum_a, sum_b_up, sum_a == sum_b_up});
    out.checks.push_back({"sum U_i = sum B_{i+1}^2", sum_u, sum_b_up_sq, sum_u == sum_b_up_sq});
    out.checks.push_back({"sum D_i = sum A_{i-1}^2", sum_d, sum_a_down_sq, sum_d == sum_a_down_sq});
    return out;
}

std::size_t interval_cardinality(const Poset& p, ElementIndex a, ElementIndex b)
{
    if (a >= p.size() || b >= p.size())
        throw Error(ErrorKind::UnknownIdentifier, "element index out of range");
    if (!p.less_equal(a, b))
        throw Error(ErrorKind::NotComparable, "'" + p.name(a) + "' is not below '" + p.name(b) + "'",
                    p.name(a) + "," + p.name(b));
    if (a == b)
        return 1;
    return (p.above(a) & p.below(b)).count() + 2;
}

std::size_t interval_cardinality(const Poset& p, std::string_view a, std::string_view b)
{
    return interval_cardinality(p, p.index_of(a), p.index_of(b));
}

} // namespace rankcurv
