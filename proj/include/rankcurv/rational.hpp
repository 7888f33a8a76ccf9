#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <string>

// boost 1.74's mixed rational/integer equality recurses forever under C++20
// rewritten comparisons; these exact-match overloads take precedence.
namespace boost {
#define RANKCURV_MIXED_EQ(I)                                                                                  \
    inline bool operator==(const rational<std::int64_t>& q, I i)                                              \
    {                                                                                                         \
        return q.denominator() == 1 && q.numerator() == static_cast<std::int64_t>(i);                         \
    }                                                                                                         \
    inline bool operator==(I i, const rational<std::int64_t>& q) { return q == i; }                           \
    inline bool operator!=(const rational<std::int64_t>& q, I i) { return !(q == i); }                        \
    inline bool operator!=(I i, const rational<std::int64_t>& q) { return !(q == i); }
RANKCURV_MIXED_EQ(int)
RANKCURV_MIXED_EQ(long)
RANKCURV_MIXED_EQ(long long)
#undef RANKCURV_MIXED_EQ
} // namespace boost

namespace rankcurv {

/// Exact rational, always kept in lowest terms with a positive denominator.
using Rational = boost::rational<std::int64_t>;

inline std::string to_string(const Rational& q)
{
    if (q.denominator() == 1)
        return std::to_string(q.numerator());
    return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

} // namespace rankcurv
