#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace starmoments {

using BigInt = boost::multiprecision::cpp_int;

/// Wide accumulator for walk counts in finite graphs.
using WideCount = unsigned __int128;

inline BigInt to_bigint(WideCount x)
{
    BigInt hi = static_cast<std::uint64_t>(x >> 64);
    return (hi << 64) | BigInt(static_cast<std::uint64_t>(x));
}

inline std::string to_string(const BigInt& x) { return x.str(); }

} // namespace starmoments
