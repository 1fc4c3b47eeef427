#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace rtk {

/// Exact rational scalar. GMP keeps every value canonicalized (lowest terms,
/// positive denominator) after each arithmetic operation.
using Rat = mpq_class;
using RatVec = std::vector<Rat>;
using BigInt = mpz_class;

/// Parses "p", "p/q" or "-p/q". Throws InputError on malformed text or q = 0.
Rat parse_rat(std::string_view text);

/// Serializes as "p/q" (the denominator is always written, "3/1" for 3).
std::string format_rat(const Rat& value);

Rat dot(const RatVec& a, const RatVec& b);

}  // namespace rtk
