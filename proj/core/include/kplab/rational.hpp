#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace kplab {

/// Arbitrary-precision rational in canonical form.
using Rat = mpq_class;

Rat make_rat(long num, long den = 1);

/// Parses "3", "-3/4" or an exact decimal like "0.25". Never goes through
/// floating point.
Rat parse_rat(std::string_view text);

std::string to_string(const Rat& x);

/// x^e for any integer e; throws NotInvertibleError for 0^negative.
Rat pow(const Rat& x, long e);

/// Exact n-th root if it exists in Q.
std::optional<Rat> exact_root(const Rat& x, unsigned long n);

bool is_integer(const Rat& x);

/// Requires is_integer(x); throws LatticeError otherwise.
long to_long(const Rat& x, std::string_view what);

}  // namespace kplab
