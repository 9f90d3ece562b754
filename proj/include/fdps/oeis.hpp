#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "fdps/rational.hpp"

namespace fdps {

struct SequenceEntry {
    long index = 0;
    Rational value;
};

// Reads either an OEIS b-file ("n a(n)" per line) or a plain sequence (one
// value per line, indexed 0, 1, 2, ... in reading order). Lines starting
// with '#' and blank lines are ignored; the two layouts cannot be mixed.
// Values may be integers or "p/q" rationals. Parse errors carry the 1-based
// line number.
std::vector<SequenceEntry> parse_sequence_stream(std::istream& in);
std::vector<SequenceEntry> parse_sequence_file(const std::string& path);

// Lays entries out as series coefficients: entry (n, v) becomes the
// coefficient of x^(n + offset). Indices must be contiguous and ascending,
// the first mapped exponent nonnegative; exponents below the first entry
// fill with zero.
std::vector<Rational> sequence_to_coefficients(const std::vector<SequenceEntry>& entries,
                                               long offset = 0);

}  // namespace fdps
