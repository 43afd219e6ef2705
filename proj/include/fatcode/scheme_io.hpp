#pragma once

#include <string>

#include "fatcode/geometry.hpp"

namespace fatcode {

// Text format for schemes, one directive per line, '#' to end of line is a
// comment:
//   field rational          or  field prime <p>
//   ambient <n>
//   point <c0> <c1> ... <cn> [mult <m>]
// Coordinates are integers or a/b rationals (integers only over a prime
// field, reduced mod p). The field and ambient directives must precede the
// first point. Diagnostics carry the offending line number. A duplicate
// point (equal after projective normalization) is an error unless
// merge_duplicates is set, in which case the first occurrence keeps its
// position and takes the larger multiplicity.
FatPointScheme parse_scheme_file(const std::string& text, bool merge_duplicates = false);

// Reads the file at `path` and parses it; Io error when unreadable.
FatPointScheme load_scheme_file(const std::string& path, bool merge_duplicates = false);

// Canonical form: field, ambient, then one point line per point in scheme
// order with normalized coordinates, `mult` omitted at multiplicity 1.
// Parsing the output reproduces the scheme exactly.
std::string serialize_scheme(const FatPointScheme& scheme);

}  // namespace fatcode
