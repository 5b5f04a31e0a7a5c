#pragma once

#include <string>
#include <string_view>

#include "composita/composita.hpp"
#include "composita/series.hpp"

namespace composita {

// Text forms shared by the CLI and test fixtures. Rationals print as "p/q"
// with the denominator omitted when 1.

/// One coefficient per line, "index<TAB>value", indices ascending from 0.
std::string series_to_text(const Series& s);

/// Parses the series text form. Blank lines and lines starting with '#' are
/// ignored; indices must be strictly increasing, gaps read as zero
/// coefficients, and the largest index fixes the order. Throws
/// std::invalid_argument on malformed input.
Series series_from_text(std::string_view text, Kind kind);

/// Reads integer EGF coefficients e(1..N), one per line ('#' comments and
/// blank lines ignored), into an exponential series with c(0) = 0 and
/// c(n) = e(n)/n!. Non-integer lines are rejected; the theorems' hypotheses
/// require integer e(n).
Series egf_from_integer_lines(std::string_view text);

/// CSV with header "n,k,value", one row per table entry, n ascending then k.
std::string to_csv(const CompositaTable& table);

}  // namespace composita
