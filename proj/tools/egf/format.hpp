#pragma once

#include <span>
#include <string>

#include "composita/composita.hpp"
#include "composita/congruence.hpp"
#include "composita/series.hpp"

namespace egf {

enum class Format { csv, text, jsonl };

Format parse_format(const std::string& name);

/// Composita table: CSV per the shared schema, an aligned triangle, or one
/// JSON object per entry.
std::string format_table(const composita::CompositaTable& table, Format format);

/// EGF coefficient sequence g(0..N), "p/q" per line in text form.
std::string format_egf_sequence(const composita::Series& g, Format format);

/// Integer sequence values, newline-separated decimals in text form.
std::string format_integers(std::span<const composita::Integer> values, Format format);

/// Scan output: one record per n, certificates appended, then a summary
/// line with the witness count.
std::string format_scan(const composita::ScanResult& result, Format format);

}  // namespace egf
