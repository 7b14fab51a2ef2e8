#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "scd/search.hpp"

namespace scd {

/// 64-bit FNV-1a.
std::uint64_t fnv1a(std::string_view data);

/// Header carried by every report file:
///   # scd <version>
///   # command <name>
///   # config <16 hex digits>
///   # seed <seed>
void write_report_header(std::ostream& out, std::string_view command, std::uint64_t config_hash,
                         std::uint64_t seed);

/// Search report: a summary block of '#' lines, then a column header and one
/// tab-separated record per evaluation:
///   param_set  k  silhouette  normalized  phase  millis
/// Missing values print as '-'. Millis print only with @a timings, so
/// reports are byte-reproducible by default.
void write_search_report(const SearchReport& report, std::ostream& out, bool timings);

/// "k<TAB>silhouette<TAB>normalized" per line.
void write_sweep_trace(std::span<const SweepRecord> trace, std::ostream& out);

} // namespace scd
