#pragma once

#include <string>

#include "json.hpp"

#include "fdps/applications.hpp"
#include "fdps/numeric.hpp"
#include "fdps/prefactor.hpp"
#include "fdps/series.hpp"

namespace fdps {

// Stable key order so emitted documents diff cleanly.
using Json = nlohmann::ordered_json;

// Rationals travel as exact "p" / "p/q" strings, never floats, so every
// round trip is bit-exact.
Json series_to_json(const TruncatedSeries& s);
TruncatedSeries series_from_json(const Json& j);

Json prefactor_to_json(const Prefactor& p);
Prefactor prefactor_from_json(const Json& j);

// asy_terms limits how many expansion coefficients the emitters include:
// -1 keeps everything stored, 0 yields an empty expansion block.
Json table_to_json(const SequenceTable& t, int asy_terms = -1);
SequenceTable table_from_json(const Json& j);

Json fit_report_to_json(const FitReport& r);
Json remainder_to_json(const RemainderCheck& rc);

// CSV layout: header "n,series,asy", one row per index, cells holding exact
// rational strings (blank once past the respective truncation order).
std::string table_to_csv(const SequenceTable& t, int asy_terms = -1);

// Human-readable layout for terminals.
std::string table_to_pretty(const SequenceTable& t, int asy_terms = -1);

}  // namespace fdps
