#pragma once

#include <string>

#include "oafrac/oarray.hpp"

namespace oafrac {

/// Fixed version string stamped into structured output; no timestamps, so
/// emitted files are byte-reproducible.
extern const char* const kToolVersion;

/// Render an array in the plain text exchange format:
///   line 1:        k N
///   line 2:        one symbol-set tag per factor (Z2, S3, S3b, D4, D5, ...)
///   lines 3..k+2:  N symbol labels forming row i, single-space separated
/// Lines whose first non-blank character is '#' are comments.
std::string format_array(const OrthogonalArray& d);

/// Parse the text format. Throws ParseError with a 1-based line/column
/// position on wrong counts, unknown tags, or unknown symbols.
OrthogonalArray parse_array(const std::string& text);

/// JSON mirror of the same content: {spec, tags, rows, provenance}.
std::string array_to_json(const OrthogonalArray& d);

}  // namespace oafrac
