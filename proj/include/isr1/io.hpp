#pragma once

#include <string>

#include "isr1/modring.hpp"
#include "isr1/zdecider.hpp"

namespace isr1 {

/// Parses "a11,a12;a21,a22" (optional spaces, optional leading '-').
/// Throws ParseError on malformed input.
Mat2 parse_mat2(const std::string& text);

/// Inverse of parse_mat2: "a11,a12;a21,a22" without spaces.
std::string format_mat2(const Mat2& m);

/// Decision as a JSON object:
/// { "input": [[..],[..]], "status": "unit|isr1|not_sr1|not_isr1",
///   "det": int, "content": int, "witness_E": [[..],[..]]|null,
///   "unitizer_Y": [[..],[..]]|null, "sign": +-1|null,
///   "reason": string|null, "terminal_pair": [a,b]|null }
/// Entries that do not fit in 64 bits are emitted as decimal strings.
std::string decision_to_json(const Decision& d, int indent = -1);

/// Re-reads a matrix serialized by decision_to_json ("input" style array,
/// numbers or decimal strings). Throws ParseError.
Mat2 mat2_from_json(const std::string& json_array);

/// Oracle report as JSON with stable key order.
std::string report_to_json(const OracleReport& r, int indent = -1);

/// Human-readable multi-line rendering of a decision.
std::string decision_to_text(const Decision& d);

/// Human-readable rendering of an oracle report.
std::string report_to_text(const OracleReport& r);

}  // namespace isr1
