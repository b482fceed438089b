// Copyright 2026 The fqlcu Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <map>
#include <string>

#include "fqlcu/diagonal_lcu.hpp"
#include "fqlcu/pauli_lcu.hpp"
#include "fqlcu/resource_estimator.hpp"

namespace fqlcu {

/// Lowercase label with runs of other characters collapsed to '_'.
std::string slug(const std::string& label);

/// Keyed text documents, one "key = value" line each, doubles in shortest
/// round-trip form.
void write_summary_report(std::ostream& out, const LcuSummary& s);
void write_norm_report(std::ostream& out, const NormBreakdown& b);
void write_estimate_report(std::ostream& out, const ResourceEstimate& e);

/// Parses a keyed text document back into key/value strings.
std::map<std::string, std::string> parse_keyed_text(std::istream& in);

/// Single-line CSV form of an estimate for scan aggregation.
std::string estimate_csv_header();
std::string estimate_csv_row(const ResourceEstimate& e);

}  // namespace fqlcu
