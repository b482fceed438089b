// Copyright 2026 The fqlcu Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <string>

#include "fqlcu/diagonal_lcu.hpp"
#include "fqlcu/pauli_lcu.hpp"

namespace fqlcu {

/// Shortest decimal text that parses back to the same double.
std::string format_double(double v);

/// CSV dumps in ascending key order with a column header line:
/// "p,q,value", "p,q,r,s,value" and "p,r,value" respectively.
void write_one_body_csv(std::ostream& out, const OneBodyCoefficients& c);
void write_two_body_csv(std::ostream& out, const TwoBodyCoefficients& c);
void write_z_pair_csv(std::ostream& out, const ZPairCoefficients& c);

/// Readers for the dumps above. Throw ParseError on malformed rows.
OneBodyCoefficients read_one_body_csv(std::istream& in, int index_bits);
TwoBodyCoefficients read_two_body_csv(std::istream& in, int index_bits);
ZPairCoefficients read_z_pair_csv(std::istream& in, int index_bits);

}  // namespace fqlcu
