// Copyright 2026 The vacsep Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace vacsep::cli {

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kScanCsvHeader = "r,z,zprime,L,F_expanded,F_detform,verdict,max_flag";

/// Entry point behind the `vacsep` executable. `args` excludes the program
/// name. Returns 0 on success, 2 on a usage error, 1 when a computation fails
/// or a checked property does not hold. Results go to `--out` when given,
/// otherwise to `out`; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Parses "v", "start:stop:count" or a comma-separated mix of both.
/// Throws std::invalid_argument on malformed input.
std::vector<double> parse_values(const std::string& text);

/// printf("%.17g") equivalent, independent of the C locale.
std::string format_number(double value);

}  // namespace vacsep::cli
