#pragma once

#include <ostream>
#include <string_view>

#include "ebell/qstate.hpp"
#include "ebell/scan.hpp"

namespace ebell::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitViolation = 2;

// Radians as a decimal literal or a multiple of pi: "1.5", "pi", "-pi/2",
// "2pi", "3*pi/4", "0.5pi". Throws InvalidInputError.
double parse_angle(std::string_view text);

// "[a,b)", "(a,b]", "[a,b]", "(a,b)" or "a:b" (same as "[a,b)"). Endpoints
// accept the parse_angle syntax. Step comes from the caller.
AngleRange parse_range(std::string_view text, double step);

// JSON 2x2 array whose entries are [re, im] pairs or plain reals.
GeneralMatrix parse_matrix_json(std::string_view text);

// Entry point behind the `ebell` executable. Exit codes: 0 success or the
// inequality holds, 2 a violation was found, 1 usage or computation error.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ebell::cli
