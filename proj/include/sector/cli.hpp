#ifndef SECTOR_CLI_HPP
#define SECTOR_CLI_HPP

#include "sector/polynomial.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

namespace sector {

enum ExitCode : int {
    kExitOk = 0,
    kExitCounterexample = 1,
    kExitIndeterminate = 2,
    kExitUsage = 3,
    kExitPrecondition = 4,
};

struct CliConfig {
    int precision_ceiling_bits = 1024;
    Rational radius_target{1, 1000000000000};
    int fuzz_trials = 100;
    std::pair<int, int> degree_range{2, 24};
    std::uint64_t seed = 0;
    std::optional<std::string> output_path;

    // Throws InvalidArgument unless ceiling >= 64 and 2 <= lo <= hi <= 64.
    void validate() const;
};

// "1,2,3/2" (ascending coefficients) or "z^2+2z+1"; whitespace is ignored.
// Throws ParseError (with the offending position) or ZeroPolynomial.
Polynomial parse_polynomial(std::string_view text);
// "2/3pi", "2/3 pi", "3/5", "1", "pi". Throws ParseError or OutOfRange.
Angle parse_angle(std::string_view text);
// "1e-12", "0.001", "1/1000", "3".
Rational parse_decimal(std::string_view text);

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);

} // namespace sector

#endif
