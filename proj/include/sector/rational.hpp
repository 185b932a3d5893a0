#ifndef SECTOR_RATIONAL_HPP
#define SECTOR_RATIONAL_HPP

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace sector {

using Rational = mpq_class;
using Integer = mpz_class;

// Parses "p", "-p", "p/q" (decimal integers, optional sign). Returns nullopt on
// malformed input or a zero denominator.
std::optional<Rational> parse_rational(std::string_view text);

// Canonical form: "p" for integers, "p/q" otherwise.
inline std::string to_string(const Rational& q) { return q.get_str(); }

inline Integer floor(const Rational& q) {
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

// Smallest dyadic rational >= q with denominator 2^bits.
Rational dyadic_ceil(const Rational& q, unsigned bits);

// Best rational approximation of x with denominator <= max_den (continued fractions).
Rational best_rational(const Rational& x, const Integer& max_den);

} // namespace sector

#endif
