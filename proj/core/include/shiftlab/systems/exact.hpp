#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>

namespace shiftlab {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

BigInt floor_rat(const BigRat& q);

/// q - floor(q), always in [0, 1).
BigRat frac_rat(const BigRat& q);

double to_double(const BigRat& q);

/// Parses "a", "-a", "a/b". Throws shiftlab::error on malformed input.
BigRat parse_rational(const std::string& text);

/// Canonical form: "a" for integers, "a/b" otherwise (b > 0, reduced).
std::string format_rational(const BigRat& q);

/*
 * Points and offsets of the form q + c*theta, where theta is one fixed
 * irrational per experiment. Since 1 and theta are linearly independent
 * over the rationals, equality mod 1 is decidable on the (q, c) pair
 * alone: frac(q) == frac(q') and c == c'. All periodicity evidence in
 * this library rests on that exact comparison; the numeric value of
 * theta enters only through distances and plots.
 */
struct ExactValue {
    BigRat q;
    BigRat c;  // theta coefficient, 0 for plain rationals

    ExactValue() = default;
    ExactValue(BigRat q_, BigRat c_ = 0) : q(std::move(q_)), c(std::move(c_)) {}

    bool is_rational() const { return c == 0; }

    ExactValue operator+(const ExactValue& o) const { return {q + o.q, c + o.c}; }
    ExactValue operator-(const ExactValue& o) const { return {q - o.q, c - o.c}; }
    ExactValue scaled(const BigRat& m) const { return {q * m, c * m}; }

    /// Reduction mod 1 normalizes only the rational part; theta
    /// coefficients are compared as-is.
    ExactValue mod_one() const { return {frac_rat(q), c}; }

    bool operator==(const ExactValue& o) const { return q == o.q && c == o.c; }

    /// Exact equality of the residues mod 1.
    bool equal_mod_one(const ExactValue& o) const {
        return c == o.c && frac_rat(q) == frac_rat(o.q);
    }
};

/// Evaluates q + c*theta using a rational approximant of theta. The
/// approximant carries ~80 correct digits, so a nonzero c never flips a
/// desk-scale comparison; the c == 0 case is exact by construction.
BigRat eval_exact(const ExactValue& v, const BigRat& theta);

/// Default theta: (sqrt(5)-1)/2 truncated to 80 digits.
const BigRat& default_theta();

/// Parses "q", "q+c@", "q-c@" where @ is "theta" or the UTF-8 char.
/// Bare coefficient forms "theta", "-theta", "2theta" are accepted.
ExactValue parse_exact(const std::string& text);

/// Inverse of parse_exact, canonical: "1/4+2theta", "-theta", "3".
std::string format_exact(const ExactValue& v);

}  // namespace shiftlab
