#include "shiftlab/systems/exact.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <sstream>

namespace shiftlab {

BigInt floor_rat(const BigRat& q) {
    BigInt n = numerator(q);
    BigInt d = denominator(q);
    BigInt f = n / d;
    if (n < 0 && f * d != n) --f;
    return f;
}

BigRat frac_rat(const BigRat& q) { return q - BigRat(floor_rat(q)); }

double to_double(const BigRat& q) { return q.convert_to<double>(); }

BigRat parse_rational(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw error("empty rational literal");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return BigRat(BigInt(s));
        BigInt num(s.substr(0, slash));
        BigInt den(s.substr(slash + 1));
        if (den == 0) throw error("zero denominator in '" + text + "'");
        return BigRat(num, den);
    } catch (const std::exception& e) {
        throw error("malformed rational '" + text + "': " + e.what());
    }
}

std::string format_rational(const BigRat& q) {
    std::ostringstream out;
    out << numerator(q);
    if (denominator(q) != 1) out << "/" << denominator(q);
    return out.str();
}

BigRat eval_exact(const ExactValue& v, const BigRat& theta) {
    return v.q + v.c * theta;
}

const BigRat& default_theta() {
    static const BigRat theta = [] {
        const std::string digits =
            "6180339887498948482045868343656381177203091798057628621354486227"
            "0526046281890244";
        BigInt den = 1;
        for (size_t i = 0; i < digits.size(); ++i) den *= 10;
        return BigRat(BigInt(digits), den);
    }();
    return theta;
}

namespace {

// Splits off a trailing theta marker; returns the coefficient prefix.
std::optional<std::string> strip_theta(const std::string& s) {
    static const std::string ascii = "theta";
    static const std::string utf8 = "\xce\xb8";
    if (s.size() >= ascii.size() &&
        s.compare(s.size() - ascii.size(), ascii.size(), ascii) == 0)
        return s.substr(0, s.size() - ascii.size());
    if (s.size() >= utf8.size() &&
        s.compare(s.size() - utf8.size(), utf8.size(), utf8) == 0)
        return s.substr(0, s.size() - utf8.size());
    return std::nullopt;
}

BigRat parse_coefficient(std::string prefix) {
    if (prefix.empty() || prefix == "+") return 1;
    if (prefix == "-") return -1;
    if (!prefix.empty() && prefix.back() == '*') prefix.pop_back();
    return parse_rational(prefix);
}

}  // namespace

ExactValue parse_exact(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw error("empty exact-number literal");

    if (auto coef = strip_theta(s)) {
        // Either a bare theta term or "q±c theta": split at the last
        // '+'/'-' that is not the leading sign and not inside "a/b".
        const std::string& p = *coef;
        for (size_t i = p.size(); i-- > 1;) {
            if (p[i] == '+' || p[i] == '-') {
                return ExactValue(parse_rational(p.substr(0, i)),
                                  parse_coefficient(p.substr(i)));
            }
        }
        return ExactValue(0, parse_coefficient(p));
    }
    return ExactValue(parse_rational(s), 0);
}

std::string format_exact(const ExactValue& v) {
    if (v.c == 0) return format_rational(v.q);
    std::string coef;
    if (v.c == 1)
        coef = "";
    else if (v.c == -1)
        coef = "-";
    else
        coef = format_rational(v.c);
    if (v.q == 0) return coef + "theta";
    std::string sign = (v.c > 0) ? "+" : "";
    return format_rational(v.q) + sign + coef + "theta";
}

}  // namespace shiftlab
