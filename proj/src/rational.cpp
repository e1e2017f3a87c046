#include "crossvar/rational.hpp"

#include <cctype>
#include <cstdio>
#include <vector>

#include "crossvar/errors.hpp"

namespace crossvar {

Rational::Rational(const Integer& num, const Integer& den) {
    if (sgn(den) == 0) throw std::domain_error("rational with zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero rational");
    value_ /= o.value_;
    return *this;
}

namespace {

bool is_integer_literal(std::string_view s, bool allow_sign) {
    if (s.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

std::string strip_plus(std::string_view s) {
    return std::string(!s.empty() && s[0] == '+' ? s.substr(1) : s);
}

} // namespace

Rational Rational::parse(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);

    const auto slash = text.find('/');
    const std::string_view num = text.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
    if (!is_integer_literal(num, true) || (slash != std::string_view::npos && !is_integer_literal(den, false)))
        throw parse_error("not a rational number: '" + std::string(text) + "'");

    const Integer n(strip_plus(num), 10);
    if (slash == std::string_view::npos) return Rational(n);
    const Integer d(std::string(den), 10);
    if (sgn(d) == 0) throw parse_error("zero denominator in '" + std::string(text) + "'");
    return Rational(n, d);
}

std::string Rational::str() const {
    if (value_.get_den() == 1) return value_.get_num().get_str();
    return value_.get_str();
}

std::string Rational::decimal(int significant_digits) const {
    // Enough bits for the requested digits plus headroom for the exponent.
    const mp_bitcnt_t bits = static_cast<mp_bitcnt_t>(significant_digits) * 4 + 128;
    const mpf_class f(value_, bits);
    std::vector<char> buf(static_cast<std::size_t>(significant_digits) + 64);
    for (;;) {
        const int len = gmp_snprintf(buf.data(), buf.size(), "%.*Fg", significant_digits, f.get_mpf_t());
        if (len >= 0 && static_cast<std::size_t>(len) < buf.size()) return std::string(buf.data(), len);
        buf.resize(buf.size() * 2);
    }
}

Integer to_integer(__int128 value) {
    const bool negative = value < 0;
    unsigned __int128 mag = negative ? -static_cast<unsigned __int128>(value) : static_cast<unsigned __int128>(value);
    const auto hi = static_cast<std::uint64_t>(mag >> 64);
    const auto lo = static_cast<std::uint64_t>(mag);
    Integer out;
    mpz_import(out.get_mpz_t(), 1, 1, sizeof(hi), 0, 0, &hi);
    out <<= 64;
    Integer low;
    mpz_import(low.get_mpz_t(), 1, 1, sizeof(lo), 0, 0, &lo);
    out += low;
    if (negative) out = -out;
    return out;
}

Integer exact_div(const Integer& value, long divisor, const char* what) {
    Integer q;
    Integer r;
    const Integer d(divisor);
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), value.get_mpz_t(), d.get_mpz_t());
    if (sgn(r) != 0)
        throw internal_inconsistency(std::string(what) + ": " + value.get_str() + " is not divisible by " +
                                     std::to_string(divisor));
    return q;
}

std::string to_string(const Integer& value) { return value.get_str(); }

} // namespace crossvar
