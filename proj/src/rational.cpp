#include "coxperron/rational.hpp"

#include <cctype>
#include <cstdlib>

#include "coxperron/errors.hpp"

namespace coxperron {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

Integer parse_integer(std::string_view s, std::string_view whole) {
    std::string_view body = s;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
    if (!all_digits(body)) {
        throw PreconditionError("malformed number '" + std::string(whole) + "'");
    }
    Integer z;
    z.set_str(std::string(s.front() == '+' ? s.substr(1) : s), 10);
    return z;
}

}  // namespace

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw PreconditionError("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational parse_rational(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.empty()) throw PreconditionError("empty number");

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        Integer num = parse_integer(text.substr(0, slash), text);
        std::string_view den_text = text.substr(slash + 1);
        if (!all_digits(den_text)) throw PreconditionError("malformed number '" + std::string(text) + "'");
        return make_rational(num, parse_integer(den_text, text));
    }

    // Decimal with optional exponent.
    std::string_view mantissa = text;
    long exponent = 0;
    if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
        mantissa = text.substr(0, e);
        std::string exp_text(text.substr(e + 1));
        std::string_view exp_body = exp_text;
        if (!exp_body.empty() && (exp_body.front() == '-' || exp_body.front() == '+')) exp_body.remove_prefix(1);
        if (!all_digits(exp_body) || exp_body.size() > 6) {
            throw PreconditionError("malformed number '" + std::string(text) + "'");
        }
        exponent = std::strtol(exp_text.c_str(), nullptr, 10);
    }

    bool negative = false;
    if (!mantissa.empty() && (mantissa.front() == '-' || mantissa.front() == '+')) {
        negative = mantissa.front() == '-';
        mantissa.remove_prefix(1);
    }
    std::string digits;
    auto dot = mantissa.find('.');
    if (dot == std::string_view::npos) {
        digits = std::string(mantissa);
    } else {
        std::string_view frac = mantissa.substr(dot + 1);
        digits = std::string(mantissa.substr(0, dot)) + std::string(frac);
        exponent -= static_cast<long>(frac.size());
    }
    if (!all_digits(digits)) throw PreconditionError("malformed number '" + std::string(text) + "'");

    Integer num(digits, 10);
    if (negative) num = -num;
    if (exponent >= 0) return Rational(num * ipow(10, static_cast<unsigned long>(exponent)));
    return make_rational(num, ipow(10, static_cast<unsigned long>(-exponent)));
}

std::string to_string(const Rational& q) { return q.get_str(10); }

std::string to_decimal(const Rational& q, int digits) {
    if (digits < 0) digits = 0;
    Integer scale = ipow(10, static_cast<unsigned long>(digits));
    // round half away from zero
    Rational scaled = abs(q) * scale + Rational(1, 2);
    Integer rounded = scaled.get_num() / scaled.get_den();
    std::string body = rounded.get_str(10);
    if (digits > 0) {
        if (body.size() <= static_cast<std::size_t>(digits)) {
            body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
        }
        body.insert(body.size() - static_cast<std::size_t>(digits), ".");
    }
    if (q < 0 && rounded != 0) body.insert(0, "-");
    return body;
}

Integer ipow(const Integer& base, unsigned long exp) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

Rational rpow(const Rational& base, unsigned long exp) {
    Rational r(ipow(base.get_num(), exp), ipow(base.get_den(), exp));
    r.canonicalize();
    return r;
}

}  // namespace coxperron
