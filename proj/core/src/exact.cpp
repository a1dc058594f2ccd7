#include "polymod/exact.hpp"

#include "polymod/errors.hpp"

#include <cctype>
#include <cstdlib>

namespace polymod {

Int binomial(long n, long k) {
    if (n < 0 || k < 0 || k > n) {
        return 0;
    }
    Int result;
    mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return result;
}

std::string format_rational(const Rational& q, int digits) {
    if (digits < 1) {
        throw InvalidParams("format_rational: digits must be >= 1");
    }
    const bool negative = sgn(q) < 0;
    Rational a = abs(q);

    Int scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));

    // Round scaled = num * 10^digits / den half to even.
    Int scaled_num = a.get_num() * scale;
    const Int& den = a.get_den();
    Int quot, rem;
    mpz_fdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), scaled_num.get_mpz_t(),
                den.get_mpz_t());
    Int twice_rem = 2 * rem;
    if (twice_rem > den || (twice_rem == den && mpz_odd_p(quot.get_mpz_t()))) {
        quot += 1;
    }

    Int int_part = quot / scale;
    Int frac_part = quot % scale;
    std::string frac = frac_part.get_str();
    frac.insert(frac.begin(), static_cast<size_t>(digits) - frac.size(), '0');

    std::string out;
    if (negative && quot != 0) {
        out += '-';
    }
    out += int_part.get_str();
    out += '.';
    out += frac;
    return out;
}

namespace {

Rational pow10(long e) {
    Int p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10,
                  static_cast<unsigned long>(e < 0 ? -e : e));
    Rational r(p);
    if (e < 0) {
        r = 1 / r;
    }
    return r;
}

} // namespace

Rational parse_rational(const std::string& text) {
    if (text.empty()) {
        throw InvalidParams("parse_rational: empty input");
    }
    const auto bad = [&] {
        return InvalidParams("parse_rational: malformed value '" + text + "'");
    };

    if (auto slash = text.find('/'); slash != std::string::npos) {
        Int num, den;
        if (num.set_str(text.substr(0, slash), 10) != 0 ||
            den.set_str(text.substr(slash + 1), 10) != 0) {
            throw bad();
        }
        if (den == 0) {
            throw InvalidParams("parse_rational: zero denominator");
        }
        Rational r(num, den);
        r.canonicalize();
        return r;
    }

    // [sign] digits [. digits] [e|E exponent]
    std::string mantissa = text;
    long exponent = 0;
    if (auto e = text.find_first_of("eE"); e != std::string::npos) {
        const std::string exp_str = text.substr(e + 1);
        char* end = nullptr;
        exponent = std::strtol(exp_str.c_str(), &end, 10);
        if (exp_str.empty() || *end != '\0') {
            throw bad();
        }
        mantissa = text.substr(0, e);
    }
    long frac_digits = 0;
    if (auto dot = mantissa.find('.'); dot != std::string::npos) {
        frac_digits = static_cast<long>(mantissa.size() - dot - 1);
        mantissa.erase(dot, 1);
    }
    if (mantissa.empty() || mantissa == "-" || mantissa == "+") {
        throw bad();
    }
    Int digits_value;
    if (digits_value.set_str(mantissa, 10) != 0) {
        throw bad();
    }
    Rational r(digits_value);
    r *= pow10(exponent - frac_digits);
    return r;
}

std::string rational_string(const Rational& q) {
    return q.get_str();
}

} // namespace polymod
