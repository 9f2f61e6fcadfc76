#include "relosc/rational.hpp"

#include "relosc/errors.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace relosc {

Rational::Rational(long num, long den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational Rational::from_double(double d) {
    if (!std::isfinite(d)) throw std::invalid_argument("Rational: non-finite double");
    return Rational(mpq_class(d));
}

namespace {

bool valid_int_token(std::string_view s) {
    if (!s.empty() && (s[0] == '+' || s[0] == '-')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

} // namespace

Rational Rational::from_string(std::string_view s) {
    // Trim surrounding whitespace.
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    if (s.empty()) throw ParseError("empty rational literal");

    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        auto num = s.substr(0, slash);
        auto den = s.substr(slash + 1);
        if (!valid_int_token(num) || !valid_int_token(den))
            throw ParseError("bad rational literal: " + std::string(s));
        mpq_class q(std::string(s), 10);
        if (q.get_den() == 0) throw ParseError("zero denominator: " + std::string(s));
        q.canonicalize();
        return Rational(std::move(q));
    }

    if (auto dot = s.find('.'); dot != std::string_view::npos) {
        auto intpart = s.substr(0, dot);
        auto frac = s.substr(dot + 1);
        if (frac.empty() || !valid_int_token(frac) || frac[0] == '+' || frac[0] == '-')
            throw ParseError("bad decimal literal: " + std::string(s));
        bool neg = !intpart.empty() && intpart[0] == '-';
        if (!intpart.empty() && (intpart[0] == '+' || intpart[0] == '-')) intpart.remove_prefix(1);
        if (!intpart.empty() && !valid_int_token(intpart))
            throw ParseError("bad decimal literal: " + std::string(s));
        mpz_class whole = intpart.empty() ? mpz_class(0) : mpz_class(std::string(intpart), 10);
        mpz_class num(std::string(frac), 10);
        mpz_class den = 1;
        for (size_t i = 0; i < frac.size(); ++i) den *= 10;
        mpq_class q(whole * den + num, den);
        if (neg) q = -q;
        q.canonicalize();
        return Rational(std::move(q));
    }

    if (!valid_int_token(s)) throw ParseError("bad integer literal: " + std::string(s));
    return Rational(mpq_class(std::string(s), 10));
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("Rational: division by zero");
    return Rational(mpq_class(a.v_ / b.v_));
}

std::string Rational::to_string() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_str();
}

std::pair<double, long> Rational::to_double_2exp() const {
    if (is_zero()) return {0.0, 0};
    long en = 0, ed = 0;
    double dn = mpz_get_d_2exp(&en, v_.get_num().get_mpz_t());
    double dd = mpz_get_d_2exp(&ed, v_.get_den().get_mpz_t());
    double m = dn / dd; // |m| in (0.5, 2)
    long e = en - ed;
    if (std::abs(m) >= 1.0) {
        m /= 2.0;
        e += 1;
    }
    return {m, e};
}

} // namespace relosc
