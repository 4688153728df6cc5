#include "semihom/rational.hpp"

#include <cctype>

namespace semihom {

Rational::Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0)
        throw std::invalid_argument("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational::Rational(mpq_class value) : v_(std::move(value)) { v_.canonicalize(); }

namespace {

bool is_integer_text(std::string_view s, bool allow_sign) {
    if (s.empty())
        return false;
    std::size_t i = 0;
    if (allow_sign && (s[0] == '-' || s[0] == '+'))
        i = 1;
    if (i == s.size())
        return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            return false;
    return true;
}

mpz_class to_mpz(std::string_view s) {
    if (!s.empty() && s[0] == '+')
        s.remove_prefix(1);
    return mpz_class(std::string(s), 10);
}

}  // namespace

Rational Rational::parse(std::string_view text) {
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    if (!is_integer_text(num, true))
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    if (slash == std::string_view::npos)
        return Rational(to_mpz(num), mpz_class(1));
    std::string_view den = text.substr(slash + 1);
    if (!is_integer_text(den, false))
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    return Rational(to_mpz(num), to_mpz(den));
}

std::string Rational::str() const {
    if (v_.get_den() == 1)
        return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero())
        throw std::domain_error("division by zero rational");
    v_ /= o.v_;
    return *this;
}

void Rational::add_mul(const Rational& a, const Rational& b) {
    if (a.is_zero() || b.is_zero())
        return;
    v_ += a.v_ * b.v_;
}

void Rational::sub_mul(const Rational& a, const Rational& b) {
    if (a.is_zero() || b.is_zero())
        return;
    v_ -= a.v_ * b.v_;
}

}  // namespace semihom
