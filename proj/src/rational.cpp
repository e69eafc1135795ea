#include <nseries/errors.hpp>
#include <nseries/rational.hpp>

#include <cctype>

namespace nseries
{

namespace
{

bool all_digits(std::string_view s)
{
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    return true;
}

} // namespace

Rational parse_rational(std::string_view text)
{
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    const auto num = body.substr(0, slash);
    const auto den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
    if (!all_digits(num)) {
        throw ParseError("expected rational numerator, got '" + std::string(text) + "'", 0);
    }
    if (!all_digits(den)) {
        throw ParseError("expected rational denominator, got '" + std::string(text) + "'", slash + 1);
    }
    mpz_class n(std::string(num), 10), d(std::string(den), 10);
    if (d == 0) {
        throw ParseError("zero denominator in '" + std::string(text) + "'", slash + 1);
    }
    Rational r(n, d);
    r.canonicalize();
    return negative ? Rational(-r) : r;
}

std::string to_string(const Rational &r)
{
    return r.get_str();
}

Rational factorial(unsigned n)
{
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(f);
}

Rational binomial(unsigned n, unsigned k)
{
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Rational(b);
}

Rational int_pow(const Rational &r, std::int64_t e)
{
    if (e < 0 && r == 0) {
        throw DomainError("negative power of zero");
    }
    const auto m = static_cast<unsigned long>(e < 0 ? -e : e);
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), r.get_num_mpz_t(), m);
    mpz_pow_ui(den.get_mpz_t(), r.get_den_mpz_t(), m);
    Rational out = e < 0 ? Rational(den, num) : Rational(num, den);
    out.canonicalize();
    return out;
}

} // namespace nseries
