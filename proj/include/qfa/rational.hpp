#ifndef QFA_RATIONAL_HPP
#define QFA_RATIONAL_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace qfa
{

using integer = mpz_class;
using rational = mpq_class;

inline integer factorial(unsigned n)
{
    integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline integer binomial(unsigned n, unsigned k)
{
    integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

// Accepts "p", "-p", "p/q" with q > 0. Surrounding whitespace is not allowed.
inline rational parse_rational(std::string_view text)
{
    auto bad = [&] { return std::invalid_argument("malformed rational '" + std::string(text) + "'"); };
    if (text.empty()) {
        throw bad();
    }
    std::size_t pos = 0;
    if (text[0] == '-' || text[0] == '+') {
        ++pos;
    }
    const auto digits = [&](std::size_t from) {
        std::size_t p = from;
        while (p < text.size() && text[p] >= '0' && text[p] <= '9') {
            ++p;
        }
        return p;
    };
    const auto num_end = digits(pos);
    if (num_end == pos) {
        throw bad();
    }
    std::string num(text.substr(0, num_end));
    if (num[0] == '+') {
        num.erase(0, 1);
    }
    std::string den = "1";
    if (num_end < text.size()) {
        if (text[num_end] != '/') {
            throw bad();
        }
        const auto den_end = digits(num_end + 1);
        if (den_end == num_end + 1 || den_end != text.size()) {
            throw bad();
        }
        den = std::string(text.substr(num_end + 1, den_end - num_end - 1));
    }
    integer d(den);
    if (d == 0) {
        throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    }
    rational r(integer(num), d);
    r.canonicalize();
    return r;
}

inline std::string to_string(const rational &q)
{
    return q.get_str();
}

} // namespace qfa

#endif
