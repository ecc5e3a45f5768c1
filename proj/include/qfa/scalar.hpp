#ifndef QFA_SCALAR_HPP
#define QFA_SCALAR_HPP

#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include <qfa/rational.hpp>

namespace qfa
{

// Exact complex number with rational real and imaginary parts.
class gaussian_rational
{
public:
    gaussian_rational() = default;
    gaussian_rational(long n) : m_re(n) {}
    gaussian_rational(const rational &re) : m_re(re)
    {
        m_re.canonicalize();
    }
    gaussian_rational(const rational &re, const rational &im) : m_re(re), m_im(im)
    {
        m_re.canonicalize();
        m_im.canonicalize();
    }

    static gaussian_rational i()
    {
        return {rational(0), rational(1)};
    }

    const rational &real() const
    {
        return m_re;
    }
    const rational &imag() const
    {
        return m_im;
    }
    bool is_real() const
    {
        return m_im == 0;
    }

    gaussian_rational conj() const
    {
        return {m_re, -m_im};
    }

    gaussian_rational &operator+=(const gaussian_rational &o)
    {
        m_re += o.m_re;
        m_im += o.m_im;
        return *this;
    }
    gaussian_rational &operator-=(const gaussian_rational &o)
    {
        m_re -= o.m_re;
        m_im -= o.m_im;
        return *this;
    }
    gaussian_rational &operator*=(const gaussian_rational &o)
    {
        if (m_im == 0 && o.m_im == 0) {
            m_re *= o.m_re;
            return *this;
        }
        rational re = m_re * o.m_re - m_im * o.m_im;
        rational im = m_re * o.m_im + m_im * o.m_re;
        m_re = std::move(re);
        m_im = std::move(im);
        return *this;
    }
    gaussian_rational &operator/=(const gaussian_rational &o)
    {
        if (o.is_zero()) {
            throw std::domain_error("division by zero");
        }
        if (o.m_im == 0) {
            m_re /= o.m_re;
            m_im /= o.m_re;
            return *this;
        }
        const rational norm = o.m_re * o.m_re + o.m_im * o.m_im;
        *this *= o.conj();
        m_re /= norm;
        m_im /= norm;
        return *this;
    }

    friend gaussian_rational operator+(gaussian_rational a, const gaussian_rational &b)
    {
        return a += b;
    }
    friend gaussian_rational operator-(gaussian_rational a, const gaussian_rational &b)
    {
        return a -= b;
    }
    friend gaussian_rational operator*(gaussian_rational a, const gaussian_rational &b)
    {
        return a *= b;
    }
    friend gaussian_rational operator/(gaussian_rational a, const gaussian_rational &b)
    {
        return a /= b;
    }
    friend gaussian_rational operator-(const gaussian_rational &a)
    {
        return {-a.m_re, -a.m_im};
    }

    friend bool operator==(const gaussian_rational &a, const gaussian_rational &b)
    {
        return a.m_re == b.m_re && a.m_im == b.m_im;
    }

    bool is_zero() const
    {
        return m_re == 0 && m_im == 0;
    }
    friend bool is_zero(const gaussian_rational &a)
    {
        return a.is_zero();
    }

    // "p/q" when real, otherwise "p/q+r/si" (the literal form accepted by the expression parser).
    std::string str() const
    {
        if (m_im == 0) {
            return m_re.get_str();
        }
        std::string s = m_re.get_str();
        if (m_im > 0) {
            s += '+';
        }
        s += m_im.get_str();
        s += 'i';
        return s;
    }

    friend std::ostream &operator<<(std::ostream &os, const gaussian_rational &a)
    {
        return os << a.str();
    }

private:
    rational m_re;
    rational m_im;
};

using scalar = gaussian_rational;

// Parses "p/q", "p/q+r/s i" or "p/q-r/s i" (whitespace around the sign and before 'i' allowed).
inline scalar parse_scalar(std::string_view text)
{
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
            s.remove_prefix(1);
        }
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) {
            s.remove_suffix(1);
        }
        return s;
    };
    std::string_view s = trim(text);
    if (s.empty()) {
        throw std::invalid_argument("empty scalar");
    }
    if (s.back() != 'i') {
        return scalar(parse_rational(s));
    }
    s.remove_suffix(1);
    s = trim(s);
    // The imaginary sign is the last '+' or '-' that is not the leading sign.
    const auto split = s.find_last_of("+-");
    if (split == std::string_view::npos || split == 0) {
        throw std::invalid_argument("malformed complex scalar '" + std::string(text) + "'");
    }
    const auto re = parse_rational(trim(s.substr(0, split)));
    auto im_text = trim(s.substr(split + 1));
    auto im = parse_rational(im_text);
    if (s[split] == '-') {
        im = -im;
    }
    return {re, im};
}

} // namespace qfa

#endif
