#ifndef QFA_FORMAT_HPP
#define QFA_FORMAT_HPP

#include <string>
#include <vector>

#include <qfa/element.hpp>
#include <qfa/scalar.hpp>
#include <qfa/series.hpp>

namespace qfa
{

// Canonical text form, readable back by the expression parser:
//   terms by descending grading, then ascending index sequence;
//   "c * e1 v e2" with coefficient 1 omitted and -1 folded into the sign;
//   later terms joined by " + " / " - ", the leading term carrying its own sign.

namespace detail
{

inline bool prints_negative(const scalar &c)
{
    return c.real() < 0 || (c.real() == 0 && c.imag() < 0);
}

// body is the basis text ("1" for the unit word, or "a ⊗ b" for tensors).
inline std::string format_term(const scalar &c, const std::string &body, bool is_unit, bool leading)
{
    scalar shown = c;
    std::string out;
    if (leading) {
        if (c == scalar(-1L) && !is_unit) {
            return "-" + body;
        }
    } else {
        if (prints_negative(c)) {
            out = " - ";
            shown = -c;
        } else {
            out = " + ";
        }
    }
    if (is_unit) {
        return out + shown.str();
    }
    if (shown == scalar(1L)) {
        return out + body;
    }
    return out + shown.str() + " * " + body;
}

} // namespace detail

inline std::string format(const scalar &c)
{
    return c.str();
}

inline std::string format(const element &u)
{
    if (u.is_zero()) {
        return "0";
    }
    std::string out;
    bool leading = true;
    for (const auto &[m, c] : u.terms()) {
        out += detail::format_term(c, m.str(), m.is_unit(), leading);
        leading = false;
    }
    return out;
}

inline std::string format(const tensor_element &t)
{
    if (t.terms().empty()) {
        return "0";
    }
    std::string out;
    bool leading = true;
    for (const auto &[key, c] : t.terms()) {
        std::string body;
        for (std::size_t s = 0; s < key.size(); ++s) {
            if (s > 0) {
                body += " ⊗ ";
            }
            body += key[s].str();
        }
        out += detail::format_term(c, body, false, leading);
        leading = false;
    }
    return out;
}

// One line per order: "lambda^n: value".
template <typename T>
std::vector<std::string> format_lines(const formal_series<T> &s)
{
    std::vector<std::string> lines;
    for (std::size_t n = 0; n <= s.order(); ++n) {
        lines.push_back("lambda^" + std::to_string(n) + ": " + format(s[n]));
    }
    return lines;
}

template <typename T>
std::string format(const formal_series<T> &s)
{
    std::string out;
    for (const auto &line : format_lines(s)) {
        if (!out.empty()) {
            out += '\n';
        }
        out += line;
    }
    return out;
}

} // namespace qfa

#endif
