#ifndef QFA_COEFFICIENT_HPP
#define QFA_COEFFICIENT_HPP

#include <concepts>

#include <qfa/rational.hpp>

namespace qfa
{

// A commutative ring containing the rationals. The algebra never divides by a coefficient,
// so exact Gaussian rationals and symbolic polynomials over Q both qualify.
template <typename R>
concept coefficient = std::regular<R> && std::constructible_from<R, long> && std::constructible_from<R, const rational &>
                      && requires(R a, const R &b) {
                             { a + b } -> std::convertible_to<R>;
                             { a - b } -> std::convertible_to<R>;
                             { a * b } -> std::convertible_to<R>;
                             { -b } -> std::convertible_to<R>;
                             { a += b };
                             { a -= b };
                             { a *= b };
                             { is_zero(b) } -> std::same_as<bool>;
                         };

namespace detail
{

// Unqualified call so that ADL finds is_zero for coefficient types from other namespaces,
// also inside classes whose own is_zero member would hide it.
template <typename R>
bool coefficient_is_zero(const R &c)
{
    return is_zero(c);
}

} // namespace detail

} // namespace qfa

#endif
