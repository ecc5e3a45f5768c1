#ifndef QFA_ALGEBRA_HPP
#define QFA_ALGEBRA_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include <qfa/element.hpp>
#include <qfa/rational.hpp>

namespace qfa
{

// Calls f(left, right, multiplicity) for every term of the coproduct of m, i.e. for every
// componentwise split j_i <= k_i of the exponents, with multiplicity prod_i C(k_i, j_i).
// This is the shuffle formula with equal labels merged.
template <typename F>
void for_each_split(const monomial &m, F &&f)
{
    const auto &factors = m.factors();
    const std::size_t n = factors.size();
    std::vector<std::uint32_t> j(n, 0);
    // Pascal rows up to the largest exponent.
    std::uint32_t kmax = 0;
    for (const auto &fa : factors) {
        kmax = std::max(kmax, fa.second);
    }
    std::vector<std::vector<std::uint64_t>> pascal(kmax + 1);
    for (std::uint32_t r = 0; r <= kmax; ++r) {
        pascal[r].assign(r + 1, 1);
        for (std::uint32_t c = 1; c < r; ++c) {
            pascal[r][c] = pascal[r - 1][c - 1] + pascal[r - 1][c];
        }
    }
    while (true) {
        std::vector<monomial::factor> left, right;
        left.reserve(n);
        right.reserve(n);
        std::uint64_t mult = 1;
        for (std::size_t s = 0; s < n; ++s) {
            const auto [idx, k] = factors[s];
            if (j[s] > 0) {
                left.emplace_back(idx, j[s]);
            }
            if (k - j[s] > 0) {
                right.emplace_back(idx, k - j[s]);
            }
            mult *= pascal[k][j[s]];
        }
        f(monomial::from_factors(std::move(left)), monomial::from_factors(std::move(right)), mult);
        std::size_t s = 0;
        while (s < n && j[s] == factors[s].second) {
            j[s] = 0;
            ++s;
        }
        if (s == n) {
            break;
        }
        ++j[s];
    }
}

// Sweedler sum over an element: f(u1, u2, coefficient) for every term of the coproduct.
template <coefficient R, typename F>
void for_each_sweedler(const basic_element<R> &u, F &&f)
{
    for (const auto &[m, c] : u.terms()) {
        for_each_split(m, [&](const monomial &a, const monomial &b, std::uint64_t mult) {
            f(a, b, mult == 1 ? c : c * R(rational(static_cast<unsigned long>(mult))));
        });
    }
}

template <coefficient R>
R from_count(std::uint64_t n)
{
    return R(rational(static_cast<unsigned long>(n)));
}

template <coefficient R>
basic_element<R> vee(const basic_element<R> &u, const basic_element<R> &v)
{
    return u * v;
}

// u^{v n}; the zeroth power is 1.
template <coefficient R>
basic_element<R> vee_power(const basic_element<R> &u, unsigned n)
{
    auto r = basic_element<R>::one();
    for (unsigned k = 0; k < n; ++k) {
        r = r * u;
    }
    return r;
}

template <coefficient R>
basic_tensor<R> coproduct(const basic_element<R> &u)
{
    basic_tensor<R> out(2);
    for_each_sweedler(u, [&](const monomial &a, const monomial &b, const R &c) { out.add({a, b}, c); });
    return out;
}

// Applies the coproduct to one slot of a tensor, raising its arity by one.
template <coefficient R>
basic_tensor<R> coproduct_on_slot(const basic_tensor<R> &t, std::size_t slot)
{
    if (slot >= t.arity()) {
        throw std::out_of_range("tensor slot out of range");
    }
    basic_tensor<R> out(t.arity() + 1);
    for (const auto &[key, c] : t.terms()) {
        for_each_split(key[slot], [&](const monomial &a, const monomial &b, std::uint64_t mult) {
            std::vector<monomial> nk;
            nk.reserve(key.size() + 1);
            nk.insert(nk.end(), key.begin(), key.begin() + static_cast<std::ptrdiff_t>(slot));
            nk.push_back(a);
            nk.push_back(b);
            nk.insert(nk.end(), key.begin() + static_cast<std::ptrdiff_t>(slot) + 1, key.end());
            out.add(std::move(nk), c * from_count<R>(mult));
        });
    }
    return out;
}

// k-fold iterated coproduct, re-applying the coproduct to the last slot. k = 1 returns u.
template <coefficient R>
basic_tensor<R> iterated_coproduct(const basic_element<R> &u, std::size_t k)
{
    if (k == 0) {
        throw std::invalid_argument("iterated coproduct depth must be at least 1");
    }
    basic_tensor<R> t(1);
    for (const auto &[m, c] : u.terms()) {
        t.add({m}, c);
    }
    for (std::size_t d = 1; d < k; ++d) {
        t = coproduct_on_slot(t, d - 1);
    }
    return t;
}

template <coefficient R>
R counit(const basic_element<R> &u)
{
    return u.coefficient(monomial{});
}

template <coefficient R>
basic_element<R> antipode(const basic_element<R> &u)
{
    basic_element<R> out;
    for (const auto &[m, c] : u.terms()) {
        out.add(m, m.grading() % 2 == 0 ? c : -c);
    }
    return out;
}

template <coefficient R>
basic_element<R> derivation(generator_index k, const basic_element<R> &u)
{
    basic_element<R> out;
    for (const auto &[m, c] : u.terms()) {
        const auto mult = m.multiplicity(k);
        if (mult > 0) {
            out.add(m.without(k), c * from_count<R>(mult));
        }
    }
    return out;
}

// a^{(n)} = e_k^{v n} / n!
template <coefficient R>
basic_element<R> divided_power(generator_index k, unsigned n)
{
    const rational inv_fact(integer(1), factorial(n));
    return basic_element<R>(monomial::generator(k, n), R(inv_fact));
}

} // namespace qfa

#endif
