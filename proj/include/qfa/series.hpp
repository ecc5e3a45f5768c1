#ifndef QFA_SERIES_HPP
#define QFA_SERIES_HPP

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include <qfa/algebra.hpp>
#include <qfa/element.hpp>
#include <qfa/laplace.hpp>
#include <qfa/permanent.hpp>
#include <qfa/tmaps.hpp>

namespace qfa
{

// Power series in a formal parameter lambda, truncated after order N. T{} must be zero.
template <typename T>
class formal_series
{
public:
    explicit formal_series(std::size_t order = 0) : m_coeffs(order + 1) {}
    explicit formal_series(std::vector<T> coeffs) : m_coeffs(std::move(coeffs))
    {
        if (m_coeffs.empty()) {
            throw std::invalid_argument("a series has at least the constant coefficient");
        }
    }

    static formal_series constant(const T &c, std::size_t order)
    {
        formal_series s(order);
        s.m_coeffs[0] = c;
        return s;
    }

    std::size_t order() const
    {
        return m_coeffs.size() - 1;
    }
    const std::vector<T> &coefficients() const
    {
        return m_coeffs;
    }
    const T &operator[](std::size_t n) const
    {
        return m_coeffs.at(n);
    }
    T &operator[](std::size_t n)
    {
        return m_coeffs.at(n);
    }

    formal_series truncated(std::size_t order) const
    {
        std::vector<T> c(m_coeffs.begin(), m_coeffs.begin() + static_cast<std::ptrdiff_t>(std::min(order, this->order()) + 1));
        c.resize(order + 1);
        return formal_series(std::move(c));
    }

    template <typename F>
    auto map(F &&f) const
    {
        using U = decltype(f(m_coeffs[0]));
        std::vector<U> out;
        out.reserve(m_coeffs.size());
        for (const auto &c : m_coeffs) {
            out.push_back(f(c));
        }
        return formal_series<U>(std::move(out));
    }

    friend formal_series operator+(const formal_series &a, const formal_series &b)
    {
        formal_series out(std::min(a.order(), b.order()));
        for (std::size_t n = 0; n <= out.order(); ++n) {
            out.m_coeffs[n] = a.m_coeffs[n] + b.m_coeffs[n];
        }
        return out;
    }
    friend formal_series operator-(const formal_series &a, const formal_series &b)
    {
        formal_series out(std::min(a.order(), b.order()));
        for (std::size_t n = 0; n <= out.order(); ++n) {
            out.m_coeffs[n] = a.m_coeffs[n] - b.m_coeffs[n];
        }
        return out;
    }
    // Cauchy product; the result is known through the smaller order.
    friend formal_series operator*(const formal_series &a, const formal_series &b)
    {
        formal_series out(std::min(a.order(), b.order()));
        for (std::size_t n = 0; n <= out.order(); ++n) {
            for (std::size_t k = 0; k <= n; ++k) {
                out.m_coeffs[n] += a.m_coeffs[k] * b.m_coeffs[n - k];
            }
        }
        return out;
    }

    friend bool operator==(const formal_series &, const formal_series &) = default;

private:
    std::vector<T> m_coeffs;
};

// Scalar series times element series.
template <coefficient R>
formal_series<basic_element<R>> scale(const formal_series<R> &s, const formal_series<basic_element<R>> &e)
{
    formal_series<basic_element<R>> out(std::min(s.order(), e.order()));
    for (std::size_t n = 0; n <= out.order(); ++n) {
        for (std::size_t k = 0; k <= n; ++k) {
            if (!is_zero(s[k])) {
                out[n] += e[n - k] * s[k];
            }
        }
    }
    return out;
}

// 1/a for a scalar series with invertible constant term.
inline formal_series<scalar> inverse(const formal_series<scalar> &a)
{
    if (a[0].is_zero()) {
        throw std::domain_error("series inverse needs a nonzero constant term");
    }
    formal_series<scalar> b(a.order());
    const scalar inv0 = scalar(1L) / a[0];
    b[0] = inv0;
    for (std::size_t n = 1; n <= a.order(); ++n) {
        scalar acc;
        for (std::size_t k = 1; k <= n; ++k) {
            acc += a[k] * b[n - k];
        }
        b[n] = -acc * inv0;
    }
    return b;
}

inline formal_series<scalar> operator/(const formal_series<scalar> &a, const formal_series<scalar> &b)
{
    const auto n = std::min(a.order(), b.order());
    return a.truncated(n) * inverse(b.truncated(n));
}

// a^{-1/2} for a scalar series with constant term 1, by Newton's iteration y <- y (3 - a y^2) / 2,
// which doubles the number of correct coefficients per step.
inline formal_series<scalar> inverse_sqrt(const formal_series<scalar> &a)
{
    if (!(a[0] == scalar(1L))) {
        throw std::domain_error("inverse square root needs constant term 1");
    }
    const auto n = a.order();
    auto y = formal_series<scalar>::constant(scalar(1L), n);
    const auto three = formal_series<scalar>::constant(scalar(3L), n);
    const scalar half(rational(1, 2));
    for (std::size_t correct = 1; correct <= n; correct *= 2) {
        auto next = y * (three - a * y * y);
        y = next.map([&](const scalar &c) { return c * half; });
    }
    return y;
}

// e^a for a scalar series with zero constant term.
inline formal_series<scalar> exp(const formal_series<scalar> &a)
{
    if (!a[0].is_zero()) {
        throw std::domain_error("series exponential needs a zero constant term");
    }
    const auto n = a.order();
    auto result = formal_series<scalar>::constant(scalar(1L), n);
    auto power = result;
    for (std::size_t k = 1; k <= n; ++k) {
        power = (power * a).map([&](const scalar &c) { return c * scalar(rational(1, static_cast<long>(k))); });
        result = result + power;
    }
    return result;
}

// exp^v(lambda u): the coefficient of lambda^n is u^{v n} / n!.
template <coefficient R>
formal_series<basic_element<R>> vee_exp(const basic_element<R> &u, std::size_t order)
{
    formal_series<basic_element<R>> s(order);
    auto power = basic_element<R>::one();
    for (std::size_t n = 0; n <= order; ++n) {
        if (n > 0) {
            power = (power * u) * R(rational(1, static_cast<long>(n)));
        }
        s[n] = power;
    }
    return s;
}

// T(exp^v(lambda u)), or Tbar(...) when renormalised.
template <coefficient R>
formal_series<basic_element<R>> smatrix(const basic_element<R> &u, const basic_t_context<R> &ctx, std::size_t order,
                                        bool renormalised = false)
{
    return vee_exp(u, order).map([&](const basic_element<R> &c) {
        return renormalised ? tbar_map(c, ctx) : t_map(c, ctx);
    });
}

// G_ij = eps(e_i o e_j o T(S)) / eps(T(S)) as a lambda-series. The renormalised variant replaces
// T by Tbar and keeps the circle product o.
inline formal_series<scalar> green(generator_index i, generator_index j, const element &u, const t_context &ctx,
                                   std::size_t order, bool renormalised = false)
{
    const auto s = smatrix(u, ctx, order, renormalised);
    const auto eij = circle(element::generator(i), element::generator(j), ctx.pairing());
    const auto numerator = s.map([&](const element &x) { return counit(circle(eij, x, ctx.pairing())); });
    const auto denominator = s.map([&](const element &x) { return counit(x); });
    return numerator / denominator;
}

// Both sides of T(exp^v(lambda a)) = e^{lambda^2 (a|a)/2} exp^v(lambda a).
inline std::pair<formal_series<element>, formal_series<element>>
simplest_lagrangian_check(generator_index a, const t_context &ctx, std::size_t order)
{
    const auto gen = element::generator(a);
    auto lhs = smatrix(gen, ctx, order);
    formal_series<scalar> quad(order);
    if (order >= 2) {
        quad[2] = ctx.pairing()(a, a) * scalar(rational(1, 2));
    }
    auto rhs = scale(exp(quad), vee_exp(gen, order));
    return {std::move(lhs), std::move(rhs)};
}

namespace detail
{

inline element keep_gradings_up_to(const element &u, std::uint32_t max_grading)
{
    element out;
    for (const auto &[m, c] : u.terms()) {
        if (m.grading() <= max_grading) {
            out.add(m, c);
        }
    }
    return out;
}

// Leibniz determinant over a commutative ring; fine for the small dimensions used here.
template <typename T>
T leibniz_determinant(const std::vector<std::vector<T>> &a, const T &one)
{
    const std::size_t d = a.size();
    std::vector<std::size_t> perm(d);
    std::iota(perm.begin(), perm.end(), 0);
    T total = one - one;
    do {
        std::size_t inversions = 0;
        for (std::size_t x = 0; x < d; ++x) {
            for (std::size_t y = x + 1; y < d; ++y) {
                inversions += perm[x] > perm[y] ? 1 : 0;
            }
        }
        T prod = one;
        for (std::size_t r = 0; r < d; ++r) {
            prod = prod * a[r][perm[r]];
        }
        total = inversions % 2 == 0 ? total + prod : total - prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

} // namespace detail

// Gaussian Lagrangian u = sum_i e_i v e_i with the pairing M scaled by lambda. Returns
//   (i)  T(exp^v(u)), truncated at lambda-order N and total grading <= G, and
//   (ii) det(1 - 2 lambda M)^{-1/2} exp^v( sum_ij e_i [(1 - 2 lambda M)^{-1}]_ij e_j ), identically truncated,
// with (1 - 2 lambda M)^{-1} = sum_k (2 lambda)^k M^k.
inline std::pair<formal_series<element>, formal_series<element>>
gaussian_closed_form_check(const t_context &ctx, std::size_t order, std::uint32_t max_grading)
{
    const auto &L = ctx.pairing();
    const auto d = static_cast<generator_index>(L.dim());
    element u;
    for (generator_index i = 1; i <= d; ++i) {
        u.add(monomial::generator(i, 2), scalar(1L));
    }

    // A term of grading g in T(u^n / n!) carries (2n - g) / 2 contractions, i.e. that power of lambda.
    formal_series<element> lhs(order);
    const std::size_t max_power = max_grading / 2 + order;
    auto power = element::one();
    for (std::size_t n = 0; n <= max_power; ++n) {
        if (n > 0) {
            power = (power * u) * scalar(rational(1, static_cast<long>(n)));
        }
        const auto image = t_map(power, ctx);
        for (const auto &[m, c] : image.terms()) {
            if (m.grading() > max_grading) {
                continue;
            }
            const std::size_t k = (2 * n - m.grading()) / 2;
            if (k <= order) {
                lhs[k].add(m, c);
            }
        }
    }

    // det(1 - 2 lambda M) with series entries.
    std::vector<std::vector<formal_series<scalar>>> shifted(d, std::vector<formal_series<scalar>>(d, formal_series<scalar>(order)));
    for (generator_index i = 1; i <= d; ++i) {
        for (generator_index j = 1; j <= d; ++j) {
            auto &entry = shifted[i - 1][j - 1];
            if (i == j) {
                entry[0] = scalar(1L);
            }
            if (order >= 1) {
                entry[1] = L(i, j) * scalar(-2L);
            }
        }
    }
    const auto det = detail::leibniz_determinant(shifted, formal_series<scalar>::constant(scalar(1L), order));
    const auto prefactor = inverse_sqrt(det);

    // Quadratic form sum_k (2 lambda)^k sum_ij (M^k)_ij e_i v e_j.
    formal_series<element> quadratic(order);
    dense_matrix<scalar> mk(d, d);
    for (std::size_t i = 0; i < d; ++i) {
        mk(i, i) = scalar(1L);
    }
    scalar two_k(1L);
    for (std::size_t k = 0; k <= order; ++k) {
        for (generator_index i = 1; i <= d; ++i) {
            for (generator_index j = 1; j <= d; ++j) {
                quadratic[k].add(monomial::from_indices({i, j}), two_k * mk(i - 1, j - 1));
            }
        }
        dense_matrix<scalar> next(d, d);
        for (std::size_t i = 0; i < d; ++i) {
            for (std::size_t j = 0; j < d; ++j) {
                for (std::size_t l = 0; l < d; ++l) {
                    next(i, j) += mk(i, l) * L(static_cast<generator_index>(l + 1), static_cast<generator_index>(j + 1));
                }
            }
        }
        mk = std::move(next);
        two_k *= scalar(2L);
    }

    // exp^v of the quadratic form: every power adds grading 2, so stop at G / 2.
    auto exp_q = formal_series<element>::constant(element::one(), order);
    auto q_power = exp_q;
    for (std::size_t n = 1; n <= max_grading / 2; ++n) {
        q_power = (q_power * quadratic).map([&](const element &c) { return c * scalar(rational(1, static_cast<long>(n))); });
        exp_q = exp_q + q_power;
    }
    auto rhs = scale(prefactor, exp_q).map([&](const element &c) { return detail::keep_gradings_up_to(c, max_grading); });
    return {std::move(lhs), std::move(rhs)};
}

} // namespace qfa

#endif
