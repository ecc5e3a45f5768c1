#ifndef QFA_TMAPS_HPP
#define QFA_TMAPS_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

#include <qfa/algebra.hpp>
#include <qfa/element.hpp>
#include <qfa/laplace.hpp>
#include <qfa/renorm.hpp>

namespace qfa
{

class asymmetric_pairing_error : public std::domain_error
{
public:
    asymmetric_pairing_error()
        : std::domain_error("time-ordered maps need a symmetric pairing: the circle product is commutative "
                            "exactly when (a|b) = (b|a), and T is only well defined then")
    {
    }
};

// Pairing (required symmetric) plus optional renormalisation scheme, with memo tables for the
// T-maps and scalar t-maps. Copies share the tables.
template <coefficient R>
class basic_t_context
{
public:
    explicit basic_t_context(basic_pairing_matrix<R> L) : m_pairing(std::move(L)), m_memo(std::make_shared<memo>())
    {
        if (!m_pairing.entries_symmetric()) {
            throw asymmetric_pairing_error();
        }
    }
    basic_t_context(basic_pairing_matrix<R> L, basic_scheme<R> z) : basic_t_context(std::move(L))
    {
        m_renormalised.emplace(std::move(z), m_pairing);
    }

    const basic_pairing_matrix<R> &pairing() const
    {
        return m_pairing;
    }
    bool has_scheme() const
    {
        return m_renormalised.has_value();
    }
    const basic_renormalised_pairing<R> &renormalised() const
    {
        if (!m_renormalised) {
            throw std::logic_error("renormalised map requested without a scheme");
        }
        return *m_renormalised;
    }
    const basic_scheme<R> &scheme() const
    {
        return renormalised().scheme();
    }

    // Memo tables, exposed to the free functions below.
    struct memo {
        std::mutex mutex;
        std::unordered_map<monomial, basic_element<R>, monomial_hash> t_map;
        std::unordered_map<monomial, basic_element<R>, monomial_hash> tbar_map;
        std::unordered_map<monomial, R, monomial_hash> t_scalar;
        std::unordered_map<monomial, R, monomial_hash> tbar_scalar;
    };
    memo &tables() const
    {
        return *m_memo;
    }

private:
    basic_pairing_matrix<R> m_pairing;
    std::optional<basic_renormalised_pairing<R>> m_renormalised;
    std::shared_ptr<memo> m_memo;
};

using t_context = basic_t_context<scalar>;

namespace detail
{

template <typename Map, typename F>
auto memo_lookup(std::mutex &mutex, Map &table, const monomial &m, F &&compute)
{
    {
        std::lock_guard lock(mutex);
        auto it = table.find(m);
        if (it != table.end()) {
            return it->second;
        }
    }
    auto value = compute();
    std::lock_guard lock(mutex);
    table.emplace(m, value);
    return value;
}

template <coefficient R, typename F>
basic_element<R> apply_on_monomials(const basic_element<R> &u, F &&f)
{
    basic_element<R> out;
    for (const auto &[m, c] : u.terms()) {
        out += f(m) * c;
    }
    return out;
}

} // namespace detail

// T on a basis word as the sum over partial contractions (Wick form).
template <coefficient R>
basic_element<R> t_map(const monomial &m, const basic_t_context<R> &ctx)
{
    auto &tab = ctx.tables();
    return detail::memo_lookup(tab.mutex, tab.t_map, m, [&] {
        const auto idx = m.indices();
        return wick_expand<R>(idx, ctx.pairing());
    });
}

template <coefficient R>
basic_element<R> t_map(const basic_element<R> &u, const basic_t_context<R> &ctx)
{
    return detail::apply_on_monomials(u, [&](const monomial &m) { return t_map(m, ctx); });
}

// T(e_{i1} v ... v e_{in}) = e_{i1} o ... o e_{in}, folded left with the circle product.
template <coefficient R>
basic_element<R> t_map_circle_fold(const basic_element<R> &u, const basic_t_context<R> &ctx)
{
    return detail::apply_on_monomials(u, [&](const monomial &m) {
        auto acc = basic_element<R>::one();
        for (auto i : m.indices()) {
            acc = circle(acc, basic_element<R>::generator(i), ctx.pairing());
        }
        return acc;
    });
}

// Sigma u = 1/2 sum_ij (e_i|e_j) delta_i delta_j u. Lowers the grading by two; no symmetry needed.
template <coefficient R>
basic_element<R> sigma_apply(const basic_element<R> &u, const basic_pairing_matrix<R> &L)
{
    basic_element<R> out;
    const R half(rational(1, 2));
    for (const auto &[m, c] : u.terms()) {
        for (const auto &[j, kj] : m.factors()) {
            const auto mj = m.without(j);
            for (const auto &[i, ki] : mj.factors()) {
                const R p = L(i, j);
                if (!is_zero(p)) {
                    out.add(mj.without(i), c * p * half * from_count<R>(std::uint64_t{kj} * ki));
                }
            }
        }
    }
    return out;
}

template <coefficient R>
basic_element<R> sigma_apply(const basic_element<R> &u, const basic_t_context<R> &ctx)
{
    return sigma_apply(u, ctx.pairing());
}

// e^Sigma u = sum_k Sigma^k u / k!; finite because Sigma lowers the grading.
template <coefficient R>
basic_element<R> exp_sigma(const basic_element<R> &u, const basic_t_context<R> &ctx)
{
    basic_element<R> result = u;
    basic_element<R> term = u;
    for (long k = 1; !term.is_zero(); ++k) {
        term = sigma_apply(term, ctx.pairing()) * R(rational(1, k));
        result += term;
    }
    return result;
}

// Scalar t-map: t(1) = 1, t(a) = 0, t(u v w) = sum t(u1) t(w1) (u2|w2), recursing with u the
// first generator of the word.
template <coefficient R>
R t_scalar(const monomial &m, const basic_t_context<R> &ctx)
{
    if (m.is_unit()) {
        return R(1L);
    }
    if (m.grading() == 1) {
        return R(0L);
    }
    auto &tab = ctx.tables();
    return detail::memo_lookup(tab.mutex, tab.t_scalar, m, [&] {
        const auto a = monomial::generator(m.factors()[0].first);
        const auto rest = m.without(a.factors()[0].first);
        R total(0L);
        for_each_split(a, [&](const monomial &a1, const monomial &a2, std::uint64_t) {
            const R ta = t_scalar(a1, ctx);
            if (is_zero(ta)) {
                return;
            }
            for_each_split(rest, [&](const monomial &r1, const monomial &r2, std::uint64_t mult) {
                if (r2.grading() != a2.grading()) {
                    return;
                }
                const R p = ctx.pairing().pair(a2, r2);
                if (is_zero(p)) {
                    return;
                }
                const R tr = t_scalar(r1, ctx);
                if (!is_zero(tr)) {
                    total += ta * tr * p * from_count<R>(mult);
                }
            });
        });
        return total;
    });
}

template <coefficient R>
R t_scalar(const basic_element<R> &u, const basic_t_context<R> &ctx)
{
    R total(0L);
    for (const auto &[m, c] : u.terms()) {
        const R t = t_scalar(m, ctx);
        if (!is_zero(t)) {
            total += c * t;
        }
    }
    return total;
}

template <coefficient R>
R hafnian(const dense_matrix<R> &a);

namespace detail
{

template <coefficient R>
R hafnian_recurse(const dense_matrix<R> &a, std::vector<bool> &used, std::size_t remaining)
{
    if (remaining == 0) {
        return R(1L);
    }
    std::size_t i = 0;
    while (used[i]) {
        ++i;
    }
    used[i] = true;
    R total(0L);
    for (std::size_t j = i + 1; j < a.rows(); ++j) {
        if (used[j] || is_zero(a(i, j))) {
            continue;
        }
        used[j] = true;
        const R sub = hafnian_recurse(a, used, remaining - 2);
        if (!is_zero(sub)) {
            total += a(i, j) * sub;
        }
        used[j] = false;
    }
    used[i] = false;
    return total;
}

} // namespace detail

// Sum over perfect matchings of prod a_ij, pairing the smallest free index first:
// (2n-1)!! branches for a 2n x 2n matrix. Odd size gives 0.
template <coefficient R>
R hafnian(const dense_matrix<R> &a)
{
    if (a.rows() != a.cols()) {
        throw std::invalid_argument("hafnian requires a square matrix");
    }
    if (a.rows() % 2 == 1) {
        return R(0L);
    }
    std::vector<bool> used(a.rows(), false);
    return detail::hafnian_recurse(a, used, a.rows());
}

// t(a_1 v ... v a_2n) in closed form: the hafnian of the pairing submatrix.
template <coefficient R>
R t_closed_form(std::span<const generator_index> gens, const basic_t_context<R> &ctx)
{
    dense_matrix<R> a(gens.size(), gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i) {
        for (std::size_t j = 0; j < gens.size(); ++j) {
            a(i, j) = ctx.pairing()(gens[i], gens[j]);
        }
    }
    return hafnian(a);
}

// T(u) = sum t(u1) u2.
template <coefficient R>
basic_element<R> t_map_from_scalar(const basic_element<R> &u, const basic_t_context<R> &ctx)
{
    basic_element<R> out;
    for_each_sweedler(u, [&](const monomial &u1, const monomial &u2, const R &c) {
        const R t = t_scalar(u1, ctx);
        if (!is_zero(t)) {
            out.add(u2, c * t);
        }
    });
    return out;
}

// Renormalised T-map: Tbar(1) = 1, Tbar(a) = a, Tbar(u v w) = Tbar(u) o~ Tbar(w).
template <coefficient R>
basic_element<R> tbar_map(const monomial &m, const basic_t_context<R> &ctx)
{
    if (m.grading() <= 1) {
        return basic_element<R>(m);
    }
    auto &tab = ctx.tables();
    return detail::memo_lookup(tab.mutex, tab.tbar_map, m, [&] {
        const auto first = m.factors()[0].first;
        const auto rest = tbar_map(m.without(first), ctx);
        return ctx.renormalised().circle(basic_element<R>::generator(first), rest);
    });
}

template <coefficient R>
basic_element<R> tbar_map(const basic_element<R> &u, const basic_t_context<R> &ctx)
{
    return detail::apply_on_monomials(u, [&](const monomial &m) { return tbar_map(m, ctx); });
}

// Scalar renormalised t-map: tbar(1) = 1, tbar(a) = 0, tbar(u v w) = sum tbar(u1) tbar(w1) (u2|w2)~.
template <coefficient R>
R tbar_scalar(const monomial &m, const basic_t_context<R> &ctx)
{
    if (m.is_unit()) {
        return R(1L);
    }
    if (m.grading() == 1) {
        return R(0L);
    }
    auto &tab = ctx.tables();
    const auto &mpair = ctx.renormalised();
    return detail::memo_lookup(tab.mutex, tab.tbar_scalar, m, [&] {
        const auto a = monomial::generator(m.factors()[0].first);
        const auto rest = m.without(a.factors()[0].first);
        R total(0L);
        for_each_split(a, [&](const monomial &a1, const monomial &a2, std::uint64_t) {
            const R ta = tbar_scalar(a1, ctx);
            if (is_zero(ta)) {
                return;
            }
            for_each_split(rest, [&](const monomial &r1, const monomial &r2, std::uint64_t mult) {
                const R p = mpair(a2, r2);
                if (is_zero(p)) {
                    return;
                }
                const R tr = tbar_scalar(r1, ctx);
                if (!is_zero(tr)) {
                    total += ta * tr * p * from_count<R>(mult);
                }
            });
        });
        return total;
    });
}

template <coefficient R>
R tbar_scalar(const basic_element<R> &u, const basic_t_context<R> &ctx)
{
    R total(0L);
    for (const auto &[m, c] : u.terms()) {
        const R t = tbar_scalar(m, ctx);
        if (!is_zero(t)) {
            total += c * t;
        }
    }
    return total;
}

// Both sides of T(u) o~ T(v) = sum Z(u1, v1) T(u2) o T(v2).
template <coefficient R>
std::pair<basic_element<R>, basic_element<R>> first_identity_check(const basic_element<R> &u,
                                                                     const basic_element<R> &v,
                                                                     const basic_t_context<R> &ctx)
{
    const auto &rp = ctx.renormalised();
    auto lhs = rp.circle(t_map(u, ctx), t_map(v, ctx));
    basic_element<R> rhs;
    for_each_sweedler(u, [&](const monomial &u1, const monomial &u2, const R &cu) {
        for_each_sweedler(v, [&](const monomial &v1, const monomial &v2, const R &cv) {
            const R zv = ctx.scheme().z(u1, v1);
            if (is_zero(zv)) {
                return;
            }
            rhs += circle(t_map(u2, ctx), t_map(v2, ctx), ctx.pairing()) * (cu * cv * zv);
        });
    });
    return {std::move(lhs), std::move(rhs)};
}

} // namespace qfa

#endif
