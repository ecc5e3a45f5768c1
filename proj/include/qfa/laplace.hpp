#ifndef QFA_LAPLACE_HPP
#define QFA_LAPLACE_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <qfa/algebra.hpp>
#include <qfa/element.hpp>
#include <qfa/permanent.hpp>

namespace qfa
{

// The bilinear form (e_i|e_j) on generators, extended to S(V) by permanents.
// No symmetry is assumed unless declared; a declared symmetric matrix is validated.
template <coefficient R>
class basic_pairing_matrix
{
public:
    using kernel_type = std::function<R(const dense_matrix<R> &)>;

    basic_pairing_matrix() : basic_pairing_matrix(0, {}) {}

    basic_pairing_matrix(std::size_t dim, std::vector<R> row_major, bool declared_symmetric = false)
        : m_state(std::make_shared<state>())
    {
        if (row_major.size() != dim * dim) {
            throw std::invalid_argument("pairing matrix needs dim*dim entries");
        }
        m_state->dim = dim;
        m_state->entries = std::move(row_major);
        m_state->declared_symmetric = declared_symmetric;
        m_state->kernel = [](const dense_matrix<R> &a) { return permanent(a); };
        if (declared_symmetric && !entries_symmetric()) {
            throw std::invalid_argument("pairing matrix declared symmetric but (e_i|e_j) != (e_j|e_i)");
        }
    }

    static basic_pairing_matrix from_rows(const std::vector<std::vector<R>> &rows, bool declared_symmetric = false)
    {
        std::vector<R> flat;
        for (const auto &row : rows) {
            if (row.size() != rows.size()) {
                throw std::invalid_argument("pairing matrix must be square");
            }
            flat.insert(flat.end(), row.begin(), row.end());
        }
        return basic_pairing_matrix(rows.size(), std::move(flat), declared_symmetric);
    }

    std::size_t dim() const
    {
        return m_state->dim;
    }

    // 1-based access.
    const R &operator()(generator_index i, generator_index j) const
    {
        if (i == 0 || j == 0 || i > dim() || j > dim()) {
            throw std::out_of_range("generator index out of range for pairing of dimension " + std::to_string(dim()));
        }
        return m_state->entries[(i - 1) * dim() + (j - 1)];
    }

    bool declared_symmetric() const
    {
        return m_state->declared_symmetric;
    }

    bool entries_symmetric() const
    {
        const auto d = dim();
        for (std::size_t i = 0; i < d; ++i) {
            for (std::size_t j = i + 1; j < d; ++j) {
                if (!(m_state->entries[i * d + j] == m_state->entries[j * d + i])) {
                    return false;
                }
            }
        }
        return true;
    }

    // Same entries, different permanent kernel and a fresh cache.
    basic_pairing_matrix with_kernel(kernel_type kernel) const
    {
        basic_pairing_matrix out(dim(), m_state->entries, false);
        out.m_state->declared_symmetric = m_state->declared_symmetric;
        out.m_state->kernel = std::move(kernel);
        return out;
    }

    // Same entries scaled by s.
    basic_pairing_matrix scaled(const R &s) const
    {
        std::vector<R> e = m_state->entries;
        for (auto &x : e) {
            x *= s;
        }
        return basic_pairing_matrix(dim(), std::move(e), m_state->declared_symmetric);
    }

    // (a|b) for basis words: zero across gradings, else the permanent of the generator pairings
    // with multiplicities expanded into repeated rows and columns.
    R pair(const monomial &a, const monomial &b) const
    {
        if (a.grading() != b.grading()) {
            return R(0L);
        }
        if (a.is_unit()) {
            return R(1L);
        }
        if (a.grading() == 1) {
            return (*this)(a.factors()[0].first, b.factors()[0].first);
        }
        {
            std::lock_guard lock(m_state->mutex);
            auto it = m_state->cache.find({a, b});
            if (it != m_state->cache.end()) {
                return it->second;
            }
        }
        const auto ia = a.indices();
        const auto ib = b.indices();
        dense_matrix<R> m(ia.size(), ib.size());
        for (std::size_t r = 0; r < ia.size(); ++r) {
            for (std::size_t c = 0; c < ib.size(); ++c) {
                m(r, c) = (*this)(ia[r], ib[c]);
            }
        }
        R value = m_state->kernel(m);
        std::lock_guard lock(m_state->mutex);
        m_state->cache.emplace(std::make_pair(a, b), value);
        return value;
    }

private:
    struct state {
        std::size_t dim = 0;
        std::vector<R> entries;
        bool declared_symmetric = false;
        kernel_type kernel;
        std::mutex mutex;
        std::unordered_map<std::pair<monomial, monomial>, R, monomial_pair_hash> cache;
    };
    std::shared_ptr<state> m_state;
};

using pairing_matrix = basic_pairing_matrix<scalar>;

namespace detail
{

struct split {
    monomial left;
    monomial right;
    std::uint64_t mult;
};

// Coproduct terms of m bucketed by the grading of the right leg.
inline std::vector<std::vector<split>> splits_by_right_grading(const monomial &m)
{
    std::vector<std::vector<split>> buckets(m.grading() + 1);
    for_each_split(m, [&](const monomial &a, const monomial &b, std::uint64_t mult) {
        buckets[b.grading()].push_back({a, b, mult});
    });
    return buckets;
}

} // namespace detail

template <coefficient R>
R pairing(const basic_element<R> &u, const basic_element<R> &v, const basic_pairing_matrix<R> &L)
{
    R total(0L);
    for (const auto &[mu, cu] : u.terms()) {
        for (const auto &[mv, cv] : v.terms()) {
            if (mu.grading() != mv.grading()) {
                continue;
            }
            const R p = L.pair(mu, mv);
            if (!is_zero(p)) {
                total += cu * cv * p;
            }
        }
    }
    return total;
}

// u o v on basis words: sum u1 v v1 (u2|v2).
template <coefficient R>
basic_element<R> circle(const monomial &a, const monomial &b, const basic_pairing_matrix<R> &L)
{
    basic_element<R> out;
    const auto sa = detail::splits_by_right_grading(a);
    const auto sb = detail::splits_by_right_grading(b);
    const auto top = std::min(sa.size(), sb.size());
    for (std::size_t g = 0; g < top; ++g) {
        for (const auto &x : sa[g]) {
            for (const auto &y : sb[g]) {
                const R p = L.pair(x.right, y.right);
                if (is_zero(p)) {
                    continue;
                }
                out.add(x.left * y.left, p * from_count<R>(x.mult * y.mult));
            }
        }
    }
    return out;
}

template <coefficient R>
basic_element<R> circle(const basic_element<R> &u, const basic_element<R> &v, const basic_pairing_matrix<R> &L)
{
    basic_element<R> out;
    for (const auto &[mu, cu] : u.terms()) {
        for (const auto &[mv, cv] : v.terms()) {
            out += circle(mu, mv, L) * (cu * cv);
        }
    }
    return out;
}

// u o b for a generator b via Wick's recursion: u v b + sum_j (a_j|b) u with a_j removed.
template <coefficient R>
basic_element<R> wick_step(const basic_element<R> &u, generator_index b, const basic_pairing_matrix<R> &L)
{
    basic_element<R> out;
    const auto gb = monomial::generator(b);
    for (const auto &[m, c] : u.terms()) {
        out.add(m * gb, c);
        for (const auto &[i, k] : m.factors()) {
            const R p = L(i, b);
            if (!is_zero(p)) {
                out.add(m.without(i), c * p * from_count<R>(k));
            }
        }
    }
    return out;
}

namespace detail
{

template <coefficient R>
void wick_recurse(std::span<const generator_index> gens, std::vector<bool> &used, std::size_t from,
                  std::vector<generator_index> &free, const R &weight, const basic_pairing_matrix<R> &L,
                  basic_element<R> &out)
{
    std::size_t i = from;
    while (i < gens.size() && used[i]) {
        ++i;
    }
    if (i == gens.size()) {
        out.add(monomial::from_indices(free), weight);
        return;
    }
    used[i] = true;
    // a_i left uncontracted.
    free.push_back(gens[i]);
    wick_recurse(gens, used, i + 1, free, weight, L, out);
    free.pop_back();
    // a_i contracted with a later a_j; the earlier factor sits on the left of the pairing.
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
        if (used[j]) {
            continue;
        }
        const R p = L(gens[i], gens[j]);
        if (is_zero(p)) {
            continue;
        }
        used[j] = true;
        wick_recurse(gens, used, i + 1, free, weight * p, L, out);
        used[j] = false;
    }
    used[i] = false;
}

} // namespace detail

// a_1 o a_2 o ... o a_n as the sum over all sets of disjoint contractions (i<j) of
// prod (a_i|a_j) times the symmetric product of the uncontracted factors.
template <coefficient R>
basic_element<R> wick_expand(std::span<const generator_index> gens, const basic_pairing_matrix<R> &L)
{
    basic_element<R> out;
    std::vector<bool> used(gens.size(), false);
    std::vector<generator_index> free;
    detail::wick_recurse(gens, used, 0, free, R(1L), L, out);
    return out;
}

// sum (s(u1)|v1) u2 o v2, which recovers u v v.
template <coefficient R>
basic_element<R> recover_vee(const basic_element<R> &u, const basic_element<R> &v, const basic_pairing_matrix<R> &L)
{
    basic_element<R> out;
    for_each_sweedler(u, [&](const monomial &u1, const monomial &u2, const R &cu) {
        for_each_sweedler(v, [&](const monomial &v1, const monomial &v2, const R &cv) {
            if (u1.grading() != v1.grading()) {
                return;
            }
            R p = L.pair(u1, v1);
            if (is_zero(p)) {
                return;
            }
            if (u1.grading() % 2 == 1) {
                p = -p;
            }
            out += circle(u2, v2, L) * (cu * cv * p);
        });
    });
    return out;
}

// sum s(u1 v v1) v (u2 o v2), which recovers (u|v) 1.
template <coefficient R>
basic_element<R> recover_pairing(const basic_element<R> &u, const basic_element<R> &v,
                                 const basic_pairing_matrix<R> &L)
{
    basic_element<R> out;
    for_each_sweedler(u, [&](const monomial &u1, const monomial &u2, const R &cu) {
        for_each_sweedler(v, [&](const monomial &v1, const monomial &v2, const R &cv) {
            const auto front = u1 * v1;
            const R sign = front.grading() % 2 == 0 ? R(1L) : R(-1L);
            const auto c = circle(u2, v2, L);
            for (const auto &[m, d] : c.terms()) {
                out.add(front * m, sign * cu * cv * d);
            }
        });
    });
    return out;
}

// sum (u11 o v) v (u12 o w) v s(u2), which equals u o (v v w).
template <coefficient R>
basic_element<R> circle_distribute(const basic_element<R> &u, const basic_element<R> &v, const basic_element<R> &w,
                                   const basic_pairing_matrix<R> &L)
{
    basic_element<R> out;
    const auto triple = iterated_coproduct(u, 3);
    for (const auto &[key, c] : triple.terms()) {
        const basic_element<R> x(key[0]);
        const basic_element<R> y(key[1]);
        const R sign = key[2].grading() % 2 == 0 ? c : -c;
        out += circle(x, v, L) * circle(y, w, L) * basic_element<R>(key[2], sign);
    }
    return out;
}

} // namespace qfa

#endif
