#ifndef QFA_RENORM_HPP
#define QFA_RENORM_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <unordered_map>
#include <utility>

#include <qfa/algebra.hpp>
#include <qfa/element.hpp>
#include <qfa/laplace.hpp>

namespace qfa
{

// A linear functional S(V) -> R, given by its values on basis words.
template <coefficient R>
class basic_functional
{
public:
    using function_type = std::function<R(const monomial &)>;

    explicit basic_functional(function_type f) : m_f(std::make_shared<const function_type>(std::move(f))) {}

    static basic_functional counit()
    {
        return basic_functional([](const monomial &m) { return m.is_unit() ? R(1L) : R(0L); });
    }

    R operator()(const monomial &m) const
    {
        return (*m_f)(m);
    }
    R operator()(const basic_element<R> &u) const
    {
        R total(0L);
        for (const auto &[m, c] : u.terms()) {
            const R v = (*m_f)(m);
            if (!is_zero(v)) {
                total += c * v;
            }
        }
        return total;
    }

private:
    std::shared_ptr<const function_type> m_f;
};

// Caches values of f per basis word. The cache is shared by copies and guarded by a mutex.
template <coefficient R>
basic_functional<R> memoized(basic_functional<R> f)
{
    struct memo {
        std::mutex mutex;
        std::unordered_map<monomial, R, monomial_hash> values;
    };
    auto cache = std::make_shared<memo>();
    return basic_functional<R>([f = std::move(f), cache](const monomial &m) {
        {
            std::lock_guard lock(cache->mutex);
            auto it = cache->values.find(m);
            if (it != cache->values.end()) {
                return it->second;
            }
        }
        R v = f(m);
        std::lock_guard lock(cache->mutex);
        cache->values.emplace(m, v);
        return v;
    });
}

// (f * g)(u) = sum f(u1) g(u2).
template <coefficient R>
basic_functional<R> convolve(const basic_functional<R> &f, const basic_functional<R> &g)
{
    return basic_functional<R>([f, g](const monomial &m) {
        R total(0L);
        for_each_split(m, [&](const monomial &a, const monomial &b, std::uint64_t mult) {
            const R fa = f(a);
            if (is_zero(fa)) {
                return;
            }
            const R gb = g(b);
            if (!is_zero(gb)) {
                total += fa * gb * from_count<R>(mult);
            }
        });
        return total;
    });
}

// Convolution inverse of a functional with f(1) = 1, by the recursion over the reduced coproduct
//   f^{-1}(u) = -f(u) - sum' f(u1) f^{-1}(u2).
template <coefficient R>
basic_functional<R> convolution_inverse(const basic_functional<R> &f)
{
    struct memo {
        std::mutex mutex;
        std::unordered_map<monomial, R, monomial_hash> values;
    };
    auto cache = std::make_shared<memo>();
    // The recursive worker refers to itself through a weak handle to avoid a reference cycle.
    auto worker = std::make_shared<std::function<R(const monomial &)>>();
    std::weak_ptr<std::function<R(const monomial &)>> self = worker;
    *worker = [f, cache, self](const monomial &m) -> R {
        if (m.is_unit()) {
            return R(1L);
        }
        {
            std::lock_guard lock(cache->mutex);
            auto it = cache->values.find(m);
            if (it != cache->values.end()) {
                return it->second;
            }
        }
        auto rec = self.lock();
        R value = -f(m);
        for_each_split(m, [&](const monomial &a, const monomial &b, std::uint64_t mult) {
            if (a.is_unit() || b.is_unit()) {
                return;
            }
            const R fa = f(a);
            if (is_zero(fa)) {
                return;
            }
            const R ib = (*rec)(b);
            if (!is_zero(ib)) {
                value -= fa * ib * from_count<R>(mult);
            }
        });
        std::lock_guard lock(cache->mutex);
        cache->values.emplace(m, value);
        return value;
    };
    return basic_functional<R>([worker](const monomial &m) { return (*worker)(m); });
}

// Renormalisation parameters: zeta(1) = 1, zeta(e_i) = 0, and finitely many stored values on
// basis words of grading >= 2 (everything else is 0).
template <coefficient R>
class basic_scheme
{
public:
    using value_map = std::map<monomial, R, display_order>;

    basic_scheme() : basic_scheme(value_map{}) {}

    explicit basic_scheme(value_map values) : m_state(std::make_shared<state>())
    {
        auto stored = std::make_shared<value_map>();
        for (auto &[m, v] : values) {
            if (m.grading() < 2) {
                throw std::invalid_argument("scheme values are fixed on gradings 0 and 1 (got " + m.str() + ")");
            }
            if (!is_zero(v)) {
                stored->emplace(m, v);
            }
        }
        m_state->values = stored;
        m_state->inverse = std::make_shared<basic_functional<R>>(convolution_inverse(functional()));
    }

    const value_map &values() const
    {
        return *m_state->values;
    }
    bool is_trivial() const
    {
        return m_state->values->empty();
    }

    R operator()(const monomial &m) const
    {
        if (m.is_unit()) {
            return R(1L);
        }
        auto it = m_state->values->find(m);
        return it == m_state->values->end() ? R(0L) : it->second;
    }
    R operator()(const basic_element<R> &u) const
    {
        R total(0L);
        for (const auto &[m, c] : u.terms()) {
            const R v = (*this)(m);
            if (!is_zero(v)) {
                total += c * v;
            }
        }
        return total;
    }

    basic_functional<R> functional() const
    {
        auto values = m_state->values;
        return basic_functional<R>([values](const monomial &m) {
            if (m.is_unit()) {
                return R(1L);
            }
            auto it = values->find(m);
            return it == values->end() ? R(0L) : it->second;
        });
    }

    const basic_functional<R> &inverse() const
    {
        return *m_state->inverse;
    }

    // Z(a, b) = sum zeta^{-1}(a1) zeta^{-1}(b1) zeta(a2 v b2), memoized per ordered pair.
    R z(const monomial &a, const monomial &b) const
    {
        const auto key = std::make_pair(a, b);
        {
            std::lock_guard lock(m_state->mutex);
            auto it = m_state->z_cache.find(key);
            if (it != m_state->z_cache.end()) {
                return it->second;
            }
        }
        const auto &inv = inverse();
        R total(0L);
        for_each_split(a, [&](const monomial &a1, const monomial &a2, std::uint64_t ma) {
            const R ia = inv(a1);
            if (is_zero(ia)) {
                return;
            }
            for_each_split(b, [&](const monomial &b1, const monomial &b2, std::uint64_t mb) {
                const R ib = inv(b1);
                if (is_zero(ib)) {
                    return;
                }
                const R zv = (*this)(a2 * b2);
                if (!is_zero(zv)) {
                    total += ia * ib * zv * from_count<R>(ma * mb);
                }
            });
        });
        std::lock_guard lock(m_state->mutex);
        m_state->z_cache.emplace(key, total);
        return total;
    }

private:
    struct state {
        std::shared_ptr<const value_map> values;
        std::shared_ptr<const basic_functional<R>> inverse;
        std::mutex mutex;
        std::unordered_map<std::pair<monomial, monomial>, R, monomial_pair_hash> z_cache;
    };
    std::shared_ptr<state> m_state;
};

using scheme = basic_scheme<scalar>;
using functional = basic_functional<scalar>;

template <coefficient R>
R scheme_eval(const basic_scheme<R> &z, const basic_element<R> &u)
{
    return z(u);
}

template <coefficient R>
basic_functional<R> convolution_inverse(const basic_scheme<R> &z)
{
    return z.inverse();
}

template <coefficient R>
R z_pairing(const basic_element<R> &u, const basic_element<R> &v, const basic_scheme<R> &z)
{
    R total(0L);
    for (const auto &[mu, cu] : u.terms()) {
        for (const auto &[mv, cv] : v.terms()) {
            const R zv = z.z(mu, mv);
            if (!is_zero(zv)) {
                total += cu * cv * zv;
            }
        }
    }
    return total;
}

// The modified Laplace pairing (u|v)~ = sum Z(u1, v1) (u2|v2) together with the renormalised
// circle product it generates. Values on pairs of basis words are memoized.
template <coefficient R>
class basic_renormalised_pairing
{
public:
    basic_renormalised_pairing(basic_scheme<R> z, basic_pairing_matrix<R> L)
        : m_scheme(std::move(z)), m_pairing(std::move(L)), m_cache(std::make_shared<cache>())
    {
    }

    const basic_scheme<R> &scheme() const
    {
        return m_scheme;
    }
    const basic_pairing_matrix<R> &pairing() const
    {
        return m_pairing;
    }

    R operator()(const monomial &a, const monomial &b) const
    {
        {
            std::lock_guard lock(m_cache->mutex);
            auto it = m_cache->values.find({a, b});
            if (it != m_cache->values.end()) {
                return it->second;
            }
        }
        R total(0L);
        const auto sa = detail::splits_by_right_grading(a);
        const auto sb = detail::splits_by_right_grading(b);
        const auto top = std::min(sa.size(), sb.size());
        for (std::size_t g = 0; g < top; ++g) {
            for (const auto &x : sa[g]) {
                for (const auto &y : sb[g]) {
                    const R zv = m_scheme.z(x.left, y.left);
                    if (is_zero(zv)) {
                        continue;
                    }
                    const R p = m_pairing.pair(x.right, y.right);
                    if (!is_zero(p)) {
                        total += zv * p * from_count<R>(x.mult * y.mult);
                    }
                }
            }
        }
        std::lock_guard lock(m_cache->mutex);
        m_cache->values.emplace(std::make_pair(a, b), total);
        return total;
    }

    R operator()(const basic_element<R> &u, const basic_element<R> &v) const
    {
        R total(0L);
        for (const auto &[mu, cu] : u.terms()) {
            for (const auto &[mv, cv] : v.terms()) {
                const R p = (*this)(mu, mv);
                if (!is_zero(p)) {
                    total += cu * cv * p;
                }
            }
        }
        return total;
    }

    // a o~ b = sum (a1|b1)~ a2 v b2 on basis words.
    basic_element<R> circle(const monomial &a, const monomial &b) const
    {
        basic_element<R> out;
        for_each_split(a, [&](const monomial &a1, const monomial &a2, std::uint64_t ma) {
            for_each_split(b, [&](const monomial &b1, const monomial &b2, std::uint64_t mb) {
                const R p = (*this)(a1, b1);
                if (!is_zero(p)) {
                    out.add(a2 * b2, p * from_count<R>(ma * mb));
                }
            });
        });
        return out;
    }

    basic_element<R> circle(const basic_element<R> &u, const basic_element<R> &v) const
    {
        basic_element<R> out;
        for (const auto &[mu, cu] : u.terms()) {
            for (const auto &[mv, cv] : v.terms()) {
                out += circle(mu, mv) * (cu * cv);
            }
        }
        return out;
    }

private:
    struct cache {
        std::mutex mutex;
        std::unordered_map<std::pair<monomial, monomial>, R, monomial_pair_hash> values;
    };
    basic_scheme<R> m_scheme;
    basic_pairing_matrix<R> m_pairing;
    std::shared_ptr<cache> m_cache;
};

using renormalised_pairing = basic_renormalised_pairing<scalar>;

template <coefficient R>
R modified_pairing(const basic_element<R> &u, const basic_element<R> &v, const basic_scheme<R> &z,
                   const basic_pairing_matrix<R> &L)
{
    return basic_renormalised_pairing<R>(z, L)(u, v);
}

template <coefficient R>
basic_element<R> circle_renorm(const basic_element<R> &u, const basic_element<R> &v, const basic_scheme<R> &z,
                               const basic_pairing_matrix<R> &L)
{
    return basic_renormalised_pairing<R>(z, L).circle(u, v);
}

} // namespace qfa

#endif
