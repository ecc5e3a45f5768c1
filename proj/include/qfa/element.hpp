#ifndef QFA_ELEMENT_HPP
#define QFA_ELEMENT_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <qfa/coefficient.hpp>
#include <qfa/monomial.hpp>
#include <qfa/scalar.hpp>

namespace qfa
{

// Finite linear combination of monomials. Zero coefficients are never stored, so structural
// equality is equality of elements.
template <coefficient R>
class basic_element
{
public:
    using coefficient_type = R;
    using term_map = std::map<monomial, R, display_order>;

    basic_element() = default;
    explicit basic_element(const R &c)
    {
        add(monomial{}, c);
    }
    explicit basic_element(const monomial &m, const R &c = R(1L))
    {
        add(m, c);
    }

    static basic_element one()
    {
        return basic_element(R(1L));
    }
    static basic_element generator(generator_index i)
    {
        return basic_element(monomial::generator(i));
    }

    const term_map &terms() const
    {
        return m_terms;
    }
    std::size_t size() const
    {
        return m_terms.size();
    }
    bool is_zero() const
    {
        return m_terms.empty();
    }

    R coefficient(const monomial &m) const
    {
        auto it = m_terms.find(m);
        return it == m_terms.end() ? R(0L) : it->second;
    }

    void add(const monomial &m, const R &c)
    {
        if (detail::coefficient_is_zero(c)) {
            return;
        }
        auto [it, inserted] = m_terms.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (detail::coefficient_is_zero(it->second)) {
                m_terms.erase(it);
            }
        }
    }
    void add(monomial &&m, const R &c)
    {
        if (detail::coefficient_is_zero(c)) {
            return;
        }
        auto [it, inserted] = m_terms.try_emplace(std::move(m), c);
        if (!inserted) {
            it->second += c;
            if (detail::coefficient_is_zero(it->second)) {
                m_terms.erase(it);
            }
        }
    }

    // Highest grading present; 0 for the zero element.
    std::uint32_t max_grading() const
    {
        return m_terms.empty() ? 0 : m_terms.begin()->first.grading();
    }

    bool is_homogeneous() const
    {
        return m_terms.empty() || m_terms.begin()->first.grading() == m_terms.rbegin()->first.grading();
    }

    basic_element homogeneous_part(std::uint32_t n) const
    {
        basic_element out;
        for (const auto &[m, c] : m_terms) {
            if (m.grading() == n) {
                out.m_terms.emplace(m, c);
            }
        }
        return out;
    }

    generator_index max_index() const
    {
        generator_index r = 0;
        for (const auto &[m, c] : m_terms) {
            r = std::max(r, m.max_index());
        }
        return r;
    }

    basic_element &operator+=(const basic_element &o)
    {
        for (const auto &[m, c] : o.m_terms) {
            add(m, c);
        }
        return *this;
    }
    basic_element &operator-=(const basic_element &o)
    {
        for (const auto &[m, c] : o.m_terms) {
            add(m, -c);
        }
        return *this;
    }
    basic_element &operator*=(const R &s)
    {
        if (detail::coefficient_is_zero(s)) {
            m_terms.clear();
            return *this;
        }
        for (auto &[m, c] : m_terms) {
            c *= s;
        }
        return *this;
    }

    friend basic_element operator+(basic_element a, const basic_element &b)
    {
        return a += b;
    }
    friend basic_element operator-(basic_element a, const basic_element &b)
    {
        return a -= b;
    }
    friend basic_element operator-(basic_element a)
    {
        for (auto &[m, c] : a.m_terms) {
            c = -c;
        }
        return a;
    }
    friend basic_element operator*(basic_element a, const R &s)
    {
        return a *= s;
    }
    friend basic_element operator*(const R &s, basic_element a)
    {
        return a *= s;
    }

    // The symmetric product; S(V) is the polynomial ring on the generators.
    friend basic_element operator*(const basic_element &a, const basic_element &b)
    {
        basic_element out;
        for (const auto &[ma, ca] : a.m_terms) {
            for (const auto &[mb, cb] : b.m_terms) {
                out.add(ma * mb, ca * cb);
            }
        }
        return out;
    }

    friend bool operator==(const basic_element &a, const basic_element &b)
    {
        return a.m_terms == b.m_terms;
    }

private:
    term_map m_terms;
};

// Finite linear combination of k-fold tensors of monomials (k = arity).
template <coefficient R>
class basic_tensor
{
public:
    using key_type = std::vector<monomial>;

    struct key_order {
        bool operator()(const key_type &a, const key_type &b) const
        {
            display_order less;
            for (std::size_t k = 0; k < a.size() && k < b.size(); ++k) {
                if (less(a[k], b[k])) {
                    return true;
                }
                if (less(b[k], a[k])) {
                    return false;
                }
            }
            return a.size() < b.size();
        }
    };
    using term_map = std::map<key_type, R, key_order>;

    explicit basic_tensor(std::size_t arity = 2) : m_arity(arity)
    {
        if (arity == 0) {
            throw std::invalid_argument("tensor arity must be positive");
        }
    }

    std::size_t arity() const
    {
        return m_arity;
    }
    const term_map &terms() const
    {
        return m_terms;
    }
    bool is_zero() const
    {
        return m_terms.empty();
    }

    R coefficient(const key_type &k) const
    {
        auto it = m_terms.find(k);
        return it == m_terms.end() ? R(0L) : it->second;
    }

    void add(key_type key, const R &c)
    {
        if (key.size() != m_arity) {
            throw std::invalid_argument("tensor slot count mismatch");
        }
        if (detail::coefficient_is_zero(c)) {
            return;
        }
        auto [it, inserted] = m_terms.try_emplace(std::move(key), c);
        if (!inserted) {
            it->second += c;
            if (detail::coefficient_is_zero(it->second)) {
                m_terms.erase(it);
            }
        }
    }

    basic_tensor &operator+=(const basic_tensor &o)
    {
        check_arity(o);
        for (const auto &[k, c] : o.m_terms) {
            add(k, c);
        }
        return *this;
    }
    basic_tensor &operator-=(const basic_tensor &o)
    {
        check_arity(o);
        for (const auto &[k, c] : o.m_terms) {
            add(k, -c);
        }
        return *this;
    }
    friend basic_tensor operator+(basic_tensor a, const basic_tensor &b)
    {
        return a += b;
    }
    friend basic_tensor operator-(basic_tensor a, const basic_tensor &b)
    {
        return a -= b;
    }
    friend basic_tensor operator*(const R &s, basic_tensor a)
    {
        if (detail::coefficient_is_zero(s)) {
            a.m_terms.clear();
        }
        for (auto &[k, c] : a.m_terms) {
            c *= s;
        }
        return a;
    }

    // Slotwise symmetric product: the algebra structure of S(V)^{(x)k}.
    friend basic_tensor operator*(const basic_tensor &a, const basic_tensor &b)
    {
        a.check_arity(b);
        basic_tensor out(a.m_arity);
        for (const auto &[ka, ca] : a.m_terms) {
            for (const auto &[kb, cb] : b.m_terms) {
                key_type k(a.m_arity);
                for (std::size_t s = 0; s < a.m_arity; ++s) {
                    k[s] = ka[s] * kb[s];
                }
                out.add(std::move(k), ca * cb);
            }
        }
        return out;
    }

    // Applies a permutation of slots: slot s of the result is slot perm[s] of *this.
    basic_tensor permuted(const std::vector<std::size_t> &perm) const
    {
        if (perm.size() != m_arity) {
            throw std::invalid_argument("permutation size mismatch");
        }
        basic_tensor out(m_arity);
        for (const auto &[k, c] : m_terms) {
            key_type nk(m_arity);
            for (std::size_t s = 0; s < m_arity; ++s) {
                nk[s] = k[perm[s]];
            }
            out.add(std::move(nk), c);
        }
        return out;
    }

    // Applies a linear map (given on monomials) to one slot.
    template <typename F>
    basic_tensor map_slot(std::size_t slot, F &&f) const
    {
        basic_tensor out(m_arity);
        for (const auto &[k, c] : m_terms) {
            const basic_element<R> image = f(k[slot]);
            for (const auto &[m, d] : image.terms()) {
                key_type nk = k;
                nk[slot] = m;
                out.add(std::move(nk), c * d);
            }
        }
        return out;
    }

    friend bool operator==(const basic_tensor &a, const basic_tensor &b)
    {
        return a.m_arity == b.m_arity && a.m_terms == b.m_terms;
    }

private:
    void check_arity(const basic_tensor &o) const
    {
        if (o.m_arity != m_arity) {
            throw std::invalid_argument("tensor arity mismatch");
        }
    }

    std::size_t m_arity;
    term_map m_terms;
};

using element = basic_element<scalar>;
using tensor_element = basic_tensor<scalar>;

} // namespace qfa

#endif
