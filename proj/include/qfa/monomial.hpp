#ifndef QFA_MONOMIAL_HPP
#define QFA_MONOMIAL_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qfa
{

// Generators are numbered from 1.
using generator_index = std::uint32_t;

// A basis word e_{i1} v ... v e_{in} of S(V), stored as a multiset of generator indices.
// The empty monomial is the unit 1.
class monomial
{
public:
    using factor = std::pair<generator_index, std::uint32_t>;

    monomial() = default;

    static monomial generator(generator_index i, std::uint32_t power = 1)
    {
        if (i == 0) {
            throw std::out_of_range("generator indices start at 1");
        }
        monomial m;
        if (power > 0) {
            m.m_factors.emplace_back(i, power);
            m.m_grading = power;
        }
        return m;
    }

    static monomial from_indices(std::span<const generator_index> indices)
    {
        std::vector<generator_index> sorted(indices.begin(), indices.end());
        std::sort(sorted.begin(), sorted.end());
        monomial m;
        for (auto i : sorted) {
            if (i == 0) {
                throw std::out_of_range("generator indices start at 1");
            }
            if (!m.m_factors.empty() && m.m_factors.back().first == i) {
                ++m.m_factors.back().second;
            } else {
                m.m_factors.emplace_back(i, 1);
            }
        }
        m.m_grading = static_cast<std::uint32_t>(sorted.size());
        return m;
    }
    static monomial from_indices(std::initializer_list<generator_index> indices)
    {
        return from_indices(std::span<const generator_index>(indices.begin(), indices.size()));
    }

    // Factors must be sorted by index with positive multiplicities.
    static monomial from_factors(std::vector<factor> factors)
    {
        monomial m;
        for (std::size_t k = 0; k < factors.size(); ++k) {
            if (factors[k].second == 0 || factors[k].first == 0 || (k > 0 && factors[k - 1].first >= factors[k].first)) {
                throw std::invalid_argument("monomial factors must be sorted with positive multiplicities");
            }
            m.m_grading += factors[k].second;
        }
        m.m_factors = std::move(factors);
        return m;
    }

    std::uint32_t grading() const
    {
        return m_grading;
    }
    bool is_unit() const
    {
        return m_factors.empty();
    }
    const std::vector<factor> &factors() const
    {
        return m_factors;
    }

    std::uint32_t multiplicity(generator_index i) const
    {
        auto it = std::lower_bound(m_factors.begin(), m_factors.end(), i,
                                   [](const factor &f, generator_index j) { return f.first < j; });
        return (it != m_factors.end() && it->first == i) ? it->second : 0u;
    }

    generator_index max_index() const
    {
        return m_factors.empty() ? 0 : m_factors.back().first;
    }

    // Indices with repetition, ascending.
    std::vector<generator_index> indices() const
    {
        std::vector<generator_index> out;
        out.reserve(m_grading);
        for (const auto &[i, k] : m_factors) {
            out.insert(out.end(), k, i);
        }
        return out;
    }

    // The monomial with one copy of e_i removed; e_i must divide *this.
    monomial without(generator_index i) const
    {
        monomial m = *this;
        auto it = std::find_if(m.m_factors.begin(), m.m_factors.end(), [i](const factor &f) { return f.first == i; });
        if (it == m.m_factors.end()) {
            throw std::invalid_argument("generator does not divide monomial");
        }
        if (--it->second == 0) {
            m.m_factors.erase(it);
        }
        --m.m_grading;
        return m;
    }

    // Multiset union: the symmetric product of two basis words.
    friend monomial operator*(const monomial &a, const monomial &b)
    {
        monomial m;
        m.m_factors.reserve(a.m_factors.size() + b.m_factors.size());
        auto ia = a.m_factors.begin();
        auto ib = b.m_factors.begin();
        while (ia != a.m_factors.end() || ib != b.m_factors.end()) {
            if (ib == b.m_factors.end() || (ia != a.m_factors.end() && ia->first < ib->first)) {
                m.m_factors.push_back(*ia++);
            } else if (ia == a.m_factors.end() || ib->first < ia->first) {
                m.m_factors.push_back(*ib++);
            } else {
                m.m_factors.emplace_back(ia->first, ia->second + ib->second);
                ++ia;
                ++ib;
            }
        }
        m.m_grading = a.m_grading + b.m_grading;
        return m;
    }

    friend bool operator==(const monomial &, const monomial &) = default;

    // Lexicographic comparison of the ascending index sequences (shorter prefix first).
    friend int compare_lex(const monomial &a, const monomial &b)
    {
        std::size_t pa = 0, pb = 0;
        std::uint32_t ra = a.m_factors.empty() ? 0 : a.m_factors[0].second;
        std::uint32_t rb = b.m_factors.empty() ? 0 : b.m_factors[0].second;
        while (pa < a.m_factors.size() && pb < b.m_factors.size()) {
            const auto ia = a.m_factors[pa].first;
            const auto ib = b.m_factors[pb].first;
            if (ia != ib) {
                return ia < ib ? -1 : 1;
            }
            const auto step = std::min(ra, rb);
            ra -= step;
            rb -= step;
            if (ra == 0 && ++pa < a.m_factors.size()) {
                ra = a.m_factors[pa].second;
            }
            if (rb == 0 && ++pb < b.m_factors.size()) {
                rb = b.m_factors[pb].second;
            }
        }
        const bool a_done = pa == a.m_factors.size();
        const bool b_done = pb == b.m_factors.size();
        if (a_done && b_done) {
            return 0;
        }
        return a_done ? -1 : 1;
    }

    std::size_t hash() const
    {
        std::size_t h = 0x9e3779b97f4a7c15ull;
        for (const auto &[i, k] : m_factors) {
            h ^= (static_cast<std::size_t>(i) << 20 ^ k) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return h;
    }

    // "e1 v e1 v e2"; the unit prints as "1".
    std::string str() const
    {
        if (m_factors.empty()) {
            return "1";
        }
        std::string s;
        for (const auto &[i, k] : m_factors) {
            for (std::uint32_t r = 0; r < k; ++r) {
                if (!s.empty()) {
                    s += " v ";
                }
                s += 'e';
                s += std::to_string(i);
            }
        }
        return s;
    }

    friend std::ostream &operator<<(std::ostream &os, const monomial &m)
    {
        return os << m.str();
    }

private:
    std::vector<factor> m_factors;
    std::uint32_t m_grading = 0;
};

// Display order for terms: higher grading first, then ascending lexicographic index sequence.
struct display_order {
    bool operator()(const monomial &a, const monomial &b) const
    {
        if (a.grading() != b.grading()) {
            return a.grading() > b.grading();
        }
        return compare_lex(a, b) < 0;
    }
};

struct monomial_hash {
    std::size_t operator()(const monomial &m) const
    {
        return m.hash();
    }
};

struct monomial_pair_hash {
    std::size_t operator()(const std::pair<monomial, monomial> &p) const
    {
        return p.first.hash() * 31 + p.second.hash();
    }
};

} // namespace qfa

#endif
