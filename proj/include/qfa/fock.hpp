#ifndef QFA_FOCK_HPP
#define QFA_FOCK_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <qfa/algebra.hpp>
#include <qfa/element.hpp>

namespace qfa
{

// Split of the generators into creation (V+) and annihilation (V-) operators, with the
// involution * exchanging a+_k and a-_k.
class fock_structure
{
public:
    fock_structure(std::size_t dim, std::set<generator_index> creation, std::set<generator_index> annihilation,
                   std::map<generator_index, generator_index> involution)
        : m_dim(dim), m_creation(std::move(creation)), m_annihilation(std::move(annihilation))
    {
        for (auto i : m_creation) {
            if (m_annihilation.count(i) != 0) {
                throw std::invalid_argument("generator e" + std::to_string(i) + " is both creation and annihilation");
            }
        }
        for (generator_index i = 1; i <= dim; ++i) {
            if (m_creation.count(i) + m_annihilation.count(i) != 1) {
                throw std::invalid_argument("creation and annihilation sets must cover 1.." + std::to_string(dim));
            }
        }
        if (m_creation.size() + m_annihilation.size() != dim) {
            throw std::invalid_argument("creation/annihilation index outside 1.." + std::to_string(dim));
        }
        // Accept the involution given on creation indices only, or on both halves.
        for (const auto &[a, b] : involution) {
            m_partner[a] = b;
            if (involution.count(b) == 0) {
                m_partner[b] = a;
            }
        }
        for (generator_index i = 1; i <= dim; ++i) {
            auto it = m_partner.find(i);
            if (it == m_partner.end()) {
                throw std::invalid_argument("involution undefined on e" + std::to_string(i));
            }
            const auto j = it->second;
            if (m_partner.count(j) == 0 || m_partner.at(j) != i) {
                throw std::invalid_argument("involution is not its own inverse at e" + std::to_string(i));
            }
            if (is_creation(i) == is_creation(j)) {
                throw std::invalid_argument("involution must exchange creation and annihilation generators");
            }
        }
    }

    std::size_t dim() const
    {
        return m_dim;
    }
    const std::set<generator_index> &creation() const
    {
        return m_creation;
    }
    const std::set<generator_index> &annihilation() const
    {
        return m_annihilation;
    }
    bool is_creation(generator_index i) const
    {
        return m_creation.count(i) != 0;
    }
    bool is_annihilation(generator_index i) const
    {
        return m_annihilation.count(i) != 0;
    }
    generator_index partner(generator_index i) const
    {
        auto it = m_partner.find(i);
        if (it == m_partner.end()) {
            throw std::out_of_range("generator index out of range for Fock structure");
        }
        return it->second;
    }

private:
    std::size_t m_dim;
    std::set<generator_index> m_creation;
    std::set<generator_index> m_annihilation;
    std::map<generator_index, generator_index> m_partner;
};

namespace detail
{

template <coefficient R, typename Keep>
basic_element<R> project(const basic_element<R> &u, Keep &&keep)
{
    basic_element<R> out;
    for (const auto &[m, c] : u.terms()) {
        if (std::all_of(m.factors().begin(), m.factors().end(), [&](const monomial::factor &f) { return keep(f.first); })) {
            out.add(m, c);
        }
    }
    return out;
}

} // namespace detail

// P: algebra morphism keeping creation generators and killing annihilation ones.
template <coefficient R>
basic_element<R> project_plus(const basic_element<R> &u, const fock_structure &f)
{
    return detail::project(u, [&](generator_index i) { return f.is_creation(i); });
}

// M: algebra morphism keeping annihilation generators.
template <coefficient R>
basic_element<R> project_minus(const basic_element<R> &u, const fock_structure &f)
{
    return detail::project(u, [&](generator_index i) { return f.is_annihilation(i); });
}

// phi(u) = sum P(u1) (x) M(u2), creation operators in the left slot.
template <coefficient R>
basic_tensor<R> phi(const basic_element<R> &u, const fock_structure &f)
{
    basic_tensor<R> out(2);
    for_each_sweedler(u, [&](const monomial &u1, const monomial &u2, const R &c) {
        const bool left_ok = std::all_of(u1.factors().begin(), u1.factors().end(),
                                         [&](const monomial::factor &x) { return f.is_creation(x.first); });
        const bool right_ok = std::all_of(u2.factors().begin(), u2.factors().end(),
                                          [&](const monomial::factor &x) { return f.is_annihilation(x.first); });
        if (left_ok && right_ok) {
            out.add({u1, u2}, c);
        }
    });
    return out;
}

// Antilinear involution: exchange each generator with its partner and conjugate coefficients.
inline element involute(const element &u, const fock_structure &f)
{
    element out;
    for (const auto &[m, c] : u.terms()) {
        std::vector<generator_index> idx;
        idx.reserve(m.grading());
        for (auto i : m.indices()) {
            idx.push_back(f.partner(i));
        }
        out.add(monomial::from_indices(idx), c.conj());
    }
    return out;
}

// <0|u|0> for a normal-ordered u: annihilators stand on the right of phi(u) and kill |0>,
// creators stand on the left and are killed by <0|, so only the 1 (x) 1 component survives.
template <coefficient R>
R vacuum_expectation(const basic_element<R> &u, const fock_structure &f)
{
    return phi(u, f).coefficient({monomial{}, monomial{}});
}

// Without an explicit split every generator is still a creation or an annihilation operator,
// so a normal product of positive grading has zero vacuum expectation.
template <coefficient R>
R vacuum_expectation(const basic_element<R> &u)
{
    R total(0L);
    for (const auto &[m, c] : u.terms()) {
        if (m.grading() == 0) {
            total += c;
        }
    }
    return total;
}

} // namespace qfa

#endif
