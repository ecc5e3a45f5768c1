#ifndef QFA_TESTS_ORACLES_HPP
#define QFA_TESTS_ORACLES_HPP

// Slow, independent reference implementations used only by the tests.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <qfa/element.hpp>
#include <qfa/format.hpp>
#include <qfa/laplace.hpp>
#include <qfa/permanent.hpp>
#include <qfa/rational.hpp>
#include <qfa/scalar.hpp>

namespace oracle
{

using qfa::generator_index;
using qfa::monomial;
using qfa::rational;

// Multivariate polynomials over Q in named variables. A ring without division, which is
// all the library needs from a coefficient type.
class poly
{
public:
    using word = std::map<std::string, unsigned>;

    poly() = default;
    poly(long c) : poly(rational(c)) {}
    poly(const rational &c)
    {
        if (c != 0) {
            m_terms[word{}] = c;
        }
    }

    static poly var(const std::string &name)
    {
        poly p;
        p.m_terms[word{{name, 1}}] = 1;
        return p;
    }

    const std::map<word, rational> &terms() const
    {
        return m_terms;
    }

    poly &operator+=(const poly &o)
    {
        for (const auto &[w, c] : o.m_terms) {
            accumulate(w, c);
        }
        return *this;
    }
    poly &operator-=(const poly &o)
    {
        for (const auto &[w, c] : o.m_terms) {
            accumulate(w, -c);
        }
        return *this;
    }
    poly &operator*=(const poly &o)
    {
        *this = *this * o;
        return *this;
    }

    friend poly operator+(poly a, const poly &b)
    {
        return a += b;
    }
    friend poly operator-(poly a, const poly &b)
    {
        return a -= b;
    }
    friend poly operator-(const poly &a)
    {
        return poly() - a;
    }
    friend poly operator*(const poly &a, const poly &b)
    {
        poly out;
        for (const auto &[wa, ca] : a.m_terms) {
            for (const auto &[wb, cb] : b.m_terms) {
                word w = wa;
                for (const auto &[v, k] : wb) {
                    w[v] += k;
                }
                out.accumulate(w, ca * cb);
            }
        }
        return out;
    }
    friend bool operator==(const poly &, const poly &) = default;

    friend std::ostream &operator<<(std::ostream &os, const poly &p)
    {
        if (p.m_terms.empty()) {
            return os << "0";
        }
        bool first = true;
        for (const auto &[w, c] : p.m_terms) {
            os << (first ? "" : " + ") << c.get_str();
            for (const auto &[v, k] : w) {
                os << "*" << v;
                if (k > 1) {
                    os << "^" << k;
                }
            }
            first = false;
        }
        return os;
    }

private:
    void accumulate(const word &w, const rational &c)
    {
        if (c == 0) {
            return;
        }
        auto it = m_terms.find(w);
        if (it == m_terms.end()) {
            m_terms.emplace(w, c);
            return;
        }
        it->second += c;
        if (it->second == 0) {
            m_terms.erase(it);
        }
    }

    std::map<word, rational> m_terms;
};

inline bool is_zero(const poly &p)
{
    return p.terms().empty();
}

using poly_element = qfa::basic_element<poly>;
using poly_pairing = qfa::basic_pairing_matrix<poly>;

// "p12" style variable for the pairing entry (e_i|e_j) of a symmetric matrix.
inline poly pairing_var(generator_index i, generator_index j)
{
    if (i > j) {
        std::swap(i, j);
    }
    return poly::var("p" + std::to_string(i) + std::to_string(j));
}

// "z124" style variable for zeta on e_1 v e_2 v e_4.
inline poly zeta_var(const monomial &m)
{
    std::string name = "z";
    for (auto i : m.indices()) {
        name += std::to_string(i);
    }
    return poly::var(name);
}

inline poly_pairing symbolic_pairing(std::uint32_t dim)
{
    std::vector<poly> entries;
    for (generator_index i = 1; i <= dim; ++i) {
        for (generator_index j = 1; j <= dim; ++j) {
            entries.push_back(pairing_var(i, j));
        }
    }
    return poly_pairing(dim, std::move(entries), true);
}

// Permanent by cofactor expansion along the first row.
template <typename R>
R laplace_permanent(const qfa::dense_matrix<R> &a)
{
    const std::size_t n = a.rows();
    if (n == 0) {
        return R(1L);
    }
    R total(0L);
    for (std::size_t c = 0; c < n; ++c) {
        qfa::dense_matrix<R> minor(n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            for (std::size_t k = 0, col = 0; k < n; ++k) {
                if (k != c) {
                    minor(r - 1, col++) = a(r, k);
                }
            }
        }
        total += a(0, c) * laplace_permanent(minor);
    }
    return total;
}

// (u|v) on basis words from the definition: sum over bijections between the factor positions.
template <typename R>
R pairing_by_bijections(const monomial &a, const monomial &b, const qfa::basic_pairing_matrix<R> &L)
{
    if (a.grading() != b.grading()) {
        return R(0L);
    }
    const auto ia = a.indices();
    const auto ib = b.indices();
    std::vector<std::size_t> perm(ib.size());
    std::iota(perm.begin(), perm.end(), 0);
    R total(0L);
    do {
        R prod(1L);
        for (std::size_t k = 0; k < ia.size(); ++k) {
            prod *= L(ia[k], ib[perm[k]]);
        }
        total += prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

// Coproduct as a sum over all 2^n subsets of labelled factor positions.
template <typename R>
qfa::basic_tensor<R> shuffle_coproduct(const monomial &m)
{
    const auto idx = m.indices();
    qfa::basic_tensor<R> out(2);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << idx.size()); ++mask) {
        std::vector<generator_index> left, right;
        for (std::size_t k = 0; k < idx.size(); ++k) {
            ((mask >> k) & 1 ? left : right).push_back(idx[k]);
        }
        out.add({monomial::from_indices(left), monomial::from_indices(right)}, R(1L));
    }
    return out;
}

template <typename R>
qfa::basic_tensor<R> shuffle_coproduct(const qfa::basic_element<R> &u)
{
    qfa::basic_tensor<R> out(2);
    for (const auto &[m, c] : u.terms()) {
        out += c * shuffle_coproduct<R>(m);
    }
    return out;
}

// u o v = sum (u1|v1) u2 v v2 with the shuffle coproduct and the bijection pairing.
template <typename R>
qfa::basic_element<R> circle_by_definition(const qfa::basic_element<R> &u, const qfa::basic_element<R> &v,
                                           const qfa::basic_pairing_matrix<R> &L)
{
    qfa::basic_element<R> out;
    const auto du = shuffle_coproduct(u);
    const auto dv = shuffle_coproduct(v);
    for (const auto &[ku, cu] : du.terms()) {
        for (const auto &[kv, cv] : dv.terms()) {
            const R p = pairing_by_bijections(ku[1], kv[1], L);
            if (!is_zero(p)) {
                out.add(ku[0] * kv[0], cu * cv * p);
            }
        }
    }
    return out;
}

// All perfect matchings of {0, ..., n-1} as lists of pairs.
inline std::vector<std::vector<std::pair<std::size_t, std::size_t>>> perfect_matchings(std::size_t n)
{
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> out;
    std::vector<std::pair<std::size_t, std::size_t>> current;
    std::vector<bool> used(n, false);
    auto rec = [&](auto &self) -> void {
        std::size_t i = 0;
        while (i < n && used[i]) {
            ++i;
        }
        if (i == n) {
            out.push_back(current);
            return;
        }
        used[i] = true;
        for (std::size_t j = i + 1; j < n; ++j) {
            if (!used[j]) {
                used[j] = true;
                current.emplace_back(i, j);
                self(self);
                current.pop_back();
                used[j] = false;
            }
        }
        used[i] = false;
    };
    if (n % 2 == 0) {
        rec(rec);
    }
    return out;
}

template <typename R>
R t_by_matchings(const std::vector<generator_index> &gens, const qfa::basic_pairing_matrix<R> &L)
{
    R total(0L);
    for (const auto &matching : perfect_matchings(gens.size())) {
        R prod(1L);
        for (const auto &[i, j] : matching) {
            prod *= L(gens[i], gens[j]);
        }
        total += prod;
    }
    return total;
}

// t(a_1 v ... v a_2n) = 1/(2^n n!) sum over all (2n)! orderings of prod (a_s1|a_s2)...(a_s2n-1|a_s2n).
inline qfa::scalar t_by_permutations(const std::vector<generator_index> &gens, const qfa::pairing_matrix &L)
{
    if (gens.size() % 2 == 1) {
        return qfa::scalar(0L);
    }
    std::vector<std::size_t> perm(gens.size());
    std::iota(perm.begin(), perm.end(), 0);
    qfa::scalar total(0L);
    do {
        qfa::scalar prod(1L);
        for (std::size_t k = 0; k < perm.size(); k += 2) {
            prod *= L(gens[perm[k]], gens[perm[k + 1]]);
        }
        total += prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    const std::size_t n = gens.size() / 2;
    rational norm(1);
    for (std::size_t k = 1; k <= n; ++k) {
        norm *= rational(2 * static_cast<long>(k));
    }
    return total * qfa::scalar(rational(1) / norm);
}

} // namespace oracle

#endif
