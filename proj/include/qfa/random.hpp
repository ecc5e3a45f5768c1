#ifndef QFA_RANDOM_HPP
#define QFA_RANDOM_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include <qfa/element.hpp>
#include <qfa/laplace.hpp>
#include <qfa/renorm.hpp>
#include <qfa/scalar.hpp>

namespace qfa
{

using rng_type = std::mt19937_64;

// Small rationals p/q with |p| <= 5 and 1 <= q <= 4.
inline rational random_rational(rng_type &rng)
{
    std::uniform_int_distribution<long> num(-5, 5);
    std::uniform_int_distribution<long> den(1, 4);
    rational q(num(rng), den(rng));
    q.canonicalize();
    return q;
}

inline rational random_nonzero_rational(rng_type &rng)
{
    rational q;
    do {
        q = random_rational(rng);
    } while (q == 0);
    return q;
}

// Real with probability 3/4, otherwise a Gaussian rational.
inline scalar random_scalar(rng_type &rng, bool allow_complex = true)
{
    const rational re = random_rational(rng);
    if (allow_complex && std::uniform_int_distribution<int>(0, 3)(rng) == 0) {
        return {re, random_nonzero_rational(rng)};
    }
    return scalar(re);
}

inline monomial random_monomial(rng_type &rng, std::uint32_t dim, std::uint32_t grading)
{
    std::uniform_int_distribution<generator_index> pick(1, dim);
    std::vector<generator_index> idx(grading);
    for (auto &i : idx) {
        i = pick(rng);
    }
    return monomial::from_indices(idx);
}

// One to max_terms terms, each of grading at most max_grade.
inline element random_element(rng_type &rng, std::uint32_t dim, std::uint32_t max_grade, std::uint32_t max_terms = 3,
                              bool allow_complex = true)
{
    std::uniform_int_distribution<std::uint32_t> terms(1, max_terms);
    std::uniform_int_distribution<std::uint32_t> grade(0, max_grade);
    element u;
    const auto n = terms(rng);
    for (std::uint32_t k = 0; k < n; ++k) {
        u.add(random_monomial(rng, dim, grade(rng)), random_scalar(rng, allow_complex));
    }
    return u;
}

inline pairing_matrix random_pairing(rng_type &rng, std::uint32_t dim, bool symmetric, bool allow_complex = false)
{
    std::vector<scalar> entries(static_cast<std::size_t>(dim) * dim);
    for (std::uint32_t i = 0; i < dim; ++i) {
        for (std::uint32_t j = 0; j < dim; ++j) {
            if (symmetric && j < i) {
                entries[i * dim + j] = entries[j * dim + i];
            } else {
                entries[i * dim + j] = random_scalar(rng, allow_complex);
            }
        }
    }
    return pairing_matrix(dim, std::move(entries), symmetric);
}

// Nonzero values on a random selection of words of grading 2..max_grade.
inline scheme random_scheme(rng_type &rng, std::uint32_t dim, std::uint32_t max_grade, std::uint32_t values = 6)
{
    std::uniform_int_distribution<std::uint32_t> grade(2, std::max<std::uint32_t>(2, max_grade));
    scheme::value_map map;
    for (std::uint32_t k = 0; k < values; ++k) {
        map[random_monomial(rng, dim, grade(rng))] = scalar(random_nonzero_rational(rng));
    }
    return scheme(std::move(map));
}

// Every basis word in e_1..e_dim of grading <= max_grade, in display order.
inline std::vector<monomial> all_monomials(std::uint32_t dim, std::uint32_t max_grade)
{
    std::vector<monomial> out;
    std::vector<generator_index> current;
    auto extend = [&](auto &self, generator_index from) -> void {
        out.push_back(monomial::from_indices(current));
        if (current.size() == max_grade) {
            return;
        }
        for (generator_index i = from; i <= dim; ++i) {
            current.push_back(i);
            self(self, i);
            current.pop_back();
        }
    };
    extend(extend, 1);
    std::sort(out.begin(), out.end(), display_order{});
    return out;
}

} // namespace qfa

#endif
