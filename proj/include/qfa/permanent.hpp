#ifndef QFA_PERMANENT_HPP
#define QFA_PERMANENT_HPP

#include <algorithm>
#include <bit>
#include <numeric>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include <qfa/coefficient.hpp>

namespace qfa
{

// Row-major square or rectangular matrix of ring elements.
template <typename R>
class dense_matrix
{
public:
    dense_matrix() = default;
    dense_matrix(std::size_t rows, std::size_t cols, const R &fill = R(0L)) : m_rows(rows), m_cols(cols), m_data(rows * cols, fill) {}

    std::size_t rows() const
    {
        return m_rows;
    }
    std::size_t cols() const
    {
        return m_cols;
    }
    R &operator()(std::size_t r, std::size_t c)
    {
        return m_data[r * m_cols + c];
    }
    const R &operator()(std::size_t r, std::size_t c) const
    {
        return m_data[r * m_cols + c];
    }

    friend bool operator==(const dense_matrix &, const dense_matrix &) = default;

private:
    std::size_t m_rows = 0;
    std::size_t m_cols = 0;
    std::vector<R> m_data;
};

// Ryser's inclusion-exclusion formula walked in Gray-code order:
//   perm(A) = (-1)^n sum_{S subset of columns} (-1)^{|S|} prod_i sum_{j in S} a_ij.
// O(2^n n) ring operations and no division, so it is exact over any commutative ring.
template <coefficient R>
R permanent(const dense_matrix<R> &a)
{
    const std::size_t n = a.rows();
    if (a.cols() != n) {
        throw std::invalid_argument("permanent requires a square matrix");
    }
    if (n == 0) {
        return R(1L);
    }
    if (n > 62) {
        throw std::length_error("permanent: matrix too large");
    }
    if (n == 1) {
        return a(0, 0);
    }
    std::vector<R> row_sums(n, R(0L));
    std::vector<bool> in_subset(n, false);
    R total(0L);
    std::size_t subset_size = 0;
    const std::uint64_t count = std::uint64_t{1} << n;
    for (std::uint64_t k = 1; k < count; ++k) {
        const auto j = static_cast<std::size_t>(std::countr_zero(k));
        if (in_subset[j]) {
            for (std::size_t i = 0; i < n; ++i) {
                row_sums[i] -= a(i, j);
            }
            --subset_size;
        } else {
            for (std::size_t i = 0; i < n; ++i) {
                row_sums[i] += a(i, j);
            }
            ++subset_size;
        }
        in_subset[j] = !in_subset[j];
        R prod = row_sums[0];
        for (std::size_t i = 1; i < n && !is_zero(prod); ++i) {
            prod *= row_sums[i];
        }
        if ((n - subset_size) % 2 == 0) {
            total += prod;
        } else {
            total -= prod;
        }
    }
    return total;
}

// Sum over all n! permutations; the slow reference path.
template <coefficient R>
R permanent_by_permutations(const dense_matrix<R> &a)
{
    const std::size_t n = a.rows();
    if (a.cols() != n) {
        throw std::invalid_argument("permanent requires a square matrix");
    }
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    R total(0L);
    do {
        R prod(1L);
        for (std::size_t i = 0; i < n; ++i) {
            prod *= a(i, perm[i]);
        }
        total += prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

} // namespace qfa

#endif
