#include <support/oracles.hpp>
#include <support/printers.hpp>

#include <qfa/random.hpp>
#include <qfa/series.hpp>

using namespace qfa;

namespace
{

element e(generator_index i)
{
    return element::generator(i);
}

element word(std::initializer_list<generator_index> idx)
{
    return element(monomial::from_indices(idx));
}

scalar q(long n, long d = 1)
{
    return scalar(rational(n, d));
}

formal_series<scalar> series_of(std::vector<scalar> c)
{
    return formal_series<scalar>(std::move(c));
}

} // namespace

TEST_CASE("series arithmetic", "[series]")
{
    const auto a = series_of({q(1), q(2), q(3)});
    const auto b = series_of({q(1), q(-1), q(0), q(5)});
    CHECK((a * b) == series_of({q(1), q(1), q(1)}));
    CHECK((a + b).order() == 2);
    CHECK(inverse(series_of({q(1), q(-1), q(0)})) == series_of({q(1), q(1), q(1)}));
    CHECK(a / a == formal_series<scalar>::constant(q(1), 2));
    CHECK_THROWS_AS(inverse(series_of({q(0), q(1)})), std::domain_error);

    // (1 - 4x)^{-1/2} = sum C(2n, n) x^n
    const auto s = inverse_sqrt(series_of({q(1), q(-4), q(0), q(0), q(0), q(0)}));
    CHECK(s == series_of({q(1), q(2), q(6), q(20), q(70), q(252)}));
    CHECK(inverse(s * s) == series_of({q(1), q(-4), q(0), q(0), q(0), q(0)}));

    CHECK(exp(series_of({q(0), q(1), q(0), q(0), q(0)})) == series_of({q(1), q(1), q(1, 2), q(1, 6), q(1, 24)}));
}

TEST_CASE("exponential of vee", "[series]")
{
    CHECK(vee_exp(e(1), 0) == formal_series<element>::constant(element::one(), 0));
    const auto s = vee_exp(e(1), 2);
    CHECK(s[0] == element::one());
    CHECK(s[1] == e(1));
    CHECK(s[2] == word({1, 1}) * q(1, 2));

    // exp^v(lambda (a + c)) = e^{c lambda} exp^v(lambda a)
    const scalar c = q(-2, 3);
    const auto shifted = vee_exp(e(2) + element(c), 5);
    auto expected = formal_series<element>(5);
    const auto base = vee_exp(e(2), 5);
    for (std::size_t n = 0; n <= 5; ++n) {
        scalar power(1L);
        rational fact(1);
        for (std::size_t k = 0; k <= n; ++k) {
            if (k > 0) {
                power *= c;
                fact *= rational(static_cast<long>(k));
            }
            expected[n] += base[n - k] * (power * scalar(rational(1) / fact));
        }
    }
    CHECK(shifted == expected);
}

TEST_CASE("S-matrix", "[series]")
{
    rng_type rng(51);
    const t_context ctx(random_pairing(rng, 2, true), random_scheme(rng, 2, 4));
    const auto s = smatrix(e(1), ctx, 2);
    CHECK(s[1] == e(1));
    CHECK(s[2] == (word({1, 1}) + element(ctx.pairing()(1, 1))) * q(1, 2));
    CHECK(smatrix(element{}, ctx, 4) == formal_series<element>::constant(element::one(), 4));
}

TEST_CASE("Green function", "[series]")
{
    rng_type rng(52);
    const t_context ctx(random_pairing(rng, 3, true), random_scheme(rng, 3, 4));
    const auto &L = ctx.pairing();
    CHECK(green(1, 2, word({1, 3}), ctx, 0) == formal_series<scalar>::constant(L(1, 2), 0));
    CHECK(green(2, 3, element{}, ctx, 3) == formal_series<scalar>::constant(L(2, 3), 3));
    for (int k = 0; k < 10; ++k) {
        const auto u = random_element(rng, 3, 3, 2, false);
        const auto s = smatrix(u, ctx, 3);
        CHECK(s.map([](const element &x) { return counit(x); })[0] == q(1));
    }

    // d = 1, (e1|e1) = m, u = e1 v e1: eps(T(e1^{2n})) = (2n-1)!! m^n.
    const scalar m = q(3);
    const t_context one(pairing_matrix(1, {m}, true));
    auto double_factorial = [](long n) {
        long r = 1;
        for (long k = n; k > 1; k -= 2) {
            r *= k;
        }
        return r;
    };
    formal_series<scalar> num(2), den(2);
    scalar mn(1L), nfact(1L);
    for (long n = 0; n <= 2; ++n) {
        if (n > 0) {
            mn *= m;
            nfact *= q(n);
        }
        den[n] = q(double_factorial(2 * n - 1)) * mn / nfact;
        num[n] = q(double_factorial(2 * n + 1)) * mn * m / nfact;
    }
    CHECK(green(1, 1, word({1, 1}), one, 2) == num / den);
    CHECK(green(1, 1, word({1, 1}), one, 2) == series_of({q(3), q(18), q(108)}));
}

TEST_CASE("simplest Lagrangian", "[series]")
{
    rng_type rng(53);
    for (int k = 0; k < 5; ++k) {
        const t_context ctx(random_pairing(rng, 3, true));
        const auto [lhs, rhs] = simplest_lagrangian_check(2, ctx, 5);
        CHECK(lhs[2] == (word({2, 2}) + element(ctx.pairing()(2, 2))) * q(1, 2));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("Gaussian closed form", "[series]")
{
    const t_context one(pairing_matrix(1, {q(5, 2)}, true));
    const auto [l1, r1] = gaussian_closed_form_check(one, 1, 4);
    CHECK(l1[0] == vee_exp(word({1, 1}), 2)[0] + vee_exp(word({1, 1}), 2)[1] + vee_exp(word({1, 1}), 2)[2]);
    CHECK(l1[1].coefficient(monomial{}) == q(5, 2));
    CHECK(r1[1].coefficient(monomial{}) == q(5, 2));
    CHECK(l1 == r1);

    rng_type rng(54);
    for (int k = 0; k < 3; ++k) {
        const t_context two(random_pairing(rng, 2, true));
        const auto [lhs, rhs] = gaussian_closed_form_check(two, 3, 6);
        CHECK(lhs == rhs);
    }
}
