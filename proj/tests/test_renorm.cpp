#include <support/oracles.hpp>
#include <support/printers.hpp>

#include <qfa/random.hpp>
#include <qfa/renorm.hpp>

using namespace qfa;
using oracle::poly;
using oracle::poly_element;

namespace
{

monomial w(std::initializer_list<generator_index> idx)
{
    return monomial::from_indices(idx);
}

element e(generator_index i)
{
    return element::generator(i);
}

// zeta with a free symbol on every word of grading 2..4 in distinct generators e1..e4.
basic_scheme<poly> symbolic_scheme()
{
    basic_scheme<poly>::value_map values;
    for (const auto &m : all_monomials(4, 4)) {
        bool distinct = true;
        for (const auto &[i, k] : m.factors()) {
            distinct = distinct && k == 1;
        }
        if (distinct && m.grading() >= 2) {
            values[m] = oracle::zeta_var(m);
        }
    }
    return basic_scheme<poly>(std::move(values));
}

poly z(std::initializer_list<generator_index> idx)
{
    return oracle::zeta_var(w(idx));
}

poly p(generator_index i, generator_index j)
{
    return oracle::pairing_var(i, j);
}

poly_element pe(generator_index i)
{
    return poly_element::generator(i);
}

poly_element pw(std::initializer_list<generator_index> idx)
{
    return poly_element(w(idx));
}

} // namespace

TEST_CASE("scheme values", "[renorm]")
{
    const scheme zeta({{w({1, 2}), scalar(rational(1, 3))}, {w({1, 1, 2}), scalar(2L)}});
    CHECK(zeta(monomial{}) == scalar(1L));
    CHECK(zeta(w({1})) == scalar(0L));
    CHECK(scheme_eval(zeta, element(w({1, 2}), scalar(2L)) + element(w({1, 1, 2}), scalar(3L))) ==
          scalar(rational(2, 3)) + scalar(6L));
    CHECK_THROWS_AS(scheme({{w({1}), scalar(1L)}}), std::invalid_argument);
}

TEST_CASE("convolution", "[renorm]")
{
    const scheme zeta({{w({1, 2}), scalar(rational(1, 3))}, {w({1, 2, 3}), scalar(2L)}});
    const scheme other({{w({1, 2}), scalar(rational(-1, 2))}});
    const auto with_counit = convolve(zeta.functional(), functional::counit());
    for (const auto &m : all_monomials(3, 4)) {
        CHECK(with_counit(m) == zeta(m));
    }
    CHECK(convolve(zeta.functional(), other.functional())(w({1, 2})) == zeta(w({1, 2})) + other(w({1, 2})));

    rng_type rng(21);
    for (int k = 0; k < 10; ++k) {
        const auto s = random_scheme(rng, 3, 6);
        const auto unit = convolve(s.functional(), s.inverse());
        for (const auto &m : all_monomials(3, 6)) {
            CHECK(unit(m) == (m.is_unit() ? scalar(1L) : scalar(0L)));
        }
    }
}

TEST_CASE("convolution inverse in closed form", "[renorm]")
{
    const auto zeta = symbolic_scheme();
    const auto &inv = zeta.inverse();
    CHECK(inv(w({1})) == poly(0L));
    CHECK(inv(w({1, 2})) == -z({1, 2}));
    CHECK(inv(w({1, 2, 3})) == -z({1, 2, 3}));
    CHECK(inv(w({1, 2, 3, 4})) == -z({1, 2, 3, 4}) + poly(2L) * z({1, 2}) * z({3, 4}) +
                                      poly(2L) * z({1, 3}) * z({2, 4}) + poly(2L) * z({1, 4}) * z({2, 3}));
}

TEST_CASE("Z-pairing in closed form", "[renorm]")
{
    const auto zeta = symbolic_scheme();
    auto Z = [&](std::initializer_list<generator_index> a, std::initializer_list<generator_index> b) {
        return zeta.z(w(a), w(b));
    };
    CHECK(Z({1}, {2}) == z({1, 2}));
    CHECK(Z({1}, {2, 3}) == z({1, 2, 3}));
    CHECK(Z({1, 2}, {3, 4}) == z({1, 2, 3, 4}) - z({1, 2}) * z({3, 4}));
    CHECK(Z({1}, {2, 3, 4}) ==
          z({1, 2, 3, 4}) - z({1, 2}) * z({3, 4}) - z({1, 3}) * z({2, 4}) - z({2, 3}) * z({1, 4}));
    CHECK(Z({1, 2}, {3, 4}) == Z({1}, {2, 3, 4}) + Z({1}, {3}) * Z({2}, {4}) + Z({2}, {3}) * Z({1}, {4}));
    for (const auto &m : all_monomials(4, 3)) {
        CHECK(Z({}, {}) == poly(1L));
        CHECK(zeta.z(monomial{}, m) == (m.is_unit() ? poly(1L) : poly(0L)));
    }
    CHECK(Z({1, 3}, {2}) == Z({2}, {1, 3}));
}

TEST_CASE("modified pairing in closed form", "[renorm]")
{
    const auto zeta = symbolic_scheme();
    const auto L = oracle::symbolic_pairing(4);
    const basic_renormalised_pairing<poly> mp(zeta, L);
    CHECK(mp(pe(1), pe(2)) == z({1, 2}) + p(1, 2));
    CHECK(mp(pe(1), pw({2, 3})) == z({1, 2, 3}));
    CHECK(mp(pw({1, 2}), poly_element::one()) == poly(0L));
    CHECK(mp(poly_element::one(), poly_element::one()) == poly(1L));
}

TEST_CASE("renormalised circle product in closed form", "[renorm]")
{
    const auto zeta = symbolic_scheme();
    const auto L = oracle::symbolic_pairing(4);
    CHECK(circle_renorm(pe(1), pe(2), zeta, L) == pw({1, 2}) + poly_element(z({1, 2}) + p(1, 2)));
    CHECK(circle_renorm(pw({1, 2}), pe(3), zeta, L) ==
          pw({1, 2, 3}) + poly_element(z({1, 2, 3})) + pe(2) * (p(1, 3) + z({1, 3})) + pe(1) * (p(2, 3) + z({2, 3})));
    CHECK(circle_renorm(pw({1, 2, 4}), poly_element::one(), zeta, L) == pw({1, 2, 4}));
    CHECK(circle_renorm(poly_element::one(), pw({3, 4}), zeta, L) == pw({3, 4}));
}

TEST_CASE("trivial scheme reduces to the circle product", "[renorm]")
{
    rng_type rng(22);
    const auto L = random_pairing(rng, 3, false, true);
    const renormalised_pairing mp(scheme{}, L);
    for (int k = 0; k < 40; ++k) {
        const auto u = random_element(rng, 3, 4);
        const auto v = random_element(rng, 3, 4);
        CHECK(mp.circle(u, v) == circle(u, v, L));
        CHECK(mp(u, v) == pairing(u, v, L));
    }
}

TEST_CASE("renormalised circle is associative", "[renorm]")
{
    rng_type rng(23);
    for (bool symmetric : {true, false}) {
        const auto L = random_pairing(rng, 3, symmetric);
        const renormalised_pairing mp(random_scheme(rng, 3, 4), L);
        for (int k = 0; k < 25; ++k) {
            const auto u = random_element(rng, 3, 3);
            const auto v = random_element(rng, 3, 3);
            const auto x = random_element(rng, 3, 3);
            CHECK(mp.circle(mp.circle(u, v), x) == mp.circle(u, mp.circle(v, x)));
            if (symmetric) {
                CHECK(mp.circle(u, v) == mp.circle(v, u));
            }
        }
    }
}

TEST_CASE("numeric scheme on a generator pair", "[renorm]")
{
    const scheme zeta({{w({1, 2}), scalar(rational(3, 4))}});
    CHECK(z_pairing(e(1), e(2), zeta) == scalar(rational(3, 4)));
    CHECK(z_pairing(element::one(), e(1) * e(2), zeta) == scalar(0L));
    CHECK(convolution_inverse(zeta)(w({1, 2})) == scalar(rational(-3, 4)));
}
