#include <support/oracles.hpp>
#include <support/printers.hpp>

#include <qfa/algebra.hpp>
#include <qfa/random.hpp>

using namespace qfa;

namespace
{

element e(generator_index i)
{
    return element::generator(i);
}

element word(std::initializer_list<generator_index> idx, const scalar &c = scalar(1L))
{
    return element(monomial::from_indices(idx), c);
}

tensor_element tensor2(const element &a, const element &b)
{
    tensor_element t(2);
    for (const auto &[ma, ca] : a.terms()) {
        for (const auto &[mb, cb] : b.terms()) {
            t.add({ma, mb}, ca * cb);
        }
    }
    return t;
}

} // namespace

TEST_CASE("vee multiplies basis words and is bilinear", "[algebra]")
{
    CHECK(e(1) * e(2) == word({1, 2}));
    rng_type rng(1);
    for (int k = 0; k < 20; ++k) {
        const auto u = random_element(rng, 4, 4);
        CHECK(element::one() * u == u);
        CHECK(u * element::one() == u);
    }
    const auto lhs = (e(1) + e(2) * scalar(2L)) * e(1);
    CHECK(lhs == word({1, 1}) + word({1, 2}, scalar(2L)));
}

TEST_CASE("coproduct of small words", "[algebra]")
{
    const auto one = element::one();
    CHECK(coproduct(e(1)) == tensor2(e(1), one) + tensor2(one, e(1)));
    CHECK(coproduct(word({1, 2})) ==
          tensor2(word({1, 2}), one) + tensor2(e(1), e(2)) + tensor2(e(2), e(1)) + tensor2(one, word({1, 2})));
    CHECK(coproduct(word({1, 1})) ==
          tensor2(word({1, 1}), one) + scalar(2L) * tensor2(e(1), e(1)) + tensor2(one, word({1, 1})));
}

TEST_CASE("coproduct matches the labelled-position shuffle", "[algebra]")
{
    for (const auto &m : all_monomials(3, 5)) {
        const element u(m);
        CHECK(coproduct(u) == oracle::shuffle_coproduct(u));
    }
    rng_type rng(2);
    for (int k = 0; k < 50; ++k) {
        const auto u = random_element(rng, 4, 5);
        CHECK(coproduct(u) == oracle::shuffle_coproduct(u));
    }
}

TEST_CASE("iterated coproduct", "[algebra]")
{
    CHECK(iterated_coproduct(e(1), 2) == coproduct(e(1)));
    const auto t3 = iterated_coproduct(word({1, 2}), 3);
    const auto right_first = coproduct_on_slot(coproduct(word({1, 2})), 1);
    const auto left_first = coproduct_on_slot(coproduct(word({1, 2})), 0);
    CHECK(t3 == right_first);
    CHECK(left_first == right_first);

    tensor_element unit(3);
    unit.add({monomial{}, monomial{}, monomial{}}, scalar(1L));
    CHECK(iterated_coproduct(element::one(), 3) == unit);
    CHECK_THROWS_AS(iterated_coproduct(e(1), 0), std::invalid_argument);
}

TEST_CASE("counit", "[algebra]")
{
    CHECK(counit(element::one()) == scalar(1L));
    CHECK(counit(word({1, 2})) == scalar(0L));
    CHECK(counit(element(scalar(3L)) + e(1) * scalar(2L)) == scalar(3L));
}

TEST_CASE("antipode", "[algebra]")
{
    CHECK(antipode(e(1)) == e(1) * scalar(-1L));
    CHECK(antipode(word({1, 2})) == word({1, 2}));
    rng_type rng(3);
    for (int k = 0; k < 50; ++k) {
        const auto u = random_element(rng, 4, 3);
        const auto v = random_element(rng, 4, 3);
        CHECK(antipode(u * v) == antipode(u) * antipode(v));
        CHECK(antipode(antipode(u)) == u);
    }
}

TEST_CASE("derivations", "[algebra]")
{
    CHECK(derivation(1, word({1, 2})) == e(2));
    CHECK(derivation(2, word({1, 2})) == e(1));
    CHECK(derivation(1, word({1, 1})) == e(1) * scalar(2L));
    CHECK(derivation(3, word({1, 2})).is_zero());
    rng_type rng(4);
    for (int k = 0; k < 50; ++k) {
        const auto u = random_element(rng, 3, 3);
        const auto v = random_element(rng, 3, 3);
        CHECK(derivation(2, u * v) == derivation(2, u) * v + u * derivation(2, v));
    }
}

TEST_CASE("divided powers", "[algebra]")
{
    CHECK(divided_power<scalar>(2, 0) == element::one());
    CHECK(divided_power<scalar>(2, 1) == e(2));
    CHECK(divided_power<scalar>(1, 2) * divided_power<scalar>(1, 3) == divided_power<scalar>(1, 5) * scalar(10L));

    // Delta a^(n) = sum a^(k) x a^(n-k)
    for (unsigned n = 0; n <= 6; ++n) {
        tensor_element expected(2);
        for (unsigned k = 0; k <= n; ++k) {
            expected += tensor2(divided_power<scalar>(3, k), divided_power<scalar>(3, n - k));
        }
        CHECK(coproduct(divided_power<scalar>(3, n)) == expected);
    }
}

TEST_CASE("Hopf laws on all words of grading at most 4", "[algebra]")
{
    for (const auto &m : all_monomials(3, 4)) {
        const element u(m);
        const auto d = coproduct(u);
        CHECK(coproduct_on_slot(d, 0) == coproduct_on_slot(d, 1));
        CHECK(d.permuted({1, 0}) == d);

        element left, right, anti;
        for (const auto &[key, c] : d.terms()) {
            left.add(key[1], c * counit(element(key[0])));
            right.add(key[0], c * counit(element(key[1])));
            anti += antipode(element(key[0])) * element(key[1]) * c;
        }
        CHECK(left == u);
        CHECK(right == u);
        CHECK(anti == element(counit(u)));
    }
}
