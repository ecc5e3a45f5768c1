#include <support/oracles.hpp>
#include <support/printers.hpp>

#include <qfa/fock.hpp>
#include <qfa/random.hpp>

using namespace qfa;

namespace
{

fock_structure standard()
{
    return fock_structure(4, {1, 2}, {3, 4}, {{1, 3}, {2, 4}});
}

element e(generator_index i)
{
    return element::generator(i);
}

element word(std::initializer_list<generator_index> idx)
{
    return element(monomial::from_indices(idx));
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

TEST_CASE("Fock structure validation", "[fock]")
{
    CHECK_NOTHROW(standard());
    CHECK_THROWS_AS(fock_structure(4, {1, 2}, {2, 3, 4}, {{1, 3}, {2, 4}}), std::invalid_argument);
    CHECK_THROWS_AS(fock_structure(4, {1, 2}, {3}, {{1, 3}, {2, 4}}), std::invalid_argument);
    CHECK_THROWS_AS(fock_structure(4, {1, 2}, {3, 4}, {{1, 2}, {3, 4}}), std::invalid_argument);
    CHECK_THROWS_AS(fock_structure(4, {1, 2}, {3, 4}, {{1, 3}}), std::invalid_argument);
    const auto f = standard();
    CHECK(f.partner(3) == 1);
    CHECK(f.partner(2) == 4);
}

TEST_CASE("projections", "[fock]")
{
    const auto f = standard();
    CHECK(project_plus(e(1), f) == e(1));
    CHECK(project_plus(word({1, 3}), f).is_zero());
    CHECK(project_plus(element::one(), f) == element::one());
    CHECK(project_minus(e(4), f) == e(4));
    CHECK(project_minus(word({2, 4}), f).is_zero());
}

TEST_CASE("phi", "[fock]")
{
    const auto f = standard();
    const auto one = element::one();
    CHECK(phi(word({1, 3}), f) == tensor2(e(1), e(3)));
    CHECK(phi(one, f) == tensor2(one, one));
    CHECK(phi(word({1, 2}), f) == tensor2(word({1, 2}), one));
    CHECK(phi(word({3, 3}), f) == tensor2(one, word({3, 3})));

    rng_type rng(41);
    for (int k = 0; k < 100; ++k) {
        const auto u = random_element(rng, 4, 4);
        const auto v = random_element(rng, 4, 4);
        CHECK(phi(u * v, f) == phi(u, f) * phi(v, f));
        // Injective: the tensor keeps every term, split into creation and annihilation parts.
        const auto split = phi(u, f);
        element back;
        for (const auto &[key, c] : split.terms()) {
            back.add(key[0] * key[1], c);
        }
        CHECK(back == u);
    }
}

TEST_CASE("involution", "[fock]")
{
    const auto f = standard();
    CHECK(involute(e(1), f) == e(3));
    CHECK(involute(e(1) * scalar(rational(0), rational(1)), f) == e(3) * scalar(rational(0), rational(-1)));
    rng_type rng(42);
    for (int k = 0; k < 50; ++k) {
        const auto u = random_element(rng, 4, 4);
        const auto v = random_element(rng, 4, 4);
        CHECK(involute(involute(u, f), f) == u);
        CHECK(involute(u * v, f) == involute(u, f) * involute(v, f));
    }
}

TEST_CASE("vacuum expectation", "[fock]")
{
    const auto f = standard();
    rng_type rng(43);
    const auto L = random_pairing(rng, 4, true);
    CHECK(vacuum_expectation(element::one(), f) == scalar(1L));
    CHECK(vacuum_expectation(word({1, 3}), f) == scalar(0L));
    CHECK(vacuum_expectation(circle(e(1), e(2), L), f) == L(1, 2));
    for (int k = 0; k < 50; ++k) {
        const auto u = random_element(rng, 4, 4);
        CHECK(vacuum_expectation(u, f) == counit(u));
        CHECK(vacuum_expectation(u) == counit(u));
    }
}
