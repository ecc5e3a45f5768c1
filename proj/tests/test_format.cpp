#include <support/oracles.hpp>
#include <support/printers.hpp>

#include <qfa/cli/eval.hpp>
#include <qfa/format.hpp>
#include <qfa/random.hpp>

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

cli::config plain_config(std::uint32_t dim)
{
    cli::config cfg;
    cfg.dimension = dim;
    cfg.pairing = pairing_matrix(dim, std::vector<scalar>(dim * dim, scalar(1L)), true);
    cfg.symmetric = true;
    return cfg;
}

} // namespace

TEST_CASE("scalars", "[format]")
{
    CHECK(format(q(0)) == "0");
    CHECK(format(q(-3, 4)) == "-3/4");
    CHECK(format(scalar(rational(1, 2), rational(3, 4))) == "1/2+3/4i");
    CHECK(format(scalar(rational(1, 2), rational(-3, 4))) == "1/2-3/4i");
    CHECK(format(scalar(rational(0), rational(3, 4))) == "0+3/4i");
}

TEST_CASE("elements", "[format]")
{
    CHECK(format(element{}) == "0");
    CHECK(format(element::one()) == "1");
    CHECK(format(word({1, 2}) + element(q(1, 2))) == "e1 v e2 + 1/2");
    CHECK(format(e(2) * q(-1) + word({1, 1, 3}) * q(2) + e(1) + element(q(-5))) == "2 * e1 v e1 v e3 + e1 - e2 - 5");
    CHECK(format(e(1) * q(-1)) == "-e1");
    CHECK(format(e(1) * q(-1, 2)) == "-1/2 * e1");
    CHECK(format(e(3) + e(1) * scalar(rational(-1, 2), rational(1, 3))) == "-1/2+1/3i * e1 + e3");
    CHECK(format(e(1) + e(3) * scalar(rational(-1, 2), rational(1, 3))) == "e1 - 1/2-1/3i * e3");
    CHECK(format(e(1) + e(3) * scalar(rational(0), rational(-2))) == "e1 - 0+2i * e3");
}

TEST_CASE("tensors and series", "[format]")
{
    tensor_element t(2);
    t.add({monomial::from_indices({1}), monomial{}}, q(1));
    t.add({monomial{}, monomial::from_indices({1})}, q(1));
    CHECK(format(t) == "e1 ⊗ 1 + 1 ⊗ e1");
    CHECK(format(coproduct(word({1, 1}))) == "e1 v e1 ⊗ 1 + 2 * e1 ⊗ e1 + 1 ⊗ e1 v e1");

    const formal_series<scalar> s(std::vector<scalar>{q(1), q(0), q(-1, 2)});
    CHECK(format(s) == "lambda^0: 1\nlambda^1: 0\nlambda^2: -1/2");
}

TEST_CASE("printed elements parse back to themselves", "[format]")
{
    const cli::evaluator ev(plain_config(4));
    rng_type rng(61);
    for (int k = 0; k < 200; ++k) {
        const auto u = random_element(rng, 4, 4, 4);
        const auto text = format(u);
        const auto back = ev.eval(text);
        const element value = std::holds_alternative<scalar>(back) ? element(std::get<scalar>(back)) : std::get<element>(back);
        CHECK(value == u);
        CHECK(format(value) == text);
    }
}
