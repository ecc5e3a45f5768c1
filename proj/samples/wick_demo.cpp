// Wick's theorem three ways: the circle product of four generators, the same product as a
// sum over contractions, and the time-ordered product T = exp(Sigma) of a quartic word.
#include <iostream>
#include <vector>

#include <qfa/qfa.hpp>

int main()
{
    using namespace qfa;
    const auto L = pairing_matrix::from_rows({{scalar(1L), scalar(rational(1, 2)), scalar(rational(1, 3)), scalar(rational(1, 5))},
                                              {scalar(rational(1, 2)), scalar(2L), scalar(rational(1, 7)), scalar(rational(1, 11))},
                                              {scalar(rational(1, 3)), scalar(rational(1, 7)), scalar(3L), scalar(rational(1, 13))},
                                              {scalar(rational(1, 5)), scalar(rational(1, 11)), scalar(rational(1, 13)), scalar(4L)}},
                                             true);

    const std::vector<generator_index> gens{1, 2, 3, 4};
    auto folded = element::one();
    for (auto g : gens) {
        folded = circle(folded, element::generator(g), L);
    }
    std::cout << "e1 o e2 o e3 o e4 = " << format(folded) << "\n";
    std::cout << "contractions      = " << format(wick_expand<scalar>(gens, L)) << "\n\n";

    const t_context ctx(L);
    const element u(monomial::from_indices({1, 1, 2, 2}));
    std::cout << "T(" << format(u) << ") = " << format(t_map(u, ctx)) << "\n";
    std::cout << "exp(Sigma) route  = " << format(exp_sigma(u, ctx)) << "\n";
    std::cout << "t(" << format(u) << ") = " << format(t_scalar(u, ctx)) << "\n";
}
