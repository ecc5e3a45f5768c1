// Perturbative two-point function of a single field with a quartic interaction, bare and with
// a renormalisation scheme fixing zeta(e1 v e1).
#include <iostream>

#include <qfa/qfa.hpp>

int main()
{
    using namespace qfa;
    const pairing_matrix L(1, {scalar(1L)}, true);
    const scheme z({{monomial::generator(1, 2), scalar(rational(-1, 2))}});
    const t_context ctx(L, z);

    const element quartic(monomial::generator(1, 4), scalar(rational(1, 24)));
    std::cout << "bare G_11:\n" << format(green(1, 1, quartic, ctx, 3)) << "\n\n";
    std::cout << "renormalised G_11:\n" << format(green(1, 1, quartic, ctx, 3, true)) << "\n\n";

    const auto [lhs, rhs] = simplest_lagrangian_check(1, ctx, 4);
    std::cout << "T(exp(lambda e1)):\n" << format(lhs) << "\n";
    std::cout << "exp(lambda^2 (e1|e1)/2) exp(lambda e1) agrees: " << (lhs == rhs ? "yes" : "no") << "\n";
}
