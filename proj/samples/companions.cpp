// Prints a few companion pairs: Fibonacci/Lucas, sigma at p = 2, Catalan/Xi.

#include <isoring/isoring.hpp>

#include <iostream>

using namespace isoring;

int main() {
    auto fib = evaluated_core({Rational(1), Rational(1)});
    auto f = gfp_sequence(fib, 10);
    auto g = log_op(f, fib, 10);
    std::cout << "n  F_n  G_n\n";
    for (unsigned n = 0; n <= 10; ++n) std::cout << n << "  " << f[n] << "  " << g[n] << "\n";

    auto sigma = local_rep(builtin::sigma(), 2, 6);
    std::cout << "\nsigma at p = 2, core " << core_str(sigma.core()) << "\n";
    auto gs = companion(sigma);
    for (unsigned n = 1; n <= 6; ++n) std::cout << "G_" << n << " = " << gs[n] << "\n";

    auto cat = global_rep(builtin::catalan(), 8);
    auto xi = companion(cat);
    std::cout << "\nCatalan core " << core_str(cat.core()) << "\n";
    for (unsigned n = 1; n <= 8; ++n) std::cout << "Catalan(" << n << ") = " << cat.values[n] << ", Xi(" << n << ") = " << xi[n] << "\n";

    std::cout << "\ngeneric degree 3 different matrix:\n";
    for (auto const& row : different_matrix(generic_core(3)).to_rows()) {
        for (auto const& x : row) std::cout << "  " << x.str();
        std::cout << "\n";
    }
}
