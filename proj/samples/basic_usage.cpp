// Builds a modular support over Z/6, computes the generalized weights of a
// small code by two independent routes, and prints the Betti table of its ideal.

#include "modsupp/modsupp.hpp"

#include <iostream>

using namespace modsupp;

int main() {
    const Ring R = Ring::zm(6);
    auto vec = [&](std::initializer_list<int> xs) {
        Vector v;
        for (const int x : xs) v.push_back(R.from_int(x));
        return v;
    };

    // Coordinate support on Z/6: the 2-part and the 3-part of each entry get
    // their own coordinates, so sigma maps R^3 to N^6.
    const Support omega = Support::table(R, 1, {{0, 0}, {2, 1}, {0, 1}, {2, 0}, {0, 1}, {2, 1}});
    const Support sigma = Support::compose_linear(Support::product({omega, omega, omega}), {vec({3, 4, 1}), vec({5, 3, 3}), vec({2, 4, 5})});
    require_modular(sigma);

    const Code C(R, 3, {vec({3, 1, 2}), vec({2, 4, 3})});
    std::cout << "|C| = " << C.size() << ", M(C) = " << big_M(C) << '\n';

    const CodeIdeal I = ideal_of_code(C, sigma);
    std::cout << "I_C = (" << I.ideal.to_text() << ")\n";

    const WeightProfile fast = gen_weights_fast(C, sigma);
    const WeightProfile betti = weights_from_betti(C, sigma);
    std::cout << "d (subcode search):";
    for (const auto d : fast.d) std::cout << ' ' << d;
    std::cout << "\nd (Betti shifts):  ";
    for (const auto d : betti.d) std::cout << ' ' << d;
    std::cout << '\n';

    const BettiTable t = betti_numbers(I.ideal);
    for (const auto& [r, row] : t.coarse) {
        std::cout << "beta_" << r << ":";
        for (const auto& [deg, count] : row) std::cout << "  S(-" << deg << ")^" << count;
        std::cout << '\n';
    }
    return fast.d == betti.d ? 0 : 1;
}
