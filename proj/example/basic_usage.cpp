// Walks through the main entry points for the 4-path ideal of the 6-cycle.

#include "cyclerees/cyclerees.hpp"

#include <iostream>

using namespace cyclerees;

int main() {
    const path_spec spec{6, 4};

    std::cout << "I_4(C_6) generators:\n";
    const ideal I = path_ideal(spec);
    for (const auto& u : I.generators()) {
        std::cout << "  " << to_string(u) << '\n';
    }

    const ideal J = rees_ideal(spec);
    const order_ptr order = make_product_order(J.ring());
    const auto gb = J.groebner(order);
    std::cout << "reduced Groebner basis of J (" << order->descriptor() << "):\n";
    for (const auto& g : gb->elements) {
        std::cout << "  " << to_string(g) << '\n';
    }

    const polynomial h = fiber_relation_h(6);
    std::cout << "h = " << to_string(h) << " in J: " << std::boolalpha << ideal_membership(h, J, order) << '\n';

    const auto in = initial_ideal(J, order);
    std::cout << "in(J) = " << to_string(in) << '\n';
    std::cout << "squarefree: " << is_squarefree(in) << ", x-condition: " << x_condition(in) << '\n';
    std::cout << "Hilbert series: " << to_string(hilbert_numerator(in)) << '\n';

    const auto rec = classify(spec.n, spec.t);
    std::cout << "class: " << to_string(rec.cls) << ", fiber cone dimension " << rec.fiber_dim << '\n';

    const polynomial pf = pfaffian(jacobian_dual(6));
    std::cout << "Pfaffian of the Jacobian dual: " << to_string(pf) << '\n';
    return rec.cls == rees_class::fiber && (pf == h || pf == -h) ? 0 : 1;
}
