// A short tour of the library API: build an algebra of vector fields from
// text, inspect its structure, classify it, and run the rational-function
// power decomposition.

#include <iostream>

#include "planarlie/classify.hpp"
#include "planarlie/ratpower.hpp"
#include "planarlie/textio.hpp"

using namespace planarlie;

int main() {
    // brackets of planar vector fields over Q(x, y)
    Derivation a = parse_derivation("dy - x dx");
    Derivation b = parse_derivation("dx");
    std::cout << "[" << derivation_str(a) << ", " << derivation_str(b)
              << "] = " << derivation_str(bracket(a, b)) << "\n";

    // closure of a generating set and its structure
    LieAlgebra L = LieAlgebra::close(parse_generators("x dy; y dx"));
    std::cout << "closure of {x dy, y dx} has dimension " << L.dim() << "\n";
    Predicates p = L.predicates();
    std::cout << "solvable: " << (p.solvable ? "yes" : "no")
              << ", perfect: " << (p.perfect ? "yes" : "no") << "\n";

    // classification with an exact witness basis
    Classification c = classify(L);
    std::cout << "type: " << type_name(c.type) << "\n";
    for (std::size_t i = 0; i < c.names.size(); ++i)
        std::cout << "  " << c.names[i] << " = " << derivation_str(L.element(c.witness[i])) << "\n";

    // the power decomposition of a proportional pair phi = c1 theta^s, psi = c2 theta^t
    DecomposeResult d = power_decompose(parse_ratfunc_t("t^4(t+1)^2"), parse_ratfunc_t("t^6(t+1)^3"));
    std::cout << "theta = " << ratfunc_str_t(d.theta) << ", s = " << d.s << ", t = " << d.t
              << ", mu = " << rat_str(d.mu) << "\n";
    return 0;
}
