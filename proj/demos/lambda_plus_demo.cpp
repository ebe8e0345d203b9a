// Small tour of the library: residues, strips, both lambda+ routes, and the
// subdivided idempotent.

#include "klrw/strips.hpp"
#include "klrw/subdivision.hpp"

#include <iostream>

int main() {
    using namespace klrw;

    Multipartition lam{parse_partition("4,3,2")};
    Charge ch({3}, {0});
    const int e = 3;

    std::cout << "lambda = " << multipartition_str(lam) << ", rho = 3, e = " << e << "\n\n";
    std::cout << "residues:\n" << residue_grid_str(lam, ch, e + 1) << "\n";
    std::cout << "strips:\n" << strip_grid_str(lam, ch, e + 1, 0) << "\n";

    LambdaPlusResult plus = lambda_plus(lam, ch, e + 1, 0);
    std::cout << "lambda+ = " << multipartition_str(plus.plus) << " (box and abacus "
              << (plus.agree ? "agree" : "disagree") << ")\n";
    std::cout << "abacus of lambda:\n" << ascii(to_abacus_default(lam.comps[0], 3, e + 1)) << "\n";

    Loading idem = idempotent_loading(lam, ch, Quiver(e));
    std::cout << "1_lambda:   " << signature(idem) << "\n";
    Loading sub = subdivide_idempotent(idem, default_params(idem, 0));
    std::cout << "S(1_lambda): " << signature(sub) << "\n";
    std::cout << "1_{lambda+}: " << signature(subdivided_idempotent_target(lam, ch, Quiver(e), 0)) << "\n";
    auto vc = verify_idempotent_correspondence(lam, ch, Quiver(e), 0);
    std::cout << "correspondence: " << (vc.pass ? "pass" : "FAIL") << "\n";
    return vc.pass ? 0 : 1;
}
