// Build a small instance, run the tree-union heuristic and compare with the exact optimum.

#include <sbss/sbss.hpp>

#include <iostream>

int main() {
    auto g = sbss::gen_hamiltonian_chords(8, 6, 42);
    std::cout << "input: n=" << g.vertex_count() << " m=" << g.arc_count() << "\n";

    auto approx = sbss::approximate_msbss(g, 0);
    std::cout << "tree union: " << approx.size << " arcs, " << approx.iterations_of_augment << " augmentations\n";

    auto opt = sbss::exact_msbss(g);
    std::cout << "optimum: " << opt.optimum_size << " arcs\n";

    auto minimal = sbss::minimalize(g, approx.solution);
    std::cout << "after minimalize: " << minimal.size << " arcs\n\n";

    std::cout << sbss::emit_dot(g, &opt.witness);
}
