/**
 * @file lattice_walkthrough.cpp
 * @brief Builds a few extensions from ring expressions and prints their
 *        lattices, minimality types and closures.
 */

#include <iostream>

#include "ringlat/dsl.hpp"
#include "ringlat/ringlat.hpp"

using namespace ringlat;

namespace {

void show(const char* base_text, const char* top_text) {
    BuiltPtr base = evaluate(base_text);
    BuiltPtr top = evaluate(top_text);
    Extension ext(*natural_map(*base, *top));
    LatticeReport lat = intermediate_algebras(ext);
    std::cout << base_text << " -> " << top_text << ": " << lat.count << " intermediate rings, length " << lat.length;
    MinimalClassification cls = classify_minimal(lat);
    if (cls.kind != MinimalKind::not_minimal) std::cout << ", minimal " << to_string(cls.kind);
    std::cout << ", seminormalization of size " << seminormalization(ext).size() << ", t-closure of size "
              << t_closure(ext).size() << "\n";
}

}  // namespace

int main() {
    show("GF(2)", "GF(2^2)");
    show("GF(2)", "GF(2) x GF(2) x GF(2)");
    show("Z/8", "Z/8 x Z/8");
    show("Z/2[t]/(t^2)", "(Z/2[t]/(t^2))[x]/(x^2 - t, x*t)");

    CrtExtension fam = make_crt(make_zmod(12), std::vector<ElementSet>{{4}, {3}, {3}});
    std::cout << "Z/12 -> Z/12/(4) x Z/12/(3) x Z/12/(3): pairwise test says "
              << (is_minimal_crt(fam.family).minimal ? "minimal" : "not minimal") << "\n";

    std::cout << "B(5) = " << bell(5) << ", S(5,2) = " << stirling2(5, 2) << "\n";
    return 0;
}
