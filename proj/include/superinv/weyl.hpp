#pragma once

#include "superinv/graded.hpp"
#include "superinv/poly.hpp"
#include "superinv/superalg.hpp"

#include <cstddef>
#include <vector>

namespace superinv {

struct WeylElement {
    IntMatrix matrix;
};

constexpr std::size_t kDefaultWeylCap = 400000;

// Closure of the generators; identity first, then BFS order.
std::vector<WeylElement> enumerate(const RootDatum& d, std::size_t cap = kDefaultWeylCap);

// Substitutes x_i -> sum_j M(j,i) x_j, so act(w1 w2, p) = act(w1, act(w2, p)).
Poly act(const WeylElement& w, const Poly& p);
Poly act(const IntMatrix& m, const Poly& p);

bool is_signed_permutation(const IntMatrix& m);

// Average over the group generated by the catalog's generators.
Poly reynolds(const RootDatum& d, const Poly& p);

bool is_invariant(const RootDatum& d, const Poly& p);

GradedSubspace invariant_basis(const RootDatum& d, int degree);

}  // namespace superinv
