#pragma once

#include "superinv/graded.hpp"
#include "superinv/poly.hpp"
#include "superinv/superalg.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace superinv {

struct GeneratorSet {
    std::string family;
    std::vector<std::pair<std::string, Poly>> items;
};

// gl/sl/psl: Delta_k. osp: Delta_{2k}. pe/spe: Delta_{2k+1}, k >= 0.
Poly power_sums(const RootDatum& d, int k);

// Coefficients of t^-1 .. t^-order of F(t) at infinity, leading power of t removed.
std::vector<Poly> F_series(const RootDatum& d, int order);

Poly odd_root_product(const RootDatum& d);

GeneratorSet special_invariants(const RootDatum& d);

// The two expansion points for the exceptional F(t) of ab3.
struct ExpansionCandidate {
    std::string point;           // "infinity" or "zero"
    std::optional<Poly> coeff;   // nullopt when the coefficient is not a polynomial
    std::string note;
};
std::vector<ExpansionCandidate> ab3_mu_candidates(const RootDatum& d, int power);

GradedSubspace normal_form_basis(const RootDatum& d, int deg);

// P = Q f; throws TheoremViolation if P fails membership.
Poly express_PQ(const Poly& f, const RootDatum& d);

// Named closed-form generators up to max_degree, for listing.
GeneratorSet generators(const RootDatum& d, int max_degree);

}  // namespace superinv
