#pragma once

#include "superinv/graded.hpp"
#include "superinv/poly.hpp"
#include "superinv/superalg.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace superinv {

enum class Condition { w_invariance, d_h, d_h1, d_h2, d_h1_d_h2_order2, translation };

std::string condition_tag(Condition c);

struct Failure {
    LinearForm root;  // empty for conditions not attached to a root
    Condition condition;
    Poly remainder;
};

struct MembershipVerdict {
    bool ok = true;
    std::vector<Failure> failures;
};

struct ConditionOptions {
    bool second_order = true;  // the alpha^2 condition for nu = 2 roots
};

MembershipVerdict in_I_alpha(const Poly& f, const LinearForm& alpha, const RootDatum& d,
                             ConditionOptions opts = {});
MembershipVerdict in_I(const Poly& f, const RootDatum& d);

// I^alpha in degree deg, intersected with `within`.
GradedSubspace I_alpha_slice(const RootDatum& d, std::size_t tilde_index,
                             const GradedSubspace& within, ConditionOptions opts = {});
GradedSubspace translation_slice(const RootDatum& d, const GradedSubspace& within);

// W-invariants satisfying every condition, assembled as one stacked linear system.
GradedSubspace graded_basis(const RootDatum& d, int deg, ConditionOptions opts = {});

// Same space computed root by root and intersected.
GradedSubspace intersection_basis(const RootDatum& d, int deg);

struct DegreeReport {
    int degree = 0;
    std::size_t dim_intersection = 0;
    std::size_t dim_closed_form = 0;
    std::optional<std::size_t> dim_oracle;
    bool equal = false;
};

// with_oracle: compare against the coadjoint oracle for degrees <= oracle_max
// when the algebra is in the oracle catalog.
std::vector<DegreeReport> check_main_theorem(const RootDatum& d, int dmax, bool with_oracle = false,
                                             int oracle_max = 3);

// D_h f / alpha for a nu = 1 root.
Poly rank1_witness(const Poly& f, const LinearForm& alpha, const RootDatum& d);

}  // namespace superinv
