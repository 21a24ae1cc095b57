#pragma once

#include "superinv/exactalg.hpp"
#include "superinv/graded.hpp"
#include "superinv/poly.hpp"
#include "superinv/superalg.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace superinv {

using SparseVector = std::map<std::size_t, Rational>;

// Basis x_0 .. x_{N-1}: even elements first (Cartan first among them), then odd.
struct StructureConstants {
    std::string algebra;
    std::size_t dim_even = 0;
    std::size_t dim_odd = 0;
    std::vector<std::string> labels;
    std::vector<int> parity;
    std::vector<LinearForm> weights;                     // reduced coordinates
    std::vector<std::vector<SparseVector>> brackets;     // [x_i, x_j]
    std::vector<std::size_t> cartan;
    std::vector<LinearForm> weight_map;                  // Cartan-dual coordinate -> reduced form
    VarTablePtr vt;

    std::size_t dim() const { return parity.size(); }
};

constexpr std::size_t kDefaultOracleCap = 20000;

bool in_oracle_catalog(const AlgebraSpec& spec);

StructureConstants build_sc(const AlgebraSpec& spec);

struct SelfCheck {
    bool ok = true;
    std::string detail;  // first offending case
};

SelfCheck check_super_skew(const StructureConstants& sc);
SelfCheck check_jacobi(const StructureConstants& sc);
SelfCheck check_cartan(const StructureConstants& sc);
// rho([x,y]) = rho(x) rho(y) - (-1)^{p(x)p(y)} rho(y) rho(x) on S^d for every basis pair.
SelfCheck check_representation(const StructureConstants& sc, int d);

// Words in the dual coordinates X_k; odd exponents are 0 or 1.
std::vector<Monomial> super_monomials(const StructureConstants& sc, int d);
std::size_t super_dimension(const StructureConstants& sc, int d);

using WordVector = std::map<Monomial, Rational>;

// rho(x_i) applied to one word.
WordVector coadjoint_apply(const StructureConstants& sc, std::size_t i, const Monomial& word);

struct SuperPolySpace {
    int degree = 0;
    std::vector<Monomial> words;
    Subspace space;  // inside Q^{words}
    std::size_t dim() const { return space.dim(); }
};

SuperPolySpace coadjoint_invariants(const StructureConstants& sc, int d,
                                    std::size_t cap = kDefaultOracleCap);

struct Restriction {
    GradedSubspace image;
    bool injective = true;
};

Restriction restrict_to_cartan(const StructureConstants& sc, const SuperPolySpace& space);

struct OracleVerdict {
    std::size_t dim_invariants = 0;
    std::size_t dim_restricted = 0;
    bool injective = true;
    bool matches_membership = false;
};

OracleVerdict oracle_check(const AlgebraSpec& spec, int d);

}  // namespace superinv
