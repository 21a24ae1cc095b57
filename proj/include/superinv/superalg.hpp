#pragma once

#include "superinv/exactalg.hpp"
#include "superinv/poly.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace superinv {

enum class Family { gl, sl, psl, ospB, ospD, osp_alpha, ag2, ab3, pe, spe, vect, svect, svect_tilde };

// Rank conventions: gl/sl/psl(n|m) have n epsilons and m deltas; ospB(2m+1|2n) and
// ospD(2m|2n) have m orthogonal epsilons and n symplectic deltas; pe/spe/vect/svect use n.
struct AlgebraSpec {
    Family family = Family::gl;
    int n = 0;
    int m = 0;
    Rational alpha = 0;

    static AlgebraSpec parse(std::string_view text);
    std::string name() const;
    void validate() const;
};

std::string family_tag(Family f);

struct IntMatrix {
    std::size_t n = 0;
    std::vector<long> a;  // row-major

    IntMatrix() = default;
    explicit IntMatrix(std::size_t size) : n(size), a(size * size, 0) {}
    static IntMatrix identity(std::size_t size);

    long& operator()(std::size_t i, std::size_t j) { return a[i * n + j]; }
    long operator()(std::size_t i, std::size_t j) const { return a[i * n + j]; }
    IntMatrix operator*(const IntMatrix& o) const;
    bool operator==(const IntMatrix& o) const = default;
    bool operator<(const IntMatrix& o) const { return a < o.a; }
};

struct TildeRoot {
    LinearForm root;
    int nu = 1;
    std::vector<QVector> dirs;  // Cartan directions in reduced coordinates
};

// Catalog entry. All roots, directions and Weyl matrices are expressed in the
// relation-reduced coordinates `vt`; `full` keeps the coordinates before elimination.
struct RootDatum {
    AlgebraSpec spec;
    VarTablePtr full;
    VarTablePtr vt;
    std::vector<LinearForm> relations;          // over full coordinates
    std::vector<std::size_t> eliminated;        // full indices removed by the relations
    std::vector<std::size_t> kept;              // full index of each reduced coordinate
    std::vector<LinearForm> even_roots;         // all, distinct
    std::vector<LinearForm> odd_roots;          // all, with multiplicity
    std::vector<LinearForm> even_pos;
    std::vector<LinearForm> odd_pos;            // distinct
    std::vector<TildeRoot> tilde;
    std::vector<IntMatrix> weyl_gens;           // reduced coordinates, column i = image of x_i
    std::vector<std::vector<LinearForm>> weyl_gens_full;
    std::vector<QVector> translations;          // directions along which f must be constant
    std::size_t weyl_order = 0;                 // closed-form group order

    std::size_t dim() const { return vt->size(); }
    LinearForm reduce(const LinearForm& over_full) const;
    Poly reduce(const Poly& over_full) const;
    // Accepts text over the full coordinates and reduces it.
    Poly parse(std::string_view text) const;
    Poly linear(const LinearForm& l) const { return Poly::linear(vt, l); }
    // -1 when the form is not in the reduced positive odd set.
    int tilde_index(const LinearForm& alpha) const;
    const std::vector<LinearForm>& weights_odd() const { return odd_roots; }
};

RootDatum build(const AlgebraSpec& spec);
RootDatum build(std::string_view text);

std::vector<LinearForm> tilde_R_plus(const RootDatum& d);
int nu(const RootDatum& d, const LinearForm& alpha);

}  // namespace superinv
