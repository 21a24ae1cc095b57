#pragma once

#include "superinv/exactalg.hpp"
#include "superinv/poly.hpp"

#include <cstddef>
#include <map>
#include <vector>

namespace superinv {

// A subspace of the degree-d homogeneous polynomials, in monomial coordinates.
class GradedSubspace {
public:
    GradedSubspace() = default;
    GradedSubspace(VarTablePtr vt, int degree);

    static GradedSubspace span(VarTablePtr vt, int degree, const std::vector<Poly>& polys);
    static GradedSubspace whole(VarTablePtr vt, int degree);
    static GradedSubspace from_space(VarTablePtr vt, int degree, Subspace space);

    const VarTablePtr& vars() const { return vt_; }
    int degree() const { return degree_; }
    const std::vector<Monomial>& ambient() const { return ambient_; }
    const Subspace& space() const { return space_; }
    std::size_t dim() const { return space_.dim(); }

    QVector coords(const Poly& p) const;
    Poly to_poly(const QVector& v) const;
    std::vector<Poly> polys() const;
    bool contains(const Poly& p) const;
    bool contains(const GradedSubspace& o) const { return space_.contains(o.space_); }

    bool operator==(const GradedSubspace& o) const {
        return degree_ == o.degree_ && space_ == o.space_;
    }

private:
    VarTablePtr vt_;
    int degree_ = 0;
    std::vector<Monomial> ambient_;
    std::map<Monomial, std::size_t> index_;
    Subspace space_;
};

GradedSubspace subspace_intersection(const std::vector<GradedSubspace>& spaces);

// Kernel of a linear map given by its values on a basis of `within`.
// images[i] is the list of polynomials that must vanish for basis element i.
GradedSubspace kernel_within(const GradedSubspace& within,
                             const std::vector<std::vector<Poly>>& images);

}  // namespace superinv
