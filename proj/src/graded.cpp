#include "superinv/graded.hpp"

#include "superinv/errors.hpp"

#include <utility>

namespace superinv {

GradedSubspace::GradedSubspace(VarTablePtr vt, int degree)
    : vt_(std::move(vt)), degree_(degree) {
    ambient_ = monomials_of_degree(vt_->size(), degree);
    for (std::size_t i = 0; i < ambient_.size(); ++i) index_.emplace(ambient_[i], i);
    space_ = Subspace(ambient_.size());
}

GradedSubspace GradedSubspace::span(VarTablePtr vt, int degree, const std::vector<Poly>& polys) {
    GradedSubspace g(std::move(vt), degree);
    std::vector<QVector> rows;
    for (const auto& p : polys) rows.push_back(g.coords(p));
    g.space_ = Subspace::span(g.ambient_.size(), rows);
    return g;
}

GradedSubspace GradedSubspace::whole(VarTablePtr vt, int degree) {
    GradedSubspace g(std::move(vt), degree);
    g.space_ = Subspace::whole(g.ambient_.size());
    return g;
}

GradedSubspace GradedSubspace::from_space(VarTablePtr vt, int degree, Subspace space) {
    GradedSubspace g(std::move(vt), degree);
    if (space.ambient() != g.ambient_.size()) throw UsageError("ambient dimension mismatch");
    g.space_ = std::move(space);
    return g;
}

QVector GradedSubspace::coords(const Poly& p) const {
    if (!p.is_zero()) require_same_table(p, Poly(vt_));
    QVector v(ambient_.size());
    for (const auto& [m, c] : p.terms()) {
        auto it = index_.find(m);
        if (it == index_.end())
            throw UsageError("polynomial is not homogeneous of degree " + std::to_string(degree_));
        v[it->second] = c;
    }
    return v;
}

Poly GradedSubspace::to_poly(const QVector& v) const {
    Poly p(vt_);
    for (std::size_t i = 0; i < v.size(); ++i) p.add_term(ambient_[i], v[i]);
    return p;
}

std::vector<Poly> GradedSubspace::polys() const {
    std::vector<Poly> out;
    for (std::size_t i = 0; i < dim(); ++i) out.push_back(to_poly(space_.basis().row(i)));
    return out;
}

bool GradedSubspace::contains(const Poly& p) const { return space_.contains(coords(p)); }

GradedSubspace subspace_intersection(const std::vector<GradedSubspace>& spaces) {
    if (spaces.empty()) throw UsageError("intersection of no subspaces");
    std::vector<Subspace> raw;
    for (const auto& s : spaces) {
        if (s.degree() != spaces.front().degree()) throw UsageError("degree mismatch");
        raw.push_back(s.space());
    }
    return GradedSubspace::from_space(spaces.front().vars(), spaces.front().degree(),
                                      subspace_intersection(raw));
}

GradedSubspace kernel_within(const GradedSubspace& within,
                             const std::vector<std::vector<Poly>>& images) {
    const std::size_t k = within.dim();
    if (images.size() != k) throw UsageError("one image list per basis element required");
    // Row index: (position in image list, monomial).
    std::map<std::pair<std::size_t, Monomial>, std::size_t> rows;
    std::vector<std::vector<std::pair<std::size_t, Rational>>> entries(k);
    for (std::size_t b = 0; b < k; ++b)
        for (std::size_t slot = 0; slot < images[b].size(); ++slot)
            for (const auto& [m, c] : images[b][slot].terms()) {
                auto key = std::make_pair(slot, m);
                auto it = rows.emplace(key, rows.size()).first;
                entries[b].emplace_back(it->second, c);
            }
    if (rows.empty()) return within;
    QMatrix a(rows.size(), k);
    for (std::size_t b = 0; b < k; ++b)
        for (const auto& [r, c] : entries[b]) a(r, b) += c;
    std::vector<QVector> combos;
    const QMatrix& basis = within.space().basis();
    for (const auto& w : kernel_basis(a)) {
        QVector v(basis.cols());
        for (std::size_t b = 0; b < k; ++b)
            if (sgn(w[b]) != 0)
                for (std::size_t j = 0; j < v.size(); ++j) v[j] += w[b] * basis(b, j);
        combos.push_back(std::move(v));
    }
    return GradedSubspace::from_space(within.vars(), within.degree(),
                                      Subspace::span(basis.cols(), combos));
}

}  // namespace superinv
