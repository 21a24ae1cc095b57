#include "superinv/membership.hpp"

#include "superinv/errors.hpp"
#include "superinv/gens.hpp"
#include "superinv/oracle.hpp"
#include "superinv/weyl.hpp"

#include <utility>

namespace superinv {

std::string condition_tag(Condition c) {
    switch (c) {
        case Condition::w_invariance: return "W-invariance";
        case Condition::d_h: return "D_h";
        case Condition::d_h1: return "D_h1";
        case Condition::d_h2: return "D_h2";
        case Condition::d_h1_d_h2_order2: return "D_h1_D_h2_order2";
        case Condition::translation: return "translation";
    }
    return "?";
}

namespace {

struct Residue {
    Condition condition;
    std::vector<Poly> parts;  // all must vanish
    Poly witness;
};

std::vector<Residue> alpha_residues(const Poly& f, const TildeRoot& t, ConditionOptions opts) {
    std::vector<Residue> out;
    const bool two = t.nu == 2;
    for (std::size_t i = 0; i < t.dirs.size(); ++i) {
        Condition c = !two ? Condition::d_h : (i == 0 ? Condition::d_h1 : Condition::d_h2);
        auto div = linear_division(directional_derivative(f, t.dirs[i]), t.root, 1);
        out.push_back({c, {div.r[0]}, div.r[0]});
    }
    if (two && opts.second_order) {
        const QVector& h1 = t.dirs.at(0);
        const QVector& h2 = t.dirs.size() > 1 ? t.dirs[1] : t.dirs[0];
        auto div = linear_division(directional_derivative(directional_derivative(f, h2), h1), t.root, 2);
        Poly w = div.r[0] + div.r[1] * Poly::linear(f.vars(), t.root);
        out.push_back({Condition::d_h1_d_h2_order2, {div.r[0], div.r[1]}, w});
    }
    return out;
}

std::vector<Residue> translation_residues(const Poly& f, const RootDatum& d) {
    std::vector<Residue> out;
    for (const auto& z : d.translations) {
        Poly r = directional_derivative(f, z);
        out.push_back({Condition::translation, {r}, r});
    }
    return out;
}

void collect(MembershipVerdict& v, const std::vector<Residue>& rs, const LinearForm& root) {
    for (const auto& r : rs)
        if (!r.witness.is_zero()) {
            v.ok = false;
            v.failures.push_back({root, r.condition, r.witness});
        }
}

void require_table(const Poly& f, const RootDatum& d) {
    if (!f.vars() || !(*f.vars() == *d.vt))
        throw UsageError("polynomial is not over the reduced coordinates of " + d.spec.name());
}

std::vector<Poly> flatten(const std::vector<Residue>& rs) {
    std::vector<Poly> out;
    for (const auto& r : rs)
        for (const auto& p : r.parts) out.push_back(p);
    return out;
}

}  // namespace

MembershipVerdict in_I_alpha(const Poly& f, const LinearForm& alpha, const RootDatum& d,
                             ConditionOptions opts) {
    require_table(f, d);
    int idx = d.tilde_index(alpha);
    if (idx < 0) throw UsageError("root is not in the reduced positive odd set of " + d.spec.name());
    MembershipVerdict v;
    collect(v, alpha_residues(f, d.tilde[static_cast<std::size_t>(idx)], opts), alpha);
    return v;
}

MembershipVerdict in_I(const Poly& f, const RootDatum& d) {
    require_table(f, d);
    MembershipVerdict v;
    for (const auto& g : d.weyl_gens) {
        Poly diff = act(g, f) - f;
        if (!diff.is_zero()) {
            v.ok = false;
            v.failures.push_back({{}, Condition::w_invariance, diff});
            break;
        }
    }
    for (const auto& t : d.tilde) collect(v, alpha_residues(f, t, {}), t.root);
    collect(v, translation_residues(f, d), {});
    return v;
}

GradedSubspace I_alpha_slice(const RootDatum& d, std::size_t tilde_index,
                             const GradedSubspace& within, ConditionOptions opts) {
    const TildeRoot& t = d.tilde.at(tilde_index);
    std::vector<std::vector<Poly>> images;
    for (const auto& b : within.polys()) images.push_back(flatten(alpha_residues(b, t, opts)));
    return kernel_within(within, images);
}

GradedSubspace translation_slice(const RootDatum& d, const GradedSubspace& within) {
    std::vector<std::vector<Poly>> images;
    for (const auto& b : within.polys()) images.push_back(flatten(translation_residues(b, d)));
    return kernel_within(within, images);
}

GradedSubspace graded_basis(const RootDatum& d, int deg, ConditionOptions opts) {
    if (deg < 0) throw UsageError("negative degree");
    GradedSubspace inv = invariant_basis(d, deg);
    std::vector<std::vector<Poly>> images;
    for (const auto& b : inv.polys()) {
        std::vector<Poly> all;
        for (const auto& t : d.tilde)
            for (auto& p : flatten(alpha_residues(b, t, opts))) all.push_back(std::move(p));
        for (auto& p : flatten(translation_residues(b, d))) all.push_back(std::move(p));
        images.push_back(std::move(all));
    }
    return kernel_within(inv, images);
}

GradedSubspace intersection_basis(const RootDatum& d, int deg) {
    GradedSubspace inv = invariant_basis(d, deg);
    std::vector<GradedSubspace> parts{inv};
    for (std::size_t i = 0; i < d.tilde.size(); ++i) parts.push_back(I_alpha_slice(d, i, inv));
    if (!d.translations.empty()) parts.push_back(translation_slice(d, inv));
    return subspace_intersection(parts);
}

std::vector<DegreeReport> check_main_theorem(const RootDatum& d, int dmax, bool with_oracle,
                                             int oracle_max) {
    std::vector<DegreeReport> out;
    const bool oracle_ok = with_oracle && in_oracle_catalog(d.spec);
    for (int deg = 0; deg <= dmax; ++deg) {
        DegreeReport r;
        r.degree = deg;
        GradedSubspace inter = intersection_basis(d, deg);
        GradedSubspace closed = normal_form_basis(d, deg);
        r.dim_intersection = inter.dim();
        r.dim_closed_form = closed.dim();
        r.equal = inter == closed;
        if (oracle_ok && deg <= oracle_max) {
            OracleVerdict ov = oracle_check(d.spec, deg);
            r.dim_oracle = ov.dim_restricted;
            r.equal = r.equal && ov.matches_membership;
        }
        out.push_back(r);
    }
    return out;
}

Poly rank1_witness(const Poly& f, const LinearForm& alpha, const RootDatum& d) {
    require_table(f, d);
    int idx = d.tilde_index(alpha);
    if (idx < 0) throw UsageError("root is not in the reduced positive odd set of " + d.spec.name());
    const TildeRoot& t = d.tilde[static_cast<std::size_t>(idx)];
    if (t.nu != 1) throw ContractViolation("rank-one witness needs nu = 1");
    Poly df = directional_derivative(f, t.dirs.front());
    auto div = linear_division(df, alpha, 1);
    if (!div.r[0].is_zero()) throw ContractViolation("D_h f is not divisible by the root");
    return div.tail;
}

}  // namespace superinv
