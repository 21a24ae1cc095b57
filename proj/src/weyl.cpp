#include "superinv/weyl.hpp"

#include "superinv/errors.hpp"

#include <deque>
#include <map>
#include <set>

namespace superinv {

std::vector<WeylElement> enumerate(const RootDatum& d, std::size_t cap) {
    const IntMatrix id = IntMatrix::identity(d.dim());
    std::set<IntMatrix> seen{id};
    std::vector<WeylElement> out{{id}};
    std::deque<IntMatrix> queue{id};
    while (!queue.empty()) {
        IntMatrix cur = std::move(queue.front());
        queue.pop_front();
        for (const auto& g : d.weyl_gens) {
            IntMatrix next = g * cur;
            if (!seen.insert(next).second) continue;
            if (seen.size() > cap)
                throw EnumerationError("Weyl group of " + d.spec.name() + " exceeds cap " + std::to_string(cap));
            out.push_back({next});
            queue.push_back(std::move(next));
        }
    }
    return out;
}

bool is_signed_permutation(const IntMatrix& m) {
    for (std::size_t i = 0; i < m.n; ++i) {
        int nonzero = 0;
        for (std::size_t j = 0; j < m.n; ++j) {
            long x = m(j, i);
            if (x == 0) continue;
            if (x != 1 && x != -1) return false;
            ++nonzero;
        }
        if (nonzero != 1) return false;
    }
    return true;
}

namespace {

// Column i of a signed permutation: x_i -> sign * x_target.
struct SignedPerm {
    std::vector<std::size_t> target;
    std::vector<int> sign;
};

SignedPerm as_signed_perm(const IntMatrix& m) {
    SignedPerm s;
    for (std::size_t i = 0; i < m.n; ++i)
        for (std::size_t j = 0; j < m.n; ++j)
            if (m(j, i) != 0) {
                s.target.push_back(j);
                s.sign.push_back(static_cast<int>(m(j, i)));
            }
    return s;
}

std::pair<Monomial, int> apply_signed(const SignedPerm& s, const Monomial& m) {
    Monomial out(m.size(), 0);
    int sign = 1;
    for (std::size_t i = 0; i < m.size(); ++i) {
        out[s.target[i]] += m[i];
        if (s.sign[i] < 0 && (m[i] & 1)) sign = -sign;
    }
    return {out, sign};
}

bool all_signed(const RootDatum& d) {
    for (const auto& g : d.weyl_gens)
        if (!is_signed_permutation(g)) return false;
    return true;
}

// Signed orbit of a monomial; empty when the orbit contains both signs of some monomial.
std::map<Monomial, int> signed_orbit(const std::vector<SignedPerm>& gens, const Monomial& m) {
    std::map<Monomial, int> orbit{{m, 1}};
    std::deque<Monomial> queue{m};
    while (!queue.empty()) {
        Monomial cur = queue.front();
        queue.pop_front();
        const int s = orbit[cur];
        for (const auto& g : gens) {
            auto [img, sg] = apply_signed(g, cur);
            auto [it, inserted] = orbit.emplace(img, s * sg);
            if (inserted) {
                queue.push_back(img);
            } else if (it->second != s * sg) {
                return {};
            }
        }
    }
    return orbit;
}

}  // namespace

Poly act(const IntMatrix& m, const Poly& p) {
    if (m.n != p.nvars()) throw UsageError("Weyl element and polynomial dimensions differ");
    if (is_signed_permutation(m)) {
        const SignedPerm s = as_signed_perm(m);
        Poly r(p.vars());
        for (const auto& [mono, c] : p.terms()) {
            auto [img, sg] = apply_signed(s, mono);
            r.add_term(img, sg > 0 ? c : Rational(-c));
        }
        return r;
    }
    std::vector<Poly> images;
    for (std::size_t i = 0; i < m.n; ++i) {
        LinearForm col(m.n);
        for (std::size_t j = 0; j < m.n; ++j) col[j] = m(j, i);
        images.push_back(Poly::linear(p.vars(), col));
    }
    return substitute(p, images);
}

Poly act(const WeylElement& w, const Poly& p) { return act(w.matrix, p); }

Poly reynolds(const RootDatum& d, const Poly& p) {
    Poly r(p.vars());
    if (all_signed(d)) {
        std::vector<SignedPerm> gens;
        for (const auto& g : d.weyl_gens) gens.push_back(as_signed_perm(g));
        for (const auto& [mono, c] : p.terms()) {
            auto orbit = signed_orbit(gens, mono);
            if (orbit.empty()) continue;
            Rational w = c / static_cast<long>(orbit.size());
            for (const auto& [img, sg] : orbit) r.add_term(img, sg > 0 ? w : Rational(-w));
        }
        return r;
    }
    const auto group = enumerate(d);
    for (const auto& w : group) r += act(w, p);
    r *= Rational(1, static_cast<long>(group.size()));
    return r;
}

bool is_invariant(const RootDatum& d, const Poly& p) {
    for (const auto& g : d.weyl_gens)
        if (!(act(g, p) == p)) return false;
    return true;
}

GradedSubspace invariant_basis(const RootDatum& d, int degree) {
    GradedSubspace amb(d.vt, degree);
    std::vector<Poly> rows;
    if (all_signed(d)) {
        std::vector<SignedPerm> gens;
        for (const auto& g : d.weyl_gens) gens.push_back(as_signed_perm(g));
        std::set<Monomial> done;
        for (const auto& mono : amb.ambient()) {
            if (done.count(mono)) continue;
            auto orbit = signed_orbit(gens, mono);
            if (orbit.empty()) {
                // Orbit sum cancels; still mark the orbit's monomials.
                std::deque<Monomial> q{mono};
                done.insert(mono);
                while (!q.empty()) {
                    Monomial cur = q.front();
                    q.pop_front();
                    for (const auto& g : gens) {
                        Monomial img = apply_signed(g, cur).first;
                        if (done.insert(img).second) q.push_back(img);
                    }
                }
                continue;
            }
            Poly sum(d.vt);
            for (const auto& [img, sg] : orbit) {
                done.insert(img);
                sum.add_term(img, sg);
            }
            rows.push_back(std::move(sum));
        }
        return GradedSubspace::span(d.vt, degree, rows);
    }
    const auto group = enumerate(d);
    for (const auto& mono : amb.ambient()) {
        Poly p = Poly::monomial(d.vt, mono);
        Poly sum(d.vt);
        for (const auto& w : group) sum += act(w, p);
        rows.push_back(std::move(sum));
    }
    return GradedSubspace::span(d.vt, degree, rows);
}

}  // namespace superinv
