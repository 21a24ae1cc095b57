#include "superinv/gens.hpp"

#include "superinv/errors.hpp"
#include "superinv/membership.hpp"
#include "superinv/weyl.hpp"

#include <algorithm>
#include <utility>

namespace superinv {

namespace {

bool is_gl_type(Family f) { return f == Family::gl || f == Family::sl || f == Family::psl; }
bool is_osp(Family f) { return f == Family::ospB || f == Family::ospD; }
bool is_pe(Family f) { return f == Family::pe || f == Family::spe; }
bool is_vect(Family f) { return f == Family::vect || f == Family::svect || f == Family::svect_tilde; }

bool sl22_type(const RootDatum& d) {
    return (d.spec.family == Family::sl || d.spec.family == Family::psl) && d.spec.n == 2 && d.spec.m == 2;
}
bool spe4(const RootDatum& d) { return d.spec.family == Family::spe && d.spec.n == 4; }

std::vector<Poly> full_coords(const RootDatum& d, Block b) {
    std::vector<Poly> out;
    for (std::size_t i = 0; i < d.full->size(); ++i)
        if (d.full->block(i) == b) out.push_back(Poly::variable(d.full, i));
    return out;
}

Poly power_sum_full(const RootDatum& d, Block b, int k) {
    Poly s(d.full);
    for (const auto& x : full_coords(d, b)) s += pow(x, k);
    return s;
}

// Multiply a truncated series in s by (1 + c s^p), or divide by (1 - c s^p).
void mul_binomial(std::vector<Poly>& ser, const Poly& c, int p) {
    for (std::size_t i = ser.size(); i-- > static_cast<std::size_t>(p);)
        ser[i] += c * ser[i - static_cast<std::size_t>(p)];
}
void div_geometric(std::vector<Poly>& ser, const Poly& c, int p) {
    for (std::size_t i = static_cast<std::size_t>(p); i < ser.size(); ++i)
        ser[i] += c * ser[i - static_cast<std::size_t>(p)];
}

struct Gen {
    Poly p;
    int degree;
};

void products_rec(const std::vector<Gen>& gens, std::size_t from, int left, const Poly& acc,
                  std::vector<Poly>& out) {
    if (left == 0) {
        out.push_back(acc);
        return;
    }
    for (std::size_t i = from; i < gens.size(); ++i)
        if (gens[i].degree <= left) products_rec(gens, i, left - gens[i].degree, acc * gens[i].p, out);
}

std::vector<Poly> products(const RootDatum& d, const std::vector<Gen>& gens, int deg) {
    std::vector<Poly> out;
    products_rec(gens, 0, deg, Poly::constant(d.vt, 1), out);
    return out;
}

void add_times_invariants(const RootDatum& d, const Poly& factor, int deg, std::vector<Poly>& out) {
    const int rest = deg - factor.degree();
    if (rest < 0) return;
    for (const auto& b : invariant_basis(d, rest).polys()) out.push_back(factor * b);
}

Poly special(const RootDatum& d, const std::string& name) {
    for (auto& [n, p] : special_invariants(d).items)
        if (n == name) return p;
    throw UsageError("no special invariant " + name);
}

Poly epsilon_delta_factor(const RootDatum& d) {
    Poly q = Poly::constant(d.full, 1);
    auto eps = full_coords(d, Block::epsilon);
    auto del = full_coords(d, Block::delta);
    for (const auto& e : eps) q = q * e;
    for (const auto& e : eps)
        for (const auto& x : del) q = q * (e * e - x * x);
    return d.reduce(q);
}

}  // namespace

Poly power_sums(const RootDatum& d, int k) {
    const Family f = d.spec.family;
    if (is_gl_type(f)) {
        if (k < 1) throw UsageError("power sum index must be at least 1");
        return d.reduce(power_sum_full(d, Block::epsilon, k) - power_sum_full(d, Block::delta, k));
    }
    if (is_osp(f)) {
        if (k < 1) throw UsageError("power sum index must be at least 1");
        return d.reduce(power_sum_full(d, Block::epsilon, 2 * k) - power_sum_full(d, Block::delta, 2 * k));
    }
    if (is_pe(f)) {
        if (k < 0) throw UsageError("power sum index must be non-negative");
        return d.reduce(power_sum_full(d, Block::epsilon, 2 * k + 1));
    }
    throw UsageError("no power sums for " + d.spec.name());
}

std::vector<Poly> F_series(const RootDatum& d, int order) {
    if (order < 1) throw UsageError("series order must be at least 1");
    const Family f = d.spec.family;
    const auto n = static_cast<std::size_t>(order) + 1;
    std::vector<Poly> ser(n, Poly(d.full));
    ser[0] = Poly::constant(d.full, 1);
    if (is_gl_type(f)) {
        for (const auto& x : full_coords(d, Block::delta)) mul_binomial(ser, -x, 1);
        for (const auto& x : full_coords(d, Block::epsilon)) div_geometric(ser, x, 1);
    } else if (is_osp(f)) {
        for (const auto& x : full_coords(d, Block::delta)) mul_binomial(ser, -(x * x), 2);
        for (const auto& x : full_coords(d, Block::epsilon)) div_geometric(ser, x * x, 2);
    } else if (is_pe(f)) {
        for (const auto& x : full_coords(d, Block::epsilon)) {
            mul_binomial(ser, x, 1);
            div_geometric(ser, x, 1);
        }
    } else if (f == Family::ab3) {
        for (const auto& a : d.odd_roots) mul_binomial(ser, -Poly::linear(d.full, a), 1);
        for (const auto& b : d.even_roots) div_geometric(ser, Poly::linear(d.full, b), 1);
    } else {
        throw UsageError("no F(t) description for " + d.spec.name());
    }
    std::vector<Poly> out;
    for (std::size_t i = 1; i < n; ++i) out.push_back(d.reduce(ser[i]));
    return out;
}

Poly odd_root_product(const RootDatum& d) {
    if (d.tilde.empty()) throw UsageError("no reduced odd roots for " + d.spec.name());
    // Closed under W up to sign; for svect the positive system can split an orbit.
    // Each root enters nu times, the lowest term of prod(1 - e^alpha) over odd root spaces.
    std::vector<std::pair<LinearForm, int>> roots;
    auto known = [&](const LinearForm& l) {
        return std::any_of(roots.begin(), roots.end(), [&](const auto& r) { return r.first == l; });
    };
    for (const auto& t : d.tilde) roots.emplace_back(t.root, t.nu);
    for (std::size_t i = 0; i < roots.size(); ++i)
        for (const auto& g : d.weyl_gens) {
            LinearForm img(d.dim());
            for (std::size_t j = 0; j < d.dim(); ++j)
                for (std::size_t k = 0; k < d.dim(); ++k) img[j] += g(j, k) * roots[i].first[k];
            LinearForm neg = img;
            for (auto& x : neg) x = -x;
            if (!known(img) && !known(neg)) roots.emplace_back(img, roots[i].second);
        }
    Poly q = Poly::constant(d.vt, 1);
    for (const auto& [r, nu] : roots) q = q * pow(d.linear(r), nu);
    return q;
}

GeneratorSet special_invariants(const RootDatum& d) {
    GeneratorSet g;
    g.family = family_tag(d.spec.family);
    auto x = [&](std::size_t i) { return Poly::variable(d.full, i); };
    switch (d.spec.family) {
        case Family::osp_alpha: {
            const Rational lambda[3] = {-(1 + d.spec.alpha), Rational(1), d.spec.alpha};
            Poly q(d.full);
            for (std::size_t i = 0; i < 3; ++i) q += (x(i) * x(i)) * Rational(1 / lambda[i]);
            g.items.emplace_back("q", d.reduce(q));
            break;
        }
        case Family::ag2: {
            Poly q = x(3) * x(3) * Rational(3);
            for (std::size_t i = 0; i < 3; ++i) q -= x(i) * x(i) * Rational(2);
            g.items.emplace_back("3d1^2-2(l1^2+l2^2+l3^2)", d.reduce(q));
            break;
        }
        case Family::ab3: {
            Poly e1 = x(0), e2 = x(1), e3 = x(2), dl = x(3);
            Poly l2 = (e1 * e1 + e2 * e2 + e3 * e3) * Rational(3) - dl * dl;
            Poly l6 = pow(dl, 6) + pow(e1, 6) + pow(e2, 6) + pow(e3, 6);
            for (const auto& [a, b] : {std::pair{e1, e2}, std::pair{e1, e3}, std::pair{e2, e3}})
                l6 += pow(a - b, 6) + pow(a + b, 6);
            Poly tail(d.full);
            for (int s1 : {1, -1})
                for (int s2 : {1, -1})
                    for (int s3 : {1, -1}) tail += pow(dl + e1 * Rational(s1) + e2 * Rational(s2) + e3 * Rational(s3), 6);
            l6 -= tail * Rational(1, 64);
            g.items.emplace_back("L2", d.reduce(l2));
            g.items.emplace_back("L6", d.reduce(l6));
            break;
        }
        default: throw UsageError("no special invariants for " + d.spec.name());
    }
    return g;
}

std::vector<ExpansionCandidate> ab3_mu_candidates(const RootDatum& d, int power) {
    if (d.spec.family != Family::ab3) throw UsageError("expansion candidates are defined for ab3 only");
    if (power < 1) throw UsageError("power must be positive");
    std::vector<ExpansionCandidate> out;
    out.push_back({"infinity", F_series(d, power).back(), "coefficient of t^-" + std::to_string(power) +
                                                            " after removing t^" +
                                                            std::to_string(static_cast<long>(d.odd_roots.size()) -
                                                                           static_cast<long>(d.even_roots.size()))});
    // F is homogeneous of degree |odd| - |even| < 0 in (t, roots), so every Taylor
    // coefficient at t = 0 is a rational function of negative degree.
    const long weight = static_cast<long>(d.odd_roots.size()) - static_cast<long>(d.even_roots.size());
    out.push_back({"zero", std::nullopt,
                   "coefficient of t^" + std::to_string(power) + " has degree " + std::to_string(weight - power) +
                       ", not a polynomial"});
    return out;
}

GradedSubspace normal_form_basis(const RootDatum& d, int deg) {
    if (deg < 0) throw UsageError("negative degree");
    const Family f = d.spec.family;
    std::vector<Poly> span;
    auto unit_if_zero = [&] {
        if (deg == 0) span.push_back(Poly::constant(d.vt, 1));
    };

    if (sl22_type(d)) {
        unit_if_zero();
        if (deg >= 1) span.push_back(F_series(d, deg).back());
        add_times_invariants(d, odd_root_product(d), deg, span);
    } else if (is_gl_type(f)) {
        std::vector<Gen> gens;
        const int start = f == Family::psl ? 2 : 1;
        for (int k = start; k <= deg; ++k) {
            Poly p = power_sums(d, k);
            if (!p.is_zero()) gens.push_back({p, k});
        }
        span = products(d, gens, deg);
    } else if (is_osp(f)) {
        std::vector<Gen> gens;
        for (int k = 1; 2 * k <= deg; ++k) gens.push_back({power_sums(d, k), 2 * k});
        span = products(d, gens, deg);
        if (f == Family::ospD) add_times_invariants(d, epsilon_delta_factor(d), deg, span);
    } else if (f == Family::osp_alpha || f == Family::ag2) {
        const Poly q = special(d, f == Family::osp_alpha ? "q" : "3d1^2-2(l1^2+l2^2+l3^2)");
        if (deg % 2 == 0) span.push_back(pow(q, deg / 2));
        add_times_invariants(d, odd_root_product(d), deg, span);
    } else if (f == Family::ab3) {
        std::vector<Gen> gens{{special(d, "L2"), 2}, {special(d, "L6"), 6}};
        span = products(d, gens, deg);
        add_times_invariants(d, odd_root_product(d), deg, span);
    } else if (spe4(d)) {
        unit_if_zero();
        if (deg >= 1) span.push_back(F_series(d, deg).back());
        add_times_invariants(d, odd_root_product(d), deg, span);
    } else if (is_pe(f)) {
        std::vector<Gen> gens;
        for (int k = 0; 2 * k + 1 <= deg; ++k) {
            Poly p = power_sums(d, k);
            if (!p.is_zero()) gens.push_back({p, 2 * k + 1});
        }
        span = products(d, gens, deg);
    } else if (is_vect(f)) {
        unit_if_zero();
        add_times_invariants(d, odd_root_product(d), deg, span);
    }

    GradedSubspace out = GradedSubspace::span(d.vt, deg, span);
    if (f == Family::psl) out = translation_slice(d, out);
    return out;
}

Poly express_PQ(const Poly& f, const RootDatum& d) {
    if (!is_invariant(d, f)) throw ContractViolation("f is not W-invariant");
    for (const auto& h : d.translations)
        if (!directional_derivative(f, h).is_zero())
            throw ContractViolation("f is not a function on the Cartan of " + d.spec.name());
    Poly p = odd_root_product(d) * f;
    MembershipVerdict v = in_I(p, d);
    if (!v.ok) throw TheoremViolation("Q*f fails membership for " + d.spec.name());
    return p;
}

GeneratorSet generators(const RootDatum& d, int max_degree) {
    GeneratorSet g;
    g.family = family_tag(d.spec.family);
    const Family f = d.spec.family;
    auto add = [&](const std::string& name, const Poly& p) {
        if (!p.is_zero() && p.degree() <= max_degree) g.items.emplace_back(name, p);
    };
    if (sl22_type(d) || spe4(d) || f == Family::psl) {
        // The closed form is not a free polynomial ring here; list a basis per degree.
        for (int deg = 1; deg <= max_degree; ++deg) {
            auto basis = normal_form_basis(d, deg).polys();
            for (std::size_t i = 0; i < basis.size(); ++i)
                add("I" + std::to_string(deg) + "_" + std::to_string(i + 1), basis[i]);
        }
    } else if (is_gl_type(f)) {
        for (int k = 1; k <= max_degree; ++k) add("Delta_" + std::to_string(k), power_sums(d, k));
    } else if (is_osp(f)) {
        for (int k = 1; 2 * k <= max_degree; ++k) add("Delta_" + std::to_string(2 * k), power_sums(d, k));
        if (f == Family::ospD) add("Q_D", epsilon_delta_factor(d));
    } else if (is_pe(f)) {
        for (int k = 0; 2 * k + 1 <= max_degree; ++k) add("Delta_" + std::to_string(2 * k + 1), power_sums(d, k));
    } else if (f == Family::osp_alpha || f == Family::ag2 || f == Family::ab3) {
        for (auto& [n, p] : special_invariants(d).items) add(n, p);
        add("Q", odd_root_product(d));
    } else if (is_vect(f)) {
        add("Q", odd_root_product(d));
    }
    return g;
}

}  // namespace superinv
