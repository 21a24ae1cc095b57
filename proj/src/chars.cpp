#include "superinv/chars.hpp"

#include "superinv/errors.hpp"
#include "superinv/gens.hpp"
#include "superinv/weyl.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace superinv {

TruncSeries::TruncSeries(VarTablePtr vt, int cutoff) : body_(std::move(vt)), cutoff_(cutoff) {
    if (cutoff < 0) throw UsageError("negative cutoff");
}

TruncSeries::TruncSeries(const Poly& body, int cutoff) : body_(body.truncated_below(cutoff + 1)), cutoff_(cutoff) {
    if (cutoff < 0) throw UsageError("negative cutoff");
}

Poly TruncSeries::lowest() const {
    if (body_.is_zero()) return body_;
    int lo = body_.degree();
    for (const auto& [m, c] : body_.terms()) lo = std::min(lo, total_degree(m));
    return body_.homogeneous_part(lo);
}

TruncSeries TruncSeries::operator+(const TruncSeries& o) const {
    return TruncSeries(body_ + o.body_, std::min(cutoff_, o.cutoff_));
}

TruncSeries TruncSeries::operator-(const TruncSeries& o) const {
    return TruncSeries(body_ - o.body_, std::min(cutoff_, o.cutoff_));
}

TruncSeries TruncSeries::operator*(const TruncSeries& o) const {
    require_same_table(body_, o.body_);
    const int N = std::min(cutoff_, o.cutoff_);
    Poly r(body_.vars());
    Monomial m(body_.nvars());
    for (const auto& [ma, ca] : body_.terms()) {
        const int da = total_degree(ma);
        if (da > N) continue;
        for (const auto& [mb, cb] : o.body_.terms()) {
            if (da + total_degree(mb) > N) continue;
            for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
            r.add_term(m, ca * cb);
        }
    }
    return TruncSeries(r, N);
}

TruncSeries TruncSeries::operator*(const Rational& c) const { return TruncSeries(body_ * c, cutoff_); }

TruncSeries exp_weight(const LinearForm& lambda, VarTablePtr vt, int N) {
    Poly l = Poly::linear(vt, lambda);
    Poly term = Poly::constant(vt, 1);
    Poly sum = term;
    for (int d = 1; d <= N; ++d) {
        term = term * l * Rational(1, d);
        sum += term;
    }
    return TruncSeries(sum, N);
}

VarTablePtr phi_table() {
    static const VarTablePtr vt = make_vartable({{"p", Block::epsilon}});
    return vt;
}

namespace {

Rational ipow(long base, int e) {
    Rational r = 1;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

Rational factorial(int k) {
    Rational r = 1;
    for (int i = 2; i <= k; ++i) r *= i;
    return r;
}

void check_list(int k, const std::vector<long>& n) {
    if (k < 0) throw UsageError("k must be non-negative");
    if (n.size() != static_cast<std::size_t>(k) + 1)
        throw UsageError("need exactly k+1 integers, got " + std::to_string(n.size()));
    std::set<long> seen;
    for (long x : n) {
        if (x < 0) throw UsageError("integers must be non-negative");
        if (!seen.insert(x).second) throw UsageError("singular system: repeated value " + std::to_string(x));
    }
}

QVector solve_square(const QMatrix& a, const QVector& b) {
    if (rank(a) != a.cols()) throw UsageError("singular system");
    auto x = solve(a, b);
    if (!x) throw UsageError("singular system");
    return *x;
}

}  // namespace

QVector sinh_solver(int k, const std::vector<long>& n) {
    check_list(k, n);
    const std::size_t sz = n.size();
    QMatrix a(sz, sz);
    QVector b(sz);
    for (std::size_t i = 0; i < sz; ++i) {
        for (int j = 1; j <= k; ++j) a(static_cast<std::size_t>(j - 1), i) = ipow(n[i] + 1, 2 * j - 1);
        a(sz - 1, i) = ipow(n[i] + 1, 2 * k + 1);
    }
    b[sz - 1] = factorial(2 * k + 1);
    return solve_square(a, b);
}

QVector cosh_solver(int k, const std::vector<long>& n) {
    check_list(k, n);
    const std::size_t sz = n.size();
    QMatrix a(sz, sz);
    QVector b(sz);
    for (std::size_t i = 0; i < sz; ++i)
        for (int j = 0; j <= k; ++j) a(static_cast<std::size_t>(j), i) = ipow(n[i], 2 * j);
    b[sz - 1] = factorial(2 * k);
    return solve_square(a, b);
}

TruncSeries sinh_combination(const QVector& c, const std::vector<long>& a, int N) {
    if (c.size() != a.size()) throw UsageError("coefficient count mismatch");
    Poly s(phi_table());
    for (std::size_t i = 0; i < c.size(); ++i)
        for (int p = 1; p <= N; p += 2) s.add_term({p}, c[i] * ipow(a[i], p) / factorial(p));
    return TruncSeries(s, N);
}

TruncSeries cosh_combination(const QVector& c, const std::vector<long>& a, int N) {
    if (c.size() != a.size()) throw UsageError("coefficient count mismatch");
    Poly s(phi_table());
    for (std::size_t i = 0; i < c.size(); ++i)
        for (int p = 0; p <= N; p += 2) s.add_term({p}, c[i] * ipow(a[i], p) / factorial(p));
    return TruncSeries(s, N);
}

TruncSeries schur_char_sl2(int n, int N) {
    if (n < 0) throw UsageError("negative highest weight");
    TruncSeries ch(phi_table(), N);
    for (int j = 0; j <= n; ++j) ch = ch + exp_weight({Rational(n - 2 * j)}, phi_table(), N);
    return ch;
}

TruncSeries schur_char_gl(const std::vector<int>& lambda, VarTablePtr vt, int N) {
    const std::size_t r = lambda.size();
    if (r == 0 || r > 3 || r > vt->size()) throw UsageError("unsupported gl rank");
    for (std::size_t i = 0; i < r; ++i)
        if (lambda[i] < 0 || (i > 0 && lambda[i] > lambda[i - 1])) throw UsageError("highest weight is not a partition");

    // Semistandard tableaux of shape lambda with entries 1..r; weight = content.
    std::vector<std::vector<int>> tab(r);
    for (std::size_t i = 0; i < r; ++i) tab[i].assign(static_cast<std::size_t>(lambda[i]), 0);
    std::map<std::vector<int>, long> content_count;
    auto rec = [&](auto&& self, std::size_t row, std::size_t col) -> void {
        if (row == r) {
            std::vector<int> content(r, 0);
            for (const auto& rw : tab)
                for (int v : rw) content[static_cast<std::size_t>(v - 1)] += 1;
            content_count[content] += 1;
            return;
        }
        if (col == tab[row].size()) {
            self(self, row + 1, 0);
            return;
        }
        int lo = 1;
        if (col > 0) lo = std::max(lo, tab[row][col - 1]);
        if (row > 0) lo = std::max(lo, tab[row - 1][col] + 1);
        for (int v = lo; v <= static_cast<int>(r); ++v) {
            tab[row][col] = v;
            self(self, row, col + 1);
        }
    };
    rec(rec, 0, 0);
    TruncSeries ch(vt, N);
    for (const auto& [content, mult] : content_count) {
        LinearForm w(vt->size());
        for (std::size_t i = 0; i < r; ++i) w[i] = content[i];
        ch = ch + exp_weight(w, vt, N) * Rational(mult);
    }
    return ch;
}

namespace {

void partitions(int total, int parts, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == parts) {
        if (total == 0) out.push_back(cur);
        return;
    }
    for (int p = std::min(total, max_part); p >= 0; --p) {
        cur.push_back(p);
        partitions(total - p, parts, p, cur, out);
        cur.pop_back();
    }
}

}  // namespace

CharacterCertificate character_certificate(const RootDatum& d, const Poly& f, int search_bound) {
    if (d.spec.family != Family::vect || d.spec.n > 3)
        throw ContractViolation("certificates are implemented for vect(0|n), n <= 3");
    if (!f.vars() || !(*f.vars() == *d.vt)) throw UsageError("polynomial is not over the algebra's coordinates");
    if (f.is_zero()) throw ContractViolation("f must be nonzero");
    if (!(f.homogeneous_part(f.degree()) == f)) throw ContractViolation("f must be homogeneous");
    if (!is_invariant(d, f)) throw ContractViolation("f is not W-invariant");
    if (f.degree() > search_bound) throw ContractViolation("degree of f exceeds the search bound");

    const int n = d.spec.n;
    const int N = n + f.degree();
    const Poly target = odd_root_product(d) * f;

    TruncSeries kac(Poly::constant(d.vt, 1), N);
    for (int i = 0; i < n; ++i) {
        LinearForm e(d.dim());
        e[static_cast<std::size_t>(i)] = 1;
        kac = kac * (TruncSeries(Poly::constant(d.vt, 1), N) - exp_weight(e, d.vt, N));
    }

    std::vector<std::vector<int>> lambdas;
    for (int total = 0; total <= search_bound; ++total) {
        std::vector<int> cur;
        partitions(total, n, total, cur, lambdas);
    }
    std::vector<TruncSeries> columns;
    for (const auto& l : lambdas) columns.push_back(kac * schur_char_gl(l, d.vt, N));

    std::vector<Monomial> monos;
    for (int deg = 0; deg <= N; ++deg)
        for (auto& m : monomials_of_degree(d.dim(), deg)) monos.push_back(std::move(m));
    QMatrix a(monos.size(), columns.size());
    QVector b(monos.size());
    for (std::size_t r = 0; r < monos.size(); ++r) {
        for (std::size_t c = 0; c < columns.size(); ++c) a(r, c) = columns[c].body().coeff(monos[r]);
        b[r] = target.coeff(monos[r]);
    }
    auto x = solve(a, b);
    if (!x) throw NotFound("no combination with |lambda| <= " + std::to_string(search_bound));

    CharacterCertificate cert{{}, TruncSeries(d.vt, N), Poly(d.vt)};
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (sgn((*x)[c]) == 0) continue;
        cert.coefficients.emplace_back(lambdas[c], (*x)[c]);
        cert.series = cert.series + columns[c] * (*x)[c];
    }
    cert.lowest = cert.series.lowest();
    if (!(cert.lowest == target)) throw ContractViolation("certificate does not reproduce Q f");
    return cert;
}

}  // namespace superinv
