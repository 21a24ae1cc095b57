#include "superinv/poly.hpp"

#include "superinv/errors.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

namespace superinv {

VarTable::VarTable(std::vector<std::string> names, std::vector<Block> blocks)
    : names_(std::move(names)), blocks_(std::move(blocks)) {
    if (names_.size() != blocks_.size()) throw UsageError("block tags do not match coordinates");
    std::set<std::string> seen(names_.begin(), names_.end());
    if (seen.size() != names_.size()) throw UsageError("duplicate coordinate name");
}

std::optional<std::size_t> VarTable::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return i;
    return std::nullopt;
}

VarTablePtr make_vartable(const std::vector<std::pair<std::string, Block>>& coords) {
    std::vector<std::string> names;
    std::vector<Block> blocks;
    for (const auto& [n, b] : coords) {
        names.push_back(n);
        blocks.push_back(b);
    }
    return std::make_shared<const VarTable>(std::move(names), std::move(blocks));
}

int total_degree(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0); }

bool GrlexDesc::operator()(const Monomial& a, const Monomial& b) const {
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    return a > b;
}

std::vector<Monomial> monomials_of_degree(std::size_t n, int d) {
    std::vector<Monomial> out;
    if (d < 0) return out;
    if (n == 0) {
        if (d == 0) out.emplace_back();
        return out;
    }
    Monomial m(n, 0);
    // Lex-descending: fill the first coordinate as high as possible, recurse.
    auto rec = [&](auto&& self, std::size_t i, int left) -> void {
        if (i + 1 == n) {
            m[i] = left;
            out.push_back(m);
            return;
        }
        for (int e = left; e >= 0; --e) {
            m[i] = e;
            self(self, i + 1, left - e);
        }
    };
    rec(rec, 0, d);
    return out;
}

Rational evaluate(const LinearForm& l, const QVector& h) {
    if (l.size() != h.size()) throw UsageError("linear form and vector lengths differ");
    Rational s = 0;
    for (std::size_t i = 0; i < l.size(); ++i) s += l[i] * h[i];
    return s;
}

bool is_zero(const LinearForm& l) {
    return std::all_of(l.begin(), l.end(), [](const Rational& x) { return sgn(x) == 0; });
}

Poly Poly::constant(VarTablePtr vt, const Rational& c) {
    Poly p(std::move(vt));
    p.add_term(Monomial(p.nvars(), 0), c);
    return p;
}

Poly Poly::variable(VarTablePtr vt, std::size_t i) {
    Poly p(std::move(vt));
    if (i >= p.nvars()) throw UsageError("coordinate index out of range");
    Monomial m(p.nvars(), 0);
    m[i] = 1;
    p.add_term(m, 1);
    return p;
}

Poly Poly::linear(VarTablePtr vt, const LinearForm& l) {
    Poly p(std::move(vt));
    if (l.size() != p.nvars()) throw UsageError("linear form length mismatch");
    for (std::size_t i = 0; i < l.size(); ++i) {
        Monomial m(p.nvars(), 0);
        m[i] = 1;
        p.add_term(m, l[i]);
    }
    return p;
}

Poly Poly::monomial(VarTablePtr vt, Monomial m, const Rational& c) {
    Poly p(std::move(vt));
    if (m.size() != p.nvars()) throw UsageError("monomial length mismatch");
    p.add_term(m, c);
    return p;
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
}

int Poly::degree() const { return terms_.empty() ? -1 : total_degree(terms_.begin()->first); }

int Poly::degree_in(std::size_t var) const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m[var]);
    return d;
}

Rational Poly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

Poly Poly::homogeneous_part(int d) const {
    Poly r(vt_);
    for (const auto& [m, c] : terms_)
        if (total_degree(m) == d) r.terms_.emplace(m, c);
    return r;
}

Poly Poly::truncated_below(int d) const {
    Poly r(vt_);
    for (const auto& [m, c] : terms_)
        if (total_degree(m) < d) r.terms_.emplace(m, c);
    return r;
}

void Poly::add_term(const Monomial& m, const Rational& c) {
    if (sgn(c) == 0) return;
    if (m.size() != nvars()) throw UsageError("monomial length mismatch");
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

void require_same_table(const Poly& a, const Poly& b) {
    if (a.vars() == b.vars()) return;
    if (!a.vars() || !b.vars() || !(*a.vars() == *b.vars()))
        throw UsageError("polynomials live on different coordinate tables");
}

Poly& Poly::operator+=(const Poly& o) {
    require_same_table(*this, o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    require_same_table(*this, o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Poly& Poly::operator*=(const Rational& c) {
    if (sgn(c) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, x] : terms_) x *= c;
    return *this;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& [m, x] : r.terms_) x = -x;
    return r;
}

bool Poly::operator==(const Poly& o) const {
    if (terms_.empty() && o.terms_.empty()) return true;
    require_same_table(*this, o);
    return terms_ == o.terms_;
}

Poly operator+(const Poly& a, const Poly& b) {
    Poly r = a;
    r += b;
    return r;
}

Poly operator-(const Poly& a, const Poly& b) {
    Poly r = a;
    r -= b;
    return r;
}

Poly operator*(const Poly& a, const Poly& b) {
    require_same_table(a, b);
    Poly r(a.vars());
    const std::size_t n = a.nvars();
    Monomial m(n);
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) {
            for (std::size_t i = 0; i < n; ++i) m[i] = ma[i] + mb[i];
            r.add_term(m, ca * cb);
        }
    return r;
}

Poly operator*(const Poly& a, const Rational& c) {
    Poly r = a;
    r *= c;
    return r;
}

Poly operator*(const Rational& c, const Poly& a) { return a * c; }

Poly pow(const Poly& p, int k) {
    if (k < 0) throw UsageError("negative exponent");
    Poly r = Poly::constant(p.vars(), 1);
    Poly base = p;
    while (k > 0) {
        if (k & 1) r = r * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return r;
}

Poly arith(const Poly& p, const Poly& q, ArithKind kind) {
    switch (kind) {
        case ArithKind::add: return p + q;
        case ArithKind::sub: return p - q;
        case ArithKind::mul: return p * q;
        case ArithKind::scale:
            require_same_table(p, q);
            if (!q.is_constant()) throw UsageError("scale factor must be constant");
            return q.is_zero() ? Poly(p.vars()) : p * q.terms().begin()->second;
    }
    throw UsageError("unknown arithmetic kind");
}

Poly scale(const Poly& p, const Rational& c) { return p * c; }

Poly partial(const Poly& p, std::size_t var) {
    if (var >= p.nvars()) throw UsageError("coordinate index out of range");
    Poly r(p.vars());
    for (const auto& [m, c] : p.terms()) {
        if (m[var] == 0) continue;
        Monomial d = m;
        d[var] -= 1;
        r.add_term(d, c * m[var]);
    }
    return r;
}

Poly directional_derivative(const Poly& p, const QVector& h) {
    if (h.size() != p.nvars()) throw UsageError("direction length mismatch");
    Poly r(p.vars());
    for (std::size_t i = 0; i < h.size(); ++i)
        if (sgn(h[i]) != 0) r += partial(p, i) * h[i];
    return r;
}

LinearDivision linear_division(const Poly& p, const LinearForm& l, int k) {
    if (l.size() != p.nvars()) throw UsageError("linear form length mismatch");
    if (k < 1) throw UsageError("division order must be at least 1");
    std::size_t piv = 0;
    while (piv < l.size() && sgn(l[piv]) == 0) ++piv;
    if (piv == l.size()) throw UsageError("division by the zero linear form");

    const Rational a = l[piv];
    // x_pivot = (l - rest)/a; the Taylor coefficients in l are read off at l = 0.
    std::vector<Poly> images;
    for (std::size_t i = 0; i < p.nvars(); ++i) {
        if (i != piv) {
            images.push_back(Poly::variable(p.vars(), i));
            continue;
        }
        LinearForm on_plane(l.size());
        for (std::size_t j = 0; j < l.size(); ++j)
            if (j != piv) on_plane[j] = -l[j] / a;
        images.push_back(Poly::linear(p.vars(), on_plane));
    }

    LinearDivision out;
    out.pivot = piv;
    const int top = p.degree_in(piv);
    std::vector<Poly> coeffs;
    Poly deriv = p;
    Rational factor = 1;  // 1 / (i! a^i)
    for (int i = 0; i <= std::max(top, k - 1); ++i) {
        coeffs.push_back(deriv.is_zero() ? Poly(p.vars()) : substitute(deriv, images) * factor);
        deriv = partial(deriv, piv);
        factor /= a * (i + 1);
    }
    const Poly lp = Poly::linear(p.vars(), l);
    out.tail = Poly(p.vars());
    for (int i = static_cast<int>(coeffs.size()) - 1; i >= k; --i)
        out.tail = out.tail * lp + coeffs[static_cast<std::size_t>(i)];
    coeffs.resize(static_cast<std::size_t>(k));
    out.r = std::move(coeffs);
    return out;
}

bool divisible(const Poly& p, const LinearForm& l, int k) {
    auto d = linear_division(p, l, k);
    return std::all_of(d.r.begin(), d.r.end(), [](const Poly& r) { return r.is_zero(); });
}

Poly substitute(const Poly& p, const std::vector<Poly>& images) {
    if (images.size() != p.nvars()) throw UsageError("substitution needs one image per coordinate");
    if (p.is_zero()) return images.empty() ? Poly(p.vars()) : Poly(images.front().vars());
    VarTablePtr target = images.empty() ? p.vars() : images.front().vars();
    for (const auto& im : images)
        if (!(im.vars() == target || (im.vars() && *im.vars() == *target)))
            throw UsageError("substitution images live on different tables");

    std::vector<std::vector<Poly>> powers(images.size());
    auto power = [&](std::size_t i, int e) -> const Poly& {
        auto& cache = powers[i];
        if (cache.empty()) cache.push_back(Poly::constant(target, 1));
        while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * images[i]);
        return cache[static_cast<std::size_t>(e)];
    };
    Poly r(target);
    for (const auto& [m, c] : p.terms()) {
        Poly t = Poly::constant(target, c);
        for (std::size_t i = 0; i < m.size() && !t.is_zero(); ++i)
            if (m[i] > 0) t = t * power(i, m[i]);
        r += t;
    }
    return r;
}

Poly substitute(const Poly& p, const std::map<std::string, Poly>& assignments, VarTablePtr target) {
    if (!target) target = p.vars();
    std::vector<Poly> images;
    for (std::size_t i = 0; i < p.nvars(); ++i) {
        const std::string& nm = p.vars()->name(i);
        if (auto it = assignments.find(nm); it != assignments.end()) {
            if (!it->second.vars() || !(*it->second.vars() == *target))
                throw UsageError("image of " + nm + " is not on the target table");
            images.push_back(it->second);
            continue;
        }
        auto j = target->index_of(nm);
        if (!j) throw UsageError("coordinate " + nm + " has no image");
        images.push_back(Poly::variable(target, *j));
    }
    for (const auto& [nm, im] : assignments)
        if (!p.vars()->index_of(nm)) throw UsageError("unknown coordinate " + nm);
    return substitute(p, images);
}

namespace {

class Parser {
public:
    Parser(std::string_view s, VarTablePtr vt) : s_(s), vt_(std::move(vt)) {}

    Poly run() {
        Poly total(vt_);
        skip();
        if (pos_ == s_.size()) throw ParseError("empty polynomial", pos_);
        bool first = true;
        while (true) {
            skip();
            int sign = 1;
            if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) {
                sign = s_[pos_] == '-' ? -1 : 1;
                ++pos_;
            } else if (!first) {
                throw ParseError("expected '+' or '-'", pos_);
            }
            first = false;
            Poly t = term();
            total += sign < 0 ? -t : t;
            skip();
            if (pos_ == s_.size()) break;
        }
        return total;
    }

private:
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    Poly term() {
        Poly t = Poly::constant(vt_, 1);
        t = t * factor();
        while (true) {
            skip();
            if (pos_ < s_.size() && s_[pos_] == '*') {
                ++pos_;
                t = t * factor();
            } else {
                return t;
            }
        }
    }

    std::string digits() {
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        return std::string(s_.substr(start, pos_ - start));
    }

    Poly factor() {
        skip();
        if (pos_ == s_.size()) throw ParseError("unexpected end of input", pos_);
        char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t at = pos_;
            std::string num = digits();
            skip();
            std::string den = "1";
            if (pos_ < s_.size() && s_[pos_] == '/') {
                ++pos_;
                skip();
                den = digits();
                if (den.empty()) throw ParseError("expected denominator", pos_);
            }
            if (mpz_class(den) == 0) throw ParseError("zero denominator", at);
            Rational q{mpz_class(num), mpz_class(den)};
            q.canonicalize();
            return Poly::constant(vt_, q);
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t at = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            std::string name(s_.substr(at, pos_ - at));
            auto idx = vt_->index_of(name);
            if (!idx) throw ParseError("unknown coordinate '" + name + "'", at);
            int e = 1;
            skip();
            if (pos_ < s_.size() && s_[pos_] == '^') {
                ++pos_;
                skip();
                std::size_t eat = pos_;
                std::string d = digits();
                if (d.empty()) throw ParseError("expected exponent", eat);
                if (d.size() > 4) throw ParseError("exponent too large", eat);
                e = std::stoi(d);
            }
            Monomial m(vt_->size(), 0);
            m[*idx] = e;
            return Poly::monomial(vt_, m);
        }
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }

    std::string_view s_;
    VarTablePtr vt_;
    std::size_t pos_ = 0;
};

std::string monomial_text(const Monomial& m, const VarTable& vt) {
    std::string out;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (!out.empty()) out += '*';
        out += vt.name(i);
        if (m[i] > 1) out += '^' + std::to_string(m[i]);
    }
    return out;
}

}  // namespace

Poly parse_poly(std::string_view text, VarTablePtr vt) {
    if (!vt) throw UsageError("no coordinate table");
    return Parser(text, std::move(vt)).run();
}

std::string format_poly(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        Rational a = abs(c);
        if (first) {
            if (sgn(c) < 0) out += '-';
        } else {
            out += sgn(c) < 0 ? " - " : " + ";
        }
        first = false;
        std::string mono = monomial_text(m, *p.vars());
        if (mono.empty()) {
            out += a.get_str();
        } else if (a == 1) {
            out += mono;
        } else {
            out += a.get_str() + '*' + mono;
        }
    }
    return out;
}

std::string format_linear(const LinearForm& l, const VarTable& vt) {
    auto vtp = std::make_shared<const VarTable>(vt);
    return format_poly(Poly::linear(vtp, l));
}

}  // namespace superinv
