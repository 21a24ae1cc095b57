#pragma once

#include "superinv/exactalg.hpp"

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace superinv {

enum class Block { epsilon, delta };

class VarTable {
public:
    VarTable(std::vector<std::string> names, std::vector<Block> blocks);

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_[i]; }
    Block block(std::size_t i) const { return blocks_[i]; }
    const std::vector<std::string>& names() const { return names_; }
    std::optional<std::size_t> index_of(std::string_view name) const;

    bool operator==(const VarTable& o) const { return names_ == o.names_ && blocks_ == o.blocks_; }

private:
    std::vector<std::string> names_;
    std::vector<Block> blocks_;
};

using VarTablePtr = std::shared_ptr<const VarTable>;

VarTablePtr make_vartable(const std::vector<std::pair<std::string, Block>>& coords);

using Monomial = std::vector<int>;

int total_degree(const Monomial& m);

// Graded-lex, larger first: higher degree, then larger exponent on the earlier coordinate.
struct GrlexDesc {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

// All monomials of degree d in n variables, in GrlexDesc order.
std::vector<Monomial> monomials_of_degree(std::size_t n, int d);

using LinearForm = QVector;

Rational evaluate(const LinearForm& l, const QVector& h);
bool is_zero(const LinearForm& l);

class Poly {
public:
    using Terms = std::map<Monomial, Rational, GrlexDesc>;

    Poly() = default;
    explicit Poly(VarTablePtr vt) : vt_(std::move(vt)) {}

    static Poly constant(VarTablePtr vt, const Rational& c);
    static Poly variable(VarTablePtr vt, std::size_t i);
    static Poly linear(VarTablePtr vt, const LinearForm& l);
    static Poly monomial(VarTablePtr vt, Monomial m, const Rational& c = 1);

    const VarTablePtr& vars() const { return vt_; }
    const Terms& terms() const { return terms_; }
    std::size_t nvars() const { return vt_ ? vt_->size() : 0; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // -1 for the zero polynomial.
    int degree() const;
    int degree_in(std::size_t var) const;
    Rational coeff(const Monomial& m) const;
    Poly homogeneous_part(int d) const;
    // Every term of degree >= d is dropped.
    Poly truncated_below(int d) const;

    void add_term(const Monomial& m, const Rational& c);

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Rational& c);
    Poly operator-() const;

    bool operator==(const Poly& o) const;

private:
    VarTablePtr vt_;
    Terms terms_;
};

void require_same_table(const Poly& a, const Poly& b);

Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator*(const Poly& a, const Poly& b);
Poly operator*(const Poly& a, const Rational& c);
Poly operator*(const Rational& c, const Poly& a);
Poly pow(const Poly& p, int k);

enum class ArithKind { add, sub, mul, scale };
// For scale, q must be a constant polynomial.
Poly arith(const Poly& p, const Poly& q, ArithKind kind);
Poly scale(const Poly& p, const Rational& c);

Poly partial(const Poly& p, std::size_t var);
Poly directional_derivative(const Poly& p, const QVector& h);

struct LinearDivision {
    std::size_t pivot = 0;
    std::vector<Poly> r;  // r_0 .. r_{k-1}, free of the pivot coordinate
    Poly tail;
};

// p = sum_{i<k} r_i l^i + tail l^k. Pivot: lowest-index coordinate with nonzero coefficient.
LinearDivision linear_division(const Poly& p, const LinearForm& l, int k);
bool divisible(const Poly& p, const LinearForm& l, int k);

// Simultaneous substitution. images[i] replaces coordinate i and lives on the target table.
Poly substitute(const Poly& p, const std::vector<Poly>& images);
// Named form; unassigned coordinates map to the same-named coordinate of target.
Poly substitute(const Poly& p, const std::map<std::string, Poly>& assignments,
                VarTablePtr target = nullptr);

Poly parse_poly(std::string_view text, VarTablePtr vt);
std::string format_poly(const Poly& p);
std::string format_linear(const LinearForm& l, const VarTable& vt);

}  // namespace superinv
