#pragma once

#include "superinv/exactalg.hpp"
#include "superinv/poly.hpp"
#include "superinv/superalg.hpp"

#include <utility>
#include <vector>

namespace superinv {

// Power series on h* kept up to total degree `cutoff`.
class TruncSeries {
public:
    TruncSeries(VarTablePtr vt, int cutoff);
    TruncSeries(const Poly& body, int cutoff);

    const VarTablePtr& vars() const { return body_.vars(); }
    int cutoff() const { return cutoff_; }
    const Poly& body() const { return body_; }
    Poly component(int d) const { return body_.homogeneous_part(d); }
    // Lowest nonzero homogeneous component, or zero.
    Poly lowest() const;

    TruncSeries operator+(const TruncSeries& o) const;
    TruncSeries operator-(const TruncSeries& o) const;
    TruncSeries operator*(const TruncSeries& o) const;
    TruncSeries operator*(const Rational& c) const;
    bool operator==(const TruncSeries& o) const { return cutoff_ == o.cutoff_ && body_ == o.body_; }

private:
    Poly body_;
    int cutoff_;
};

TruncSeries exp_weight(const LinearForm& lambda, VarTablePtr vt, int N);

// Single-variable table used for sl(2) characters and the solver checks.
VarTablePtr phi_table();

// sum c_i (n_i + 1)^{2j-1} = 0 for j <= k, sum c_i (n_i + 1)^{2k+1} = (2k+1)!.
QVector sinh_solver(int k, const std::vector<long>& n);
// sum c_i n_i^{2j} = 0 for j < k, sum c_i n_i^{2k} = (2k)!.
QVector cosh_solver(int k, const std::vector<long>& n);

// sum c_i sinh(a_i x) and sum c_i cosh(a_i x) as truncated series in phi.
TruncSeries sinh_combination(const QVector& c, const std::vector<long>& a, int N);
TruncSeries cosh_combination(const QVector& c, const std::vector<long>& a, int N);

TruncSeries schur_char_sl2(int n, int N);
// Character of the gl(r) module with highest weight `lambda` (a partition),
// in the first r coordinates of vt.
TruncSeries schur_char_gl(const std::vector<int>& lambda, VarTablePtr vt, int N);

struct CharacterCertificate {
    std::vector<std::pair<std::vector<int>, Rational>> coefficients;  // partition -> c
    TruncSeries series;
    Poly lowest;
};

// vect(0|n), n <= 3: finds c with prod(1 - e^{eps_i}) sum c_lambda ch L^lambda = Q f + higher terms.
CharacterCertificate character_certificate(const RootDatum& d, const Poly& f, int search_bound);

}  // namespace superinv
