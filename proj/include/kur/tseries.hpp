#pragma once

#include <map>
#include <string>
#include <vector>

#include "kur/rational.hpp"

namespace kur {

/// Exponent vector of a monomial in the deformation parameters t_1..t_m.
using TMono = std::vector<int>;

int totalDegree(const TMono& m);
TMono tmonoOne(int m);
TMono tmonoVar(int m, int j); // t_j, 1-based
TMono tmonoMul(const TMono& a, const TMono& b);
bool tmonoDivides(const TMono& d, const TMono& m);
std::string tmonoStr(const TMono& m); // "1", "t1", "t1^2*t2"

/// Graded-lexicographic order: total degree first, then lex.  This is the
/// canonical term order for every t-graded map in the engine.
struct GradedLex {
    bool operator()(const TMono& a, const TMono& b) const;
};

/// Truncated formal power series in t_1..t_m over Q(i), cut at total degree
/// maxOrder.  Antiholomorphic parameters are never represented: the algebra
/// works modulo {tbar} throughout.
class TSeries {
public:
    TSeries(int params, int maxOrder) : m_(params), order_(maxOrder) {}
    static TSeries constant(int params, int maxOrder, const Rat& c);
    static TSeries monomial(int params, int maxOrder, const TMono& mono, const Rat& c = Rat(1));

    int params() const { return m_; }
    int maxOrder() const { return order_; }
    bool isZero() const { return terms_.empty(); }
    const std::map<TMono, Rat, GradedLex>& terms() const { return terms_; }

    Rat coeff(const TMono& mono) const;
    void add(const TMono& mono, const Rat& c); // truncates, prunes zeros

    TSeries operator-() const;
    friend TSeries operator+(const TSeries& a, const TSeries& b);
    friend TSeries operator-(const TSeries& a, const TSeries& b);
    friend bool operator==(const TSeries& a, const TSeries& b);
    friend bool operator!=(const TSeries& a, const TSeries& b) { return !(a == b); }

    std::string str() const;

private:
    int m_;
    int order_;
    std::map<TMono, Rat, GradedLex> terms_;
};

/// Exact truncated product.  Commutative and associative within the
/// truncation order; throws ParamMismatch if parameter counts or truncation
/// orders differ.
TSeries series_mul(const TSeries& a, const TSeries& b);

/// Monomial ideal in C[[t_1..t_m]], kept as its minimal generating set.
class MonomialIdeal {
public:
    MonomialIdeal(int params, std::vector<TMono> gens);

    static MonomialIdeal maximal(int params);               // <t_1,...,t_m>
    static MonomialIdeal power(int params, int j, int e);   // <t_j^e>
    static MonomialIdeal zero(int params) { return MonomialIdeal(params, {}); }

    int params() const { return m_; }
    const std::vector<TMono>& generators() const { return gens_; }
    bool contains(const TMono& mono) const;
    bool isSubsetOfMaximal() const; // no unit generator

    friend MonomialIdeal operator*(const MonomialIdeal& a, const MonomialIdeal& b);

    std::string str() const; // "<t1^2, t1*t2>"

private:
    int m_;
    std::vector<TMono> gens_;
};

/// Drops every term whose t-monomial lies in the ideal; idempotent.
TSeries ideal_reduce(const TSeries& a, const MonomialIdeal& A);

/// Monomials spanning A / mA, i.e. the minimal generators of A.  Throws
/// NotInMaximalIdeal if A contains the unit monomial.
std::vector<TMono> ideal_quotient_basis(const MonomialIdeal& A);

} // namespace kur
