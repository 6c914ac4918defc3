#include "kur/tseries.hpp"

#include <algorithm>
#include <numeric>

#include "kur/errors.hpp"

namespace kur {

int totalDegree(const TMono& m) { return std::accumulate(m.begin(), m.end(), 0); }

TMono tmonoOne(int m) { return TMono(m, 0); }

TMono tmonoVar(int m, int j) {
    TMono t(m, 0);
    t.at(j - 1) = 1;
    return t;
}

TMono tmonoMul(const TMono& a, const TMono& b) {
    TMono r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

bool tmonoDivides(const TMono& d, const TMono& m) {
    for (size_t i = 0; i < d.size(); ++i)
        if (d[i] > m[i]) return false;
    return true;
}

std::string tmonoStr(const TMono& m) {
    std::string out;
    for (size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += "t" + std::to_string(i + 1);
        if (m[i] > 1) out += "^" + std::to_string(m[i]);
    }
    return out.empty() ? "1" : out;
}

bool GradedLex::operator()(const TMono& a, const TMono& b) const {
    int da = totalDegree(a), db = totalDegree(b);
    if (da != db) return da < db;
    return a < b;
}

TSeries TSeries::constant(int params, int maxOrder, const Rat& c) {
    TSeries s(params, maxOrder);
    s.add(tmonoOne(params), c);
    return s;
}

TSeries TSeries::monomial(int params, int maxOrder, const TMono& mono, const Rat& c) {
    TSeries s(params, maxOrder);
    s.add(mono, c);
    return s;
}

Rat TSeries::coeff(const TMono& mono) const {
    auto it = terms_.find(mono);
    return it == terms_.end() ? Rat(0) : it->second;
}

void TSeries::add(const TMono& mono, const Rat& c) {
    if ((int)mono.size() != m_)
        throw ParamMismatch("t-monomial has " + std::to_string(mono.size()) +
                            " parameters, series has " + std::to_string(m_));
    if (c.isZero() || totalDegree(mono) > order_) return;
    auto [it, fresh] = terms_.emplace(mono, c);
    if (!fresh) {
        it->second += c;
        if (it->second.isZero()) terms_.erase(it);
    }
}

TSeries TSeries::operator-() const {
    TSeries r(m_, order_);
    for (auto& [mono, c] : terms_) r.terms_.emplace(mono, -c);
    return r;
}

TSeries operator+(const TSeries& a, const TSeries& b) {
    if (a.m_ != b.m_ || a.order_ != b.order_)
        throw ParamMismatch("series addition with mismatched m or N");
    TSeries r = a;
    for (auto& [mono, c] : b.terms_) r.add(mono, c);
    return r;
}

TSeries operator-(const TSeries& a, const TSeries& b) { return a + (-b); }

bool operator==(const TSeries& a, const TSeries& b) {
    return a.m_ == b.m_ && a.order_ == b.order_ && a.terms_ == b.terms_;
}

TSeries series_mul(const TSeries& a, const TSeries& b) {
    if (a.params() != b.params() || a.maxOrder() != b.maxOrder())
        throw ParamMismatch("series product with mismatched m or N");
    TSeries r(a.params(), a.maxOrder());
    for (auto& [ma, ca] : a.terms())
        for (auto& [mb, cb] : b.terms()) {
            TMono m = tmonoMul(ma, mb);
            if (totalDegree(m) > a.maxOrder()) continue;
            r.add(m, ca * cb);
        }
    return r;
}

std::string TSeries::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto& [mono, c] : terms_) {
        if (!out.empty()) out += " + ";
        bool unit = totalDegree(mono) == 0;
        if (unit) {
            out += c.str();
        } else if (c == Rat(1)) {
            out += tmonoStr(mono);
        } else if (c == Rat(-1)) {
            out += "-" + tmonoStr(mono);
        } else {
            out += c.str() + "*" + tmonoStr(mono);
        }
    }
    return out;
}

MonomialIdeal::MonomialIdeal(int params, std::vector<TMono> gens) : m_(params) {
    for (auto& g : gens)
        if ((int)g.size() != params)
            throw ParamMismatch("ideal generator with wrong parameter count");
    // Minimalize: drop any generator divisible by another.
    std::sort(gens.begin(), gens.end(), GradedLex{});
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    for (auto& g : gens) {
        bool redundant = false;
        for (auto& h : gens_)
            if (tmonoDivides(h, g)) {
                redundant = true;
                break;
            }
        if (!redundant) gens_.push_back(g);
    }
}

MonomialIdeal MonomialIdeal::maximal(int params) {
    std::vector<TMono> gens;
    for (int j = 1; j <= params; ++j) gens.push_back(tmonoVar(params, j));
    return MonomialIdeal(params, std::move(gens));
}

MonomialIdeal MonomialIdeal::power(int params, int j, int e) {
    TMono t(params, 0);
    t.at(j - 1) = e;
    return MonomialIdeal(params, {t});
}

bool MonomialIdeal::contains(const TMono& mono) const {
    for (auto& g : gens_)
        if (tmonoDivides(g, mono)) return true;
    return false;
}

bool MonomialIdeal::isSubsetOfMaximal() const {
    for (auto& g : gens_)
        if (totalDegree(g) == 0) return false;
    return true;
}

MonomialIdeal operator*(const MonomialIdeal& a, const MonomialIdeal& b) {
    if (a.m_ != b.m_) throw ParamMismatch("ideal product with mismatched m");
    std::vector<TMono> gens;
    for (auto& ga : a.gens_)
        for (auto& gb : b.gens_) gens.push_back(tmonoMul(ga, gb));
    return MonomialIdeal(a.m_, std::move(gens));
}

std::string MonomialIdeal::str() const {
    std::string out = "<";
    for (size_t i = 0; i < gens_.size(); ++i) {
        if (i) out += ", ";
        out += tmonoStr(gens_[i]);
    }
    return out + ">";
}

TSeries ideal_reduce(const TSeries& a, const MonomialIdeal& A) {
    if (a.params() != A.params()) throw ParamMismatch("ideal_reduce with mismatched m");
    TSeries r(a.params(), a.maxOrder());
    for (auto& [mono, c] : a.terms())
        if (!A.contains(mono)) r.add(mono, c);
    return r;
}

std::vector<TMono> ideal_quotient_basis(const MonomialIdeal& A) {
    if (!A.isSubsetOfMaximal())
        throw NotInMaximalIdeal("quotient basis requires A contained in the maximal ideal");
    return A.generators();
}

} // namespace kur
