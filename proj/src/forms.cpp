#include "kur/forms.hpp"

#include <algorithm>

#include "kur/errors.hpp"

namespace kur {

bool FormKeyLess::operator()(const FormKey& a, const FormKey& b) const {
    if (a.p() != b.p()) return a.p() < b.p();
    if (a.q() != b.q()) return a.q() < b.q();
    if (a.holo != b.holo) return a.holo < b.holo;
    if (a.anti != b.anti) return a.anti < b.anti;
    return a.vec < b.vec;
}

std::optional<std::pair<int, FormKey>> canonicalWord(const Word& w, int vec) {
    // Insertion sort over letters (all odd), counting transpositions.
    // Canonical order: Holo letters first by index, then Anti by index.
    auto rank = [](const Letter& l) {
        return (l.kind == DerKind::Holo ? 0 : 1) * 1000 + l.idx;
    };
    std::vector<Letter> s = w;
    int sign = 1;
    for (size_t i = 1; i < s.size(); ++i) {
        Letter key = s[i];
        size_t j = i;
        while (j > 0 && rank(s[j - 1]) > rank(key)) {
            s[j] = s[j - 1];
            --j;
            sign = -sign;
        }
        s[j] = key;
    }
    FormKey k;
    k.vec = vec;
    for (size_t i = 0; i < s.size(); ++i) {
        if (i > 0 && s[i] == s[i - 1]) return std::nullopt; // repeated letter
        (s[i].kind == DerKind::Holo ? k.holo : k.anti).push_back(s[i].idx);
    }
    return std::make_pair(sign, k);
}

std::optional<std::pair<int, FormKey>> keyInterior(const FormKey& k, DerKind kind, int idx) {
    const std::vector<int>& list = (kind == DerKind::Holo) ? k.holo : k.anti;
    auto it = std::find(list.begin(), list.end(), idx);
    if (it == list.end()) return std::nullopt;
    int pos = (int)(it - list.begin());
    if (kind == DerKind::Anti) pos += k.p(); // anti letters sit after all dv's
    FormKey r = k;
    auto& rlist = (kind == DerKind::Holo) ? r.holo : r.anti;
    rlist.erase(rlist.begin() + (it - list.begin()));
    return std::make_pair(pos % 2 == 0 ? 1 : -1, r);
}

FnSeries FnSeries::make(const TMono& mono, const Fn& f) {
    FnSeries s;
    s.add(mono, f);
    return s;
}

void FnSeries::add(const TMono& mono, const Fn& f) {
    if (f.isZero()) return;
    auto [it, fresh] = parts_.emplace(mono, f);
    if (!fresh) {
        it->second = it->second + f;
        if (it->second.isZero()) parts_.erase(it);
    }
}

FnSeries FnSeries::operator-() const {
    FnSeries r;
    for (auto& [m, f] : parts_) r.parts_.emplace(m, -f);
    return r;
}

FnSeries operator+(const FnSeries& a, const FnSeries& b) {
    FnSeries r = a;
    for (auto& [m, f] : b.parts_) r.add(m, f);
    return r;
}

bool operator==(const FnSeries& a, const FnSeries& b) { return a.parts_ == b.parts_; }

bool FnSeries::inMaximalIdeal() const {
    for (auto& [m, f] : parts_)
        if (totalDegree(m) == 0) return false;
    return true;
}

bool FnSeries::tHomogeneous(int degree) const {
    for (auto& [m, f] : parts_)
        if (totalDegree(m) != degree) return false;
    return true;
}

FnSeries fns_scale(const FnSeries& a, const Rat& c) {
    FnSeries r;
    if (c.isZero()) return r;
    for (auto& [m, f] : a.parts()) r.add(m, f.scaled(c));
    return r;
}

FnSeries fns_mul(const FnSeries& a, const FnSeries& b, int maxOrder) {
    FnSeries r;
    for (auto& [ma, fa] : a.parts())
        for (auto& [mb, fb] : b.parts()) {
            TMono m = tmonoMul(ma, mb);
            if (totalDegree(m) > maxOrder) continue;
            r.add(m, fn_mul(fa, fb));
        }
    return r;
}

FnSeries fns_mul_mono(const FnSeries& a, const TMono& mono, int maxOrder) {
    FnSeries r;
    for (auto& [m, f] : a.parts()) {
        TMono p = tmonoMul(m, mono);
        if (totalDegree(p) > maxOrder) continue;
        r.add(p, f);
    }
    return r;
}

FnSeries fns_derivative(const FnSeries& a, int j, DerKind kind) {
    FnSeries r;
    for (auto& [m, f] : a.parts()) r.add(m, derivative(f, j, kind));
    return r;
}

FnSeries fns_tderivative(const FnSeries& a, int k) {
    FnSeries r;
    for (auto& [m, f] : a.parts()) {
        if (m.at(k - 1) == 0) continue;
        TMono d = m;
        d[k - 1] -= 1;
        r.add(d, f.scaled(Rat(m[k - 1])));
    }
    return r;
}

FnSeries fns_reduce(const FnSeries& a, const MonomialIdeal& A) {
    FnSeries r;
    for (auto& [m, f] : a.parts())
        if (!A.contains(m)) r.add(m, f);
    return r;
}

FnSeries fns_project_sub(const FnSeries& a, const std::set<int>& tangential) {
    FnSeries r;
    for (auto& [m, f] : a.parts()) r.add(m, project_to_subtorus(f, tangential));
    return r;
}

FnSeries fns_tpart(const FnSeries& a, int degree) {
    FnSeries r;
    for (auto& [m, f] : a.parts())
        if (totalDegree(m) == degree) r.add(m, f);
    return r;
}

VForm VForm::scalar(const Geometry& g, const Rat& c) {
    return fromFn(g, Fn::constant(g, c));
}

VForm VForm::fromFn(const Geometry& g, const Fn& f) {
    return fromFnSeries(g, FnSeries::make(tmonoOne(g.m), f));
}

VForm VForm::fromFnSeries(const Geometry& g, const FnSeries& s) {
    VForm v(g);
    v.addCanonical(FormKey{}, s);
    return v;
}

VForm VForm::letter(const Geometry& g, DerKind kind, int idx) {
    if (idx < 1 || idx > g.n) throw TypeError("cotangent index out of range");
    VForm v(g);
    v.addRaw(FnSeries::make(tmonoOne(g.m), Fn::constant(g, Rat(1))), {Letter{kind, idx}}, 0);
    return v;
}

VForm VForm::canonicalize(const Geometry& g, const std::vector<RawTerm>& raw) {
    VForm v(g);
    for (auto& t : raw) v.addRaw(t.coef, t.word, t.vec);
    return v;
}

void VForm::addRaw(const FnSeries& coef, const Word& word, int vec) {
    if (vec < 0 || vec > geom_.n) throw TypeError("frame index out of range");
    for (auto& l : word)
        if (l.idx < 1 || l.idx > geom_.n) throw TypeError("cotangent index out of range");
    auto sorted = canonicalWord(word, vec);
    if (!sorted) return;
    addCanonical(sorted->second, sorted->first == 1 ? coef : -coef);
}

void VForm::addCanonical(const FormKey& key, const FnSeries& coef) {
    if (coef.isZero()) return;
    if (!terms_.empty() && (key.vec != 0) != vectorValued())
        throw DegreeMismatch("cannot mix scalar-valued and vector-valued terms");
    auto [it, fresh] = terms_.emplace(key, coef);
    if (!fresh) {
        it->second = it->second + coef;
        if (it->second.isZero()) terms_.erase(it);
    }
}

bool VForm::vectorValued() const {
    for (auto& [k, c] : terms_)
        if (k.vec != 0) return true;
    return false;
}

bool VForm::bidegreeHomogeneous(int& p, int& q) const {
    p = q = -1;
    for (auto& [k, c] : terms_) {
        if (p == -1) {
            p = k.p();
            q = k.q();
        } else if (p != k.p() || q != k.q()) {
            return false;
        }
    }
    return true;
}

bool VForm::inMaximalIdeal() const {
    for (auto& [k, c] : terms_)
        if (!c.inMaximalIdeal()) return false;
    return true;
}

VForm VForm::operator-() const { return scaled(Rat(-1)); }

VForm VForm::scaled(const Rat& c) const {
    VForm r(geom_);
    if (c.isZero()) return r;
    for (auto& [k, s] : terms_) r.terms_.emplace(k, fns_scale(s, c));
    return r;
}

VForm operator+(const VForm& a, const VForm& b) {
    requireSameGeometry(a, b, "sum");
    VForm r = a;
    for (auto& [k, c] : b.terms_) r.addCanonical(k, c);
    return r;
}

VForm operator-(const VForm& a, const VForm& b) { return a + (-b); }

bool operator==(const VForm& a, const VForm& b) {
    return a.geom_ == b.geom_ && a.terms_ == b.terms_;
}

VForm VForm::reduce(const MonomialIdeal& A) const {
    VForm r(geom_);
    for (auto& [k, c] : terms_) r.addCanonical(k, fns_reduce(c, A));
    return r;
}

VForm VForm::tDegreePart(int degree) const {
    VForm r(geom_);
    for (auto& [k, c] : terms_) r.addCanonical(k, fns_tpart(c, degree));
    return r;
}

VForm VForm::tMonoComponent(const TMono& mono) const {
    VForm r(geom_);
    for (auto& [k, c] : terms_) {
        auto it = c.parts().find(mono);
        if (it != c.parts().end())
            r.addCanonical(k, FnSeries::make(tmonoOne(geom_.m), it->second));
    }
    return r;
}

VForm VForm::tDerivative(int k) const {
    if (k < 1 || k > geom_.m) throw ParamMismatch("t-derivative index out of range");
    VForm r(geom_);
    for (auto& [key, c] : terms_) r.addCanonical(key, fns_tderivative(c, k));
    return r;
}

VForm VForm::mulMono(const TMono& mono) const {
    VForm r(geom_);
    for (auto& [key, c] : terms_) r.addCanonical(key, fns_mul_mono(c, mono, geom_.N));
    return r;
}

int VForm::tTopDegree() const {
    int top = -1;
    for (auto& [key, c] : terms_)
        for (auto& [m, f] : c.parts()) top = std::max(top, totalDegree(m));
    return top;
}

VForm wedge(const VForm& a, const VForm& b) {
    requireSameGeometry(a, b, "wedge");
    if (a.vectorValued() && b.vectorValued())
        throw DegreeMismatch("wedge of two vector-valued forms");
    VForm r(a.geom());
    for (auto& [ka, ca] : a.terms())
        for (auto& [kb, cb] : b.terms()) {
            Word w;
            for (int i : ka.holo) w.push_back({DerKind::Holo, i});
            for (int j : ka.anti) w.push_back({DerKind::Anti, j});
            for (int i : kb.holo) w.push_back({DerKind::Holo, i});
            for (int j : kb.anti) w.push_back({DerKind::Anti, j});
            r.addRaw(fns_mul(ca, cb, a.geom().N), w, ka.vec != 0 ? ka.vec : kb.vec);
        }
    return r;
}

VForm type_project(const VForm& a, int p, int q) {
    VForm r(a.geom());
    for (auto& [k, c] : a.terms())
        if (k.p() == p && k.q() == q) r.addCanonical(k, c);
    return r;
}

VForm restrict_subtorus(const VForm& a, const std::set<int>& tangential) {
    for (int j : tangential)
        if (j < 1 || j > a.geom().n) throw TypeError("tangential index out of range");
    VForm r(a.geom());
    for (auto& [k, c] : a.terms()) {
        bool dies = false;
        for (int i : k.holo)
            if (!tangential.count(i)) dies = true;
        for (int j : k.anti)
            if (!tangential.count(j)) dies = true;
        if (dies) continue;
        r.addCanonical(k, fns_project_sub(c, tangential));
    }
    return r;
}

VForm normal_value_part(const VForm& a, const std::set<int>& tangential) {
    VForm r(a.geom());
    for (auto& [k, c] : a.terms())
        if (k.vec != 0 && !tangential.count(k.vec)) r.addCanonical(k, c);
    return r;
}

VForm tangential_value_part(const VForm& a, const std::set<int>& tangential) {
    VForm r(a.geom());
    for (auto& [k, c] : a.terms())
        if (k.vec == 0 || tangential.count(k.vec)) r.addCanonical(k, c);
    return r;
}

void requireSameGeometry(const VForm& a, const VForm& b, const char* op) {
    if (a.geom() == b.geom()) return;
    if (a.geom().ring != b.geom().ring || a.geom().n != b.geom().n)
        throw RingMismatch(std::string(op) + ": " + a.geom().str() + " vs " + b.geom().str());
    throw ParamMismatch(std::string(op) + ": " + a.geom().str() + " vs " + b.geom().str());
}

namespace {

void renderFlat(std::string& out, const Rat& c, const std::string& tmono,
                const std::string& funmono, const FormKey& key) {
    std::string letters;
    for (int i : key.holo) {
        if (!letters.empty()) letters += "^";
        letters += "dv" + std::to_string(i);
    }
    for (int j : key.anti) {
        if (!letters.empty()) letters += "^";
        letters += "dvb" + std::to_string(j);
    }

    std::vector<std::string> pieces;
    if (tmono != "1") pieces.push_back(tmono);
    if (funmono != "1") pieces.push_back(funmono);
    if (!letters.empty()) pieces.push_back(letters);

    std::string body;
    for (auto& p : pieces) {
        if (!body.empty()) body += "*";
        body += p;
    }

    std::string term;
    if (body.empty()) {
        term = c.str();
    } else if (c == Rat(1)) {
        term = body;
    } else if (c == Rat(-1)) {
        term = "-" + body;
    } else {
        term = c.str() + "*" + body;
    }
    if (key.vec != 0) term += "@d" + std::to_string(key.vec);

    if (!out.empty()) out += " + ";
    out += term;
}

} // namespace

std::string VForm::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto& [key, series] : terms_) {
        for (auto& [mono, f] : series.parts()) {
            std::string tm = tmonoStr(mono);
            if (geom_.ring == RingKind::Chart) {
                for (auto& [cm, c] : f.chartTerms()) {
                    Fn monoFn = Fn::chartMonomial(geom_, cm, Rat(1));
                    renderFlat(out, c, tm, monoFn.str(), key);
                }
            } else {
                for (auto& [fr, c] : f.torusTerms()) {
                    Fn chFn = Fn::character(geom_, fr, Rat(1));
                    renderFlat(out, c, tm, chFn.str(), key);
                }
            }
        }
    }
    return out;
}

} // namespace kur
