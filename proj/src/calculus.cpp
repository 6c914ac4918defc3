#include "kur/calculus.hpp"

#include "kur/errors.hpp"

namespace kur {

VForm exterior(const VForm& w, ExtKind kind) {
    const Geometry& g = w.geom();
    VForm r(g);
    bool doHolo = kind != ExtKind::Delbar;
    bool doAnti = kind != ExtKind::Del;
    for (auto& [key, series] : w.terms()) {
        Word base;
        for (int i : key.holo) base.push_back({DerKind::Holo, i});
        for (int j : key.anti) base.push_back({DerKind::Anti, j});
        for (int j = 1; j <= g.n; ++j) {
            if (doHolo) {
                FnSeries df = fns_derivative(series, j, DerKind::Holo);
                if (!df.isZero()) {
                    Word word = {Letter{DerKind::Holo, j}};
                    word.insert(word.end(), base.begin(), base.end());
                    r.addRaw(df, word, key.vec);
                }
            }
            if (doAnti) {
                FnSeries df = fns_derivative(series, j, DerKind::Anti);
                if (!df.isZero()) {
                    Word word = {Letter{DerKind::Anti, j}};
                    word.insert(word.end(), base.begin(), base.end());
                    r.addRaw(df, word, key.vec);
                }
            }
        }
    }
    return r;
}

namespace {

void requireTangentValued(const VForm& xi, const char* who) {
    for (auto& [key, c] : xi.terms()) {
        if (key.vec == 0) throw TypeError(std::string(who) + ": argument must be vector-valued");
        if (key.p() != 0)
            throw TypeError(std::string(who) + ": vector-valued argument must be of type (0,k)");
    }
}

void requireScalarValued(const VForm& w, const char* who) {
    if (w.vectorValued())
        throw TypeError(std::string(who) + ": form argument must be scalar-valued");
}

} // namespace

int antiDegree(const VForm& xi) {
    requireTangentValued(xi, "antiDegree");
    int k = -1;
    for (auto& [key, c] : xi.terms()) {
        if (k == -1)
            k = key.q();
        else if (k != key.q())
            throw TypeError("mixed anti-degree where a homogeneous (0,k) form is required");
    }
    return k == -1 ? 0 : k;
}

VForm contract(const VForm& xi, const VForm& w) {
    requireSameGeometry(xi, w, "contract");
    requireTangentValued(xi, "contract");
    requireScalarValued(w, "contract");
    VForm r(w.geom());
    for (auto& [kx, cx] : xi.terms()) {
        for (auto& [kw, cw] : w.terms()) {
            auto hit = keyInterior(kw, DerKind::Holo, kx.vec);
            if (!hit) continue;
            auto [sign, reduced] = *hit;
            Word word;
            for (int j : kx.anti) word.push_back({DerKind::Anti, j});
            for (int i : reduced.holo) word.push_back({DerKind::Holo, i});
            for (int j : reduced.anti) word.push_back({DerKind::Anti, j});
            FnSeries coef = fns_mul(cx, cw, w.geom().N);
            r.addRaw(sign == 1 ? coef : -coef, word, 0);
        }
    }
    return r;
}

VForm lie(const VForm& xi, const VForm& w, LiePart part) {
    requireSameGeometry(xi, w, "lie");
    requireTangentValued(xi, "lie");
    requireScalarValued(w, "lie");
    ExtKind ext = part == LiePart::Full ? ExtKind::Full
                  : part == LiePart::Holo ? ExtKind::Del
                                          : ExtKind::Delbar;
    // Split by anti-degree: the sign in <xi|>d + (-1)^k d<xi|> depends on k.
    std::map<int, VForm> slices;
    for (auto& [key, c] : xi.terms()) {
        auto [it, fresh] = slices.try_emplace(key.q(), xi.geom());
        it->second.addCanonical(key, c);
    }
    VForm r(w.geom());
    VForm dw = exterior(w, ext);
    for (auto& [k, slice] : slices) {
        VForm piece = contract(slice, dw);
        VForm second = exterior(contract(slice, w), ext);
        r = r + (k % 2 == 0 ? piece + second : piece - second);
    }
    return r;
}

VForm bracket(const VForm& a, const VForm& b) {
    requireSameGeometry(a, b, "bracket");
    requireTangentValued(a, "bracket");
    requireTangentValued(b, "bracket");
    const Geometry& g = a.geom();
    VForm r(g);
    for (auto& [ka, ca] : a.terms()) {
        for (auto& [kb, cb] : b.terms()) {
            Word word;
            for (int j : ka.anti) word.push_back({DerKind::Anti, j});
            for (int j : kb.anti) word.push_back({DerKind::Anti, j});
            FnSeries first = fns_mul(ca, fns_derivative(cb, ka.vec, DerKind::Holo), g.N);
            FnSeries second = fns_mul(cb, fns_derivative(ca, kb.vec, DerKind::Holo), g.N);
            r.addRaw(first, word, kb.vec);
            r.addRaw(-second, word, ka.vec);
        }
    }
    return r;
}

VForm exp_contract(const VForm& xi, const VForm& w) {
    requireSameGeometry(xi, w, "exp_contract");
    if (!xi.isZero()) {
        requireTangentValued(xi, "exp_contract");
        if (antiDegree(xi) != 1) throw TypeError("exp_contract: xi must have bidegree (0,1)");
    }
    requireScalarValued(w, "exp_contract");
    VForm result = w;
    VForm power = w;
    Rat factorial(1);
    for (int i = 1; i <= xi.geom().n + 1; ++i) {
        power = contract(xi, power);
        if (power.isZero()) break;
        factorial *= Rat(i);
        result = result + power.scaled(Rat(1) / factorial);
    }
    return result;
}

VForm exp_lie(const VForm& beta, const VForm& x) {
    requireSameGeometry(beta, x, "exp_lie");
    requireTangentValued(beta, "exp_lie");
    if (antiDegree(beta) != 0) throw TypeError("exp_lie: beta must be a (0,0) vector field");
    if (!beta.inMaximalIdeal())
        throw NotNilpotent("exp_lie: beta has a t-constant term");
    requireScalarValued(x, "exp_lie");
    VForm result = x;
    VForm power = x;
    Rat factorial(1);
    for (int i = 1; i <= x.geom().N + 1; ++i) {
        power = lie(beta, power, LiePart::Full);
        if (power.isZero()) break;
        factorial *= Rat(i);
        result = result + power.scaled(Rat(1) / factorial);
    }
    return result;
}

VForm spoly_eval(const SPoly& p, const Rat& s, const Geometry& g) {
    VForm out(g);
    Rat pow(1);
    for (size_t j = 0; j < p.size(); ++j) {
        out = out + p[j].scaled(pow);
        pow *= s;
    }
    return out;
}

AdExpansion exp_ad(const VForm& alpha, const VForm& target) {
    requireSameGeometry(alpha, target, "exp_ad");
    requireTangentValued(alpha, "exp_ad");
    if (antiDegree(alpha) != 0) throw TypeError("exp_ad: alpha must be a (0,0) vector field");
    if (!alpha.inMaximalIdeal())
        throw NotNilpotent("exp_ad: alpha has a t-constant term");
    AdExpansion e;
    VForm pow = target;
    e.powers.push_back(pow);
    for (int k = 1; k <= alpha.geom().N + 1; ++k) {
        pow = bracket(alpha, pow);
        if (pow.isZero()) break;
        e.powers.push_back(pow);
    }
    return e;
}

SPoly AdExpansion::expSeries() const {
    SPoly out;
    Rat factorial(1);
    for (size_t k = 0; k < powers.size(); ++k) {
        if (k > 0) factorial *= Rat((long)k);
        out.push_back(powers[k].scaled(Rat(1) / factorial));
    }
    return out;
}

SPoly AdExpansion::phiSeries() const {
    SPoly out;
    Rat factorial(1); // (k+1)!
    for (size_t k = 0; k < powers.size(); ++k) {
        factorial *= Rat((long)k + 1);
        out.push_back(powers[k].scaled(Rat(1) / factorial));
    }
    return out;
}

// ---- identity suite -------------------------------------------------------

namespace {

int degreeOf(const VForm& w) {
    int p, q;
    if (!w.bidegreeHomogeneous(p, q))
        throw TypeError("identity input must be bidegree-homogeneous");
    return p < 0 ? 0 : p + q;
}

Rat sgn(int parity) { return parity % 2 == 0 ? Rat(1) : Rat(-1); }

IdentityResult fromDiff(VForm diff, std::string detail = {}) {
    bool ok = diff.isZero();
    return IdentityResult(ok, std::move(diff), std::move(detail));
}

IdentityResult id_2_7_00(const std::vector<VForm>& in) {
    const VForm &x1 = in[0], &x2 = in[1], &w = in[2];
    if (antiDegree(x1) != 1 || antiDegree(x2) != 1)
        throw TypeError("I-2.7.00 needs two (0,1) vector-valued forms");
    VForm diff = contract(x1, contract(x2, w)) - contract(x2, contract(x1, w));
    return fromDiff(std::move(diff));
}

IdentityResult id_2_7_3(const std::vector<VForm>& in) {
    const VForm &xi = in[0], &w = in[1], &eta = in[2];
    if (antiDegree(xi) != 1) throw TypeError("I-2.7.3 needs a (0,1) vector-valued form");
    VForm lhs = lie(xi, wedge(w, eta));
    VForm rhs = wedge(lie(xi, w), eta) + wedge(w, lie(xi, eta)).scaled(sgn(degreeOf(w)));
    return fromDiff(lhs - rhs);
}

IdentityResult id_2_7_4(const std::vector<VForm>& in) {
    const VForm &xi = in[0], &xp = in[1];
    int j = antiDegree(xi);
    VForm lhs = exterior(bracket(xi, xp), ExtKind::Delbar);
    VForm rhs = bracket(exterior(xi, ExtKind::Delbar), xp) +
                bracket(xi, exterior(xp, ExtKind::Delbar)).scaled(sgn(j));
    return fromDiff(lhs - rhs);
}

IdentityResult id_2_7_5(const std::vector<VForm>& in) {
    const VForm &xi = in[0], &w = in[1];
    int k = antiDegree(xi);
    VForm lhs = lie(xi, exterior(w, ExtKind::Full));
    VForm rhs = exterior(lie(xi, w), ExtKind::Full).scaled(sgn(k));
    return fromDiff(lhs - rhs);
}

IdentityResult id_2_7_6(const std::vector<VForm>& in) {
    const VForm &xi = in[0], &w = in[1];
    int k = antiDegree(xi);
    VForm lhs = exterior(contract(xi, w), ExtKind::Delbar);
    VForm rhs = contract(exterior(xi, ExtKind::Delbar), w) -
                contract(xi, exterior(w, ExtKind::Delbar)).scaled(sgn(k));
    return fromDiff(lhs - rhs);
}

IdentityResult id_2_7_7(const std::vector<VForm>& in) {
    const VForm &xi = in[0], &xp = in[1], &w = in[2];
    int j = antiDegree(xi), k = antiDegree(xp);
    VForm lhs = contract(xi, lie(xp, w)).scaled(sgn(k)) -
                lie(xp, contract(xi, w)).scaled(sgn(j * k));
    VForm rhs = contract(bracket(xi, xp), w);
    return fromDiff(lhs - rhs);
}

IdentityResult id_2_7_8(const std::vector<VForm>& in) {
    const VForm &xi = in[0], &w = in[1];
    if (antiDegree(xi) != 1) throw TypeError("I-2.7.8 needs a (0,1) vector-valued form");
    VForm lhs = lie(xi, contract(xi, w)) - contract(xi, lie(xi, w));
    VForm rhs = contract(bracket(xi, xi), w);
    return fromDiff(lhs - rhs);
}

IdentityResult id_2_7_9(const std::vector<VForm>& in) {
    const VForm &xi = in[0], &w = in[1];
    if (antiDegree(xi) != 1) throw TypeError("I-2.7.9 needs a (0,1) vector-valued form");
    VForm holoPart = lie(xi, contract(xi, w), LiePart::Holo) -
                     contract(xi, lie(xi, w, LiePart::Holo)) - contract(bracket(xi, xi), w);
    if (!holoPart.isZero())
        return IdentityResult(false, std::move(holoPart), "(1,0) refinement failed");
    VForm antiPart = lie(xi, contract(xi, w), LiePart::Anti) -
                     contract(xi, lie(xi, w, LiePart::Anti));
    bool ok = antiPart.isZero();
    return IdentityResult(ok, std::move(antiPart), ok ? "" : "(0,1) commutator not zero");
}

IdentityResult id_48_5(const std::vector<VForm>& in) {
    const VForm &xi = in[0], &xp = in[1], &w = in[2];
    int j = antiDegree(xi), k = antiDegree(xp);
    VForm lhs = lie(xi, lie(xp, w)) - lie(xp, lie(xi, w)).scaled(sgn(j * k));
    VForm rhs = lie(bracket(xi, xp), w);
    return fromDiff(lhs - rhs);
}

// Graded commutator of delbar with L_xi against L_{delbar xi}.  Holds on
// every bidegree for odd k; for even k it is asserted on A^{0,q} only, the
// domain on which the two operators always agree.
IdentityResult id_kodd(const std::vector<VForm>& in) {
    const VForm &xi = in[0], &w = in[1];
    int k = antiDegree(xi);
    VForm lhs = exterior(lie(xi, w), ExtKind::Delbar) -
                lie(xi, exterior(w, ExtKind::Delbar)).scaled(sgn(k));
    VForm rhs = lie(exterior(xi, ExtKind::Delbar), w);
    if (k % 2 == 0) {
        int p, q;
        w.bidegreeHomogeneous(p, q);
        if (p > 0)
            return IdentityResult(true, VForm::zero(w.geom()),
                                  "even degree: asserted on A^{0,q} only; input skipped");
    }
    return fromDiff(lhs - rhs);
}

} // namespace

const std::vector<std::string>& identityNames() {
    static const std::vector<std::string> names = {
        "I-2.7.00", "I-2.7.3", "I-2.7.4", "I-2.7.5", "I-2.7.6",
        "I-2.7.7",  "I-2.7.8", "I-2.7.9", "I-48.5",  "I-kodd",
    };
    return names;
}

const std::map<std::string, IdentityFn>& identityTable() {
    static const std::map<std::string, IdentityFn> table = {
        {"I-2.7.00", id_2_7_00}, {"I-2.7.3", id_2_7_3}, {"I-2.7.4", id_2_7_4},
        {"I-2.7.5", id_2_7_5},   {"I-2.7.6", id_2_7_6}, {"I-2.7.7", id_2_7_7},
        {"I-2.7.8", id_2_7_8},   {"I-2.7.9", id_2_7_9}, {"I-48.5", id_48_5},
        {"I-kodd", id_kodd},
    };
    return table;
}

int identityArity(const std::string& name) {
    if (name == "I-2.7.00" || name == "I-2.7.3" || name == "I-2.7.7" || name == "I-48.5")
        return 3;
    if (identityTable().count(name)) return 2;
    throw UnknownIdentity(name);
}

IdentityResult check_identity(const std::string& name, const std::vector<VForm>& inputs) {
    auto it = identityTable().find(name);
    if (it == identityTable().end()) throw UnknownIdentity(name);
    if ((int)inputs.size() != identityArity(name))
        throw TypeError(name + " expects " + std::to_string(identityArity(name)) + " inputs");
    return it->second(inputs);
}

} // namespace kur
