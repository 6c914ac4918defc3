#include "kur/submanifold.hpp"

#include "kur/errors.hpp"

namespace kur {

namespace {

void requireTorusSub(const VForm& xi, const Subtorus& Y, const char* who) {
    if (xi.geom().ring != RingKind::Torus)
        throw WrongGeometry(std::string(who) + ": split subtori live in the torus model");
    for (int j : Y.tangential)
        if (j < 1 || j > xi.geom().n)
            throw TypeError(std::string(who) + ": tangential index out of range");
}

} // namespace

SplitKuranishi split_tangent_normal(const VForm& xi, const Subtorus& Y, const MonomialIdeal& A) {
    requireTorusSub(xi, Y, "split_tangent_normal");
    VForm restricted = restrict_subtorus(xi, Y.tangential);
    VForm tangential = tangential_value_part(restricted, Y.tangential);
    VForm normal = normal_value_part(restricted, Y.tangential);
    if (!tangential.inMaximalIdeal())
        throw NotSubmanifoldDeformation("tangential part has a t-constant term",
                                        tangential.str());
    VForm outside = normal.reduce(A);
    if (!outside.isZero())
        throw NotSubmanifoldDeformation(
            "normal part of the restriction does not lie in " + A.str(), outside.str());
    return SplitKuranishi{tangential, normal, A};
}

ObstructionReport submanifold_obstruction(const VForm& xi, const Subtorus& Y,
                                          const MonomialIdeal& A) {
    const Geometry& g = xi.geom();
    SplitKuranishi split = split_tangent_normal(xi, Y, A);
    MonomialIdeal mA = MonomialIdeal::maximal(g.m) * A;
    if (!is_integrable_mod(xi, mA))
        throw NotIntegrableMod("ambient datum is not integrable modulo " + mA.str());
    VForm closedness =
        normal_value_part(exterior(split.normalPart, ExtKind::Delbar), Y.tangential).reduce(mA);
    if (!closedness.isZero())
        throw CocycleViolation("normal restriction is not closed mod mA: " + closedness.str());
    VForm reduced = split.normalPart.reduce(mA);
    ObstructionReport report;
    report.solvedTo = -1;
    for (const TMono& mono : ideal_quotient_basis(A)) {
        VForm part = harmonic_projection(reduced.tMonoComponent(mono));
        report.perOrder.push_back({mono, part, part.isZero()});
    }
    return report;
}

std::vector<VForm> kzero_basis(const Geometry& g, const Subtorus& Y, int r) {
    std::vector<VForm> out;
    int n = g.n;
    // Enumerate index subsets I (holo) and J (anti) with |I|+|J| = r.
    for (int maskI = 0; maskI < (1 << n); ++maskI) {
        for (int maskJ = 0; maskJ < (1 << n); ++maskJ) {
            if (__builtin_popcount(maskI) + __builtin_popcount(maskJ) != r) continue;
            bool touchesNormal = false;
            Word word;
            for (int j = 1; j <= n; ++j)
                if (maskI & (1 << (j - 1))) {
                    word.push_back({DerKind::Holo, j});
                    if (!Y.tangential.count(j)) touchesNormal = true;
                }
            for (int j = 1; j <= n; ++j)
                if (maskJ & (1 << (j - 1))) {
                    word.push_back({DerKind::Anti, j});
                    if (!Y.tangential.count(j)) touchesNormal = true;
                }
            if (!touchesNormal) continue;
            VForm f(g);
            f.addRaw(FnSeries::make(tmonoOne(g.m), Fn::constant(g, Rat(1))), word, 0);
            out.push_back(std::move(f));
        }
    }
    return out;
}

Theorem43Result theorem43_certificate(const VForm& xi, const Subtorus& Y, const VForm& w0,
                                      const MonomialIdeal& A) {
    const Geometry& g = xi.geom();
    requireTorusSub(xi, Y, "theorem43_certificate");
    if (w0.vectorValued() || harmonic_projection(w0) != w0 || w0.tTopDegree() > 0)
        throw PreconditionFailed("theorem43: w0 must be a harmonic t-constant form");
    if (!harmonic_projection(restrict_subtorus(w0, Y.tangential)).isZero())
        throw PreconditionFailed("theorem43: w0 must restrict to zero class on Y0 (lie in K0)");
    int p, q;
    w0.bidegreeHomogeneous(p, q);
    int r = p + q;

    MonomialIdeal mA = MonomialIdeal::maximal(g.m) * A;
    Theorem43Result out;
    out.hypothesisHolds = true;

    for (const VForm& kappa : kzero_basis(g, Y, r)) {
        VForm cls(g);
        try {
            VForm extended = extend_class(xi, kappa, A);
            VForm pushed = exp_contract(xi, extended);
            cls = harmonic_projection(restrict_subtorus(pushed, Y.tangential)).reduce(mA);
        } catch (const ObstructedExtension& e) {
            out.hypothesisHolds = false;
            out.witnesses.push_back(kappa.str() + " fails to extend: " + e.what());
            continue;
        }
        if (!cls.isZero()) {
            out.hypothesisHolds = false;
            out.witnesses.push_back(kappa.str() + " restricts to nonzero class " + cls.str());
        }
    }

    SplitKuranishi split = split_tangent_normal(xi, Y, A);
    out.pairingClass =
        harmonic_projection(restrict_subtorus(contract(split.normalPart, w0), Y.tangential))
            .reduce(mA);
    return out;
}

PairCocycle pair_obstruction_cocycle(const VForm& xi, const Subtorus& Y, const MonomialIdeal& A) {
    const Geometry& g = xi.geom();
    SplitKuranishi split = split_tangent_normal(xi, Y, A);
    VForm residual = mc_residual(xi);
    if (!residual.reduce(A).isZero())
        throw NotIntegrableMod("ambient residual does not lie in " + A.str() + ": " +
                               residual.reduce(A).str());
    MonomialIdeal mA = MonomialIdeal::maximal(g.m) * A;

    PairCocycle out{split.normalPart, residual, split.normalPart, VForm::zero(g)};
    VForm combined = exterior(xi - out.epsilon, ExtKind::Delbar) - bracket(xi, xi).scaled(Rat(1, 2));
    if (!combined.reduce(A).isZero())
        throw CocycleViolation("pair cocycle does not lie in the ideal: " +
                               combined.reduce(A).str());
    out.combined = combined.reduce(mA);
    VForm normalLeak = normal_value_part(restrict_subtorus(out.combined, Y.tangential), Y.tangential);
    if (!normalLeak.isZero())
        throw CocycleViolation("pair cocycle has normal components on Y0: " + normalLeak.str());
    return out;
}

std::pair<VForm, VForm> pair_coboundary(const VForm& a, const VForm& b, const Subtorus& Y) {
    requireSameGeometry(a, b, "pair_coboundary");
    VForm first = -exterior(a, ExtKind::Delbar) +
                  normal_value_part(restrict_subtorus(b, Y.tangential), Y.tangential);
    return {first, exterior(b, ExtKind::Delbar)};
}

CochainCheckResult theorem52_cochain_check(const VForm& xi, const VForm& eps, const VForm& w0,
                                           const VForm& w, const MonomialIdeal& A) {
    const Geometry& g = xi.geom();
    MonomialIdeal mA = MonomialIdeal::maximal(g.m) * A;

    VForm delw = exterior(w, ExtKind::Del);
    if (!delw.isZero())
        throw PreconditionFailed("theorem52: w is not del-closed");
    if (w.tDegreePart(0) != w0)
        throw PreconditionFailed("theorem52: w does not restrict to w0 at t = 0");
    VForm flat = (exterior(w, ExtKind::Delbar) - lie(xi, w, LiePart::Holo)).reduce(A);
    if (!flat.isZero())
        throw PreconditionFailed("theorem52: w is not a flat extension mod A");
    if (!eps.reduce(A).isZero())
        throw PreconditionFailed("theorem52: eps does not lie in the ideal");

    VForm xiP = xi - eps;
    CochainCheckResult out{false, VForm::zero(g), ""};

    VForm bracketDrift = (bracket(xiP, xiP) - bracket(xi, xi)).reduce(mA);
    if (!bracketDrift.isZero()) {
        out.witness = bracketDrift;
        out.failed = "bracket congruence [xi',xi'] = [xi,xi] mod mA";
        return out;
    }

    VForm lhs = exterior(contract(xiP, w), ExtKind::Delbar) +
                exterior(contract(xiP, contract(xiP, w0)), ExtKind::Del).scaled(Rat(1, 2));
    VForm rhs = exterior(contract(xiP, w0), ExtKind::Delbar) -
                contract(bracket(xi, xi), w0).scaled(Rat(1, 2));
    VForm diff = (lhs - rhs).reduce(mA);
    if (!diff.isZero()) {
        out.witness = diff;
        out.failed = "final congruence mod mA";
        return out;
    }
    out.ok = true;
    return out;
}

} // namespace kur
