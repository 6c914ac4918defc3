#include "kur/kuranishi.hpp"

#include "kur/errors.hpp"

namespace kur {

KuranishiData::KuranishiData(VForm v) : xi(std::move(v)) {
    for (auto& [key, c] : xi.terms()) {
        if (key.vec == 0 || key.p() != 0 || key.q() != 1)
            throw TypeError("Kuranishi data must be a vector-valued (0,1) form");
    }
    if (!xi.inMaximalIdeal())
        throw TypeError("Kuranishi data must have no t-constant term");
}

bool ObstructionReport::allZero() const {
    for (auto& e : perOrder)
        if (!e.isZero) return false;
    return true;
}

VForm mc_residual(const VForm& xi) {
    return exterior(xi, ExtKind::Delbar) - bracket(xi, xi).scaled(Rat(1, 2));
}

bool is_integrable_mod(const VForm& xi, const MonomialIdeal& A) {
    return mc_residual(xi).reduce(A).isZero();
}

VForm frame_integrability_oracle(const VForm& xi) {
    const Geometry& g = xi.geom();
    for (auto& [key, c] : xi.terms())
        if (key.vec == 0 || key.p() != 0 || key.q() != 1)
            throw TypeError("integrability oracle expects a vector-valued (0,1) form");

    // h[j][l] = coefficient series of dvb_j (x) d/dv_l  (1-based, 0 slot unused)
    std::vector<std::vector<FnSeries>> h(g.n + 1, std::vector<FnSeries>(g.n + 1));
    for (auto& [key, c] : xi.terms()) h[key.anti[0]][key.vec] = c;

    std::vector<RawTerm> raw;
    for (int j = 1; j <= g.n; ++j) {
        for (int k = 1; k <= g.n; ++k) {
            for (int r = 1; r <= g.n; ++r) {
                FnSeries coef = fns_derivative(h[j][r], k, DerKind::Anti) +
                                (-fns_derivative(h[k][r], j, DerKind::Anti));
                for (int l = 1; l <= g.n; ++l) {
                    coef = coef + fns_mul(h[j][l], fns_derivative(h[k][r], l, DerKind::Holo), g.N);
                    coef = coef + (-fns_mul(h[k][l], fns_derivative(h[j][r], l, DerKind::Holo), g.N));
                }
                if (coef.isZero()) continue;
                raw.push_back(RawTerm{coef, {Letter{DerKind::Anti, k}, Letter{DerKind::Anti, j}}, r});
            }
        }
    }
    return VForm::canonicalize(g, raw);
}

VForm dbar_xi_operator(const VForm& xi, const VForm& w) {
    return exterior(w, ExtKind::Delbar) - lie(xi, w, LiePart::Full);
}

bool conjugated_operator_check(const VForm& xi, const VForm& w) {
    VForm lhs = exterior(w, ExtKind::Delbar) - lie(xi, w, LiePart::Holo);
    VForm rhs = exp_contract(-xi, dbar_xi_operator(xi, exp_contract(xi, w)));
    if (lhs != rhs) return false;
    if (!mc_residual(xi).isZero()) return true; // commutator law needs integrability
    VForm push = exp_contract(xi, w);
    VForm left = dbar_xi_operator(xi, push) + exterior(push, ExtKind::Delbar);
    VForm right = exp_contract(xi, dbar_xi_operator(xi, w) + exterior(w, ExtKind::Delbar));
    return left == right;
}

KuranishiData local_gauge_to_kuranishi(const VForm& beta) {
    const Geometry& g = beta.geom();
    if (g.ring != RingKind::Chart)
        throw WrongGeometry("local gauge extraction works on the polydisk chart");
    VForm xi(g);
    for (int l = 1; l <= g.n; ++l) {
        VForm vl = VForm::fromFn(g, Fn::coordinate(g, l, DerKind::Holo));
        VForm gauged = exp_lie(beta, vl);
        VForm pulled = exp_lie(-beta, exterior(gauged, ExtKind::Delbar));
        for (auto& [key, c] : (-pulled).terms()) {
            if (key.p() != 0 || key.q() != 1)
                throw TypeError("local gauge extraction produced a non-(0,1) component");
            FormKey valued = key;
            valued.vec = l;
            xi.addCanonical(valued, c);
        }
    }
    return KuranishiData(xi);
}

SPoly gauge_family(const VForm& xi, const VForm& alpha) {
    requireSameGeometry(xi, alpha, "gauge_family");
    AdExpansion onXi = exp_ad(alpha, xi);
    AdExpansion onDbar = exp_ad(alpha, exterior(alpha, ExtKind::Delbar));
    size_t len = std::max(onXi.powers.size(), onDbar.powers.size() + 1);
    SPoly family;
    Rat factorial(1);
    for (size_t j = 0; j < len; ++j) {
        if (j > 0) factorial *= Rat((long)j);
        VForm c = VForm::zero(xi.geom());
        if (j < onXi.powers.size()) c = c + onXi.powers[j].scaled(Rat(1) / factorial);
        if (j >= 1 && j - 1 < onDbar.powers.size())
            c = c + onDbar.powers[j - 1].scaled(Rat(1) / factorial);
        family.push_back(std::move(c));
    }
    while (!family.empty() && family.back().isZero()) family.pop_back();
    return family;
}

KuranishiData gauge_transform(const VForm& xi, const VForm& alpha, const Rat& s) {
    return KuranishiData(spoly_eval(gauge_family(xi, alpha), s, xi.geom()));
}

namespace {

void recordObstruction(ObstructionReport& report, const VForm& harmonic, int order, int m) {
    // One entry per t-monomial of the given order; a single zero entry when
    // the whole order is unobstructed.
    if (harmonic.isZero()) {
        TMono mono(m, 0);
        mono[0] = order; // representative monomial t1^k
        report.perOrder.push_back({mono, harmonic, true});
        return;
    }
    std::map<TMono, VForm, GradedLex> split;
    for (auto& [key, series] : harmonic.terms())
        for (auto& [mono, fn] : series.parts()) {
            auto [it, fresh] = split.try_emplace(mono, harmonic.geom());
            FormKey k = key;
            it->second.addCanonical(k, FnSeries::make(tmonoOne(m), fn));
        }
    for (auto& [mono, part] : split) report.perOrder.push_back({mono, part, part.isZero()});
}

} // namespace

std::pair<KuranishiData, ObstructionReport> mc_solve(const VForm& firstOrder,
                                                     const McOptions& opts) {
    const Geometry& g = firstOrder.geom();
    if (g.ring != RingKind::Torus)
        throw WrongGeometry("the Maurer-Cartan solver needs the torus Green operator");
    VForm seed = firstOrder;
    if (!seed.isZero() && seed.tTopDegree() == 0) {
        if (g.m != 1)
            throw ParamMismatch("t-free first-order data needs m = 1 to pick the parameter");
        seed = seed.mulMono(tmonoVar(1, 1));
    }
    if (!seed.tDegreePart(1).inMaximalIdeal() || seed != seed.tDegreePart(1))
        throw TypeError("first-order datum must be homogeneous of t-degree 1");
    VForm dseed = exterior(seed, ExtKind::Delbar);
    if (!dseed.isZero())
        throw NotCocycle("first-order datum is not a Dolbeault cocycle: " + dseed.str());

    int maxOrder = opts.maxOrder > 0 ? std::min(opts.maxOrder, g.N) : g.N;
    VForm xi = seed;
    ObstructionReport report;
    report.solvedTo = 1;
    for (int k = 2; k <= maxOrder; ++k) {
        VForm y = bracket(xi, xi).scaled(Rat(1, 2)).tDegreePart(k);
        auto inj = opts.injectResidual.find(k);
        if (inj != opts.injectResidual.end()) y = y + inj->second;
        VForm obstruction = harmonic_projection(y);
        recordObstruction(report, obstruction, k, g.m);
        if (!obstruction.isZero()) return {KuranishiData(xi), report};
        VForm yd = exterior(y, ExtKind::Delbar);
        if (!yd.isZero())
            throw CocycleViolation("order-" + std::to_string(k) +
                                   " bracket sum is not closed: " + yd.str());
        xi = xi + dbar_homotopy(y);
        report.solvedTo = k;
    }
    return {KuranishiData(xi), report};
}

ObstructionReport obstruction_class(const VForm& xi, const MonomialIdeal& A) {
    const Geometry& g = xi.geom();
    if (g.ring != RingKind::Torus)
        throw WrongGeometry("obstruction classes use the torus harmonic theory");
    if (!is_integrable_mod(xi, A))
        throw NotIntegrableMod("datum is not integrable modulo " + A.str());
    MonomialIdeal mA = MonomialIdeal::maximal(g.m) * A;
    VForm residual = mc_residual(xi);
    VForm closedness = exterior(residual, ExtKind::Delbar).reduce(mA);
    if (!closedness.isZero())
        throw CocycleViolation("residual is not closed mod mA: " + closedness.str());
    VForm reduced = residual.reduce(mA);
    ObstructionReport report;
    report.solvedTo = -1;
    for (const TMono& mono : ideal_quotient_basis(A)) {
        VForm part = harmonic_projection(reduced.tMonoComponent(mono));
        report.perOrder.push_back({mono, part, part.isZero()});
    }
    return report;
}

std::pair<VForm, VForm> gauss_manin(const VForm& xi, const VForm& w, int k) {
    requireSameGeometry(xi, w, "gauss_manin");
    if (k < 1 || k > w.geom().m) throw ParamMismatch("gauss_manin parameter index out of range");
    VForm preserving = exp_contract(xi, w.tDerivative(k));
    VForm shifting = exp_contract(xi, contract(xi.tDerivative(k), w));
    return {preserving, shifting};
}

VForm extend_class(const VForm& xi, const VForm& w0, const MonomialIdeal& A,
                   const ExtendOptions& opts) {
    const Geometry& g = xi.geom();
    if (g.ring != RingKind::Torus)
        throw WrongGeometry("flat extension uses the torus Green operator");
    requireSameGeometry(xi, w0, "extend_class");
    if (w0.vectorValued() || harmonic_projection(w0) != w0 || w0.tTopDegree() > 0)
        throw PreconditionFailed("extend_class: w0 must be a harmonic scalar t-constant form");
    if (!opts.skipIntegrabilityCheck && !is_integrable_mod(xi, A))
        throw NotIntegrableMod("extend_class: datum is not integrable modulo " + A.str());

    VForm w = w0;
    for (int k = 1; k <= g.N; ++k) {
        VForm z = lie(xi, w, LiePart::Holo).tDegreePart(k).reduce(A);
        if (z.isZero()) continue;
        VForm zd = exterior(z, ExtKind::Delbar);
        if (!zd.isZero())
            throw ObstructedExtension(
                "order-" + std::to_string(k) + " right-hand side is not closed", zd.str());
        VForm h = harmonic_projection(z);
        if (!h.isZero())
            throw ObstructedExtension(
                "order-" + std::to_string(k) + " extension step is obstructed", h.str());
        w = w + dbar_homotopy(z);
    }
    return w;
}

Theorem41Result theorem41_certificate(const VForm& xi, const VForm& w0, const MonomialIdeal& A,
                                      const ExtendOptions& opts) {
    const Geometry& g = xi.geom();
    VForm w = extend_class(xi, w0, A, opts);
    MonomialIdeal mA = MonomialIdeal::maximal(g.m) * A;
    VForm brkt = bracket(xi, xi);

    Theorem41Result out{VForm::zero(g), VForm::zero(g), {}, false, false, false};

    // Exact intermediate identity (uses only del w = 0):
    //   1/2 <[xi,xi]|w> = <xi|del<xi|w>> - 1/2 del<xi|<xi|w>>
    VForm xiw = contract(xi, w);
    VForm id412lhs = contract(brkt, w).scaled(Rat(1, 2));
    VForm id412rhs = contract(xi, exterior(xiw, ExtKind::Del)) -
                     exterior(contract(xi, xiw), ExtKind::Del).scaled(Rat(1, 2));
    out.identity412 = id412lhs == id412rhs;

    VForm xiw0 = contract(xi, w0);
    out.lhs = (exterior(xiw, ExtKind::Delbar) +
               exterior(contract(xi, xiw0), ExtKind::Del).scaled(Rat(1, 2)))
                  .reduce(mA);
    out.rhs = (exterior(xiw0, ExtKind::Delbar) - contract(brkt, w0).scaled(Rat(1, 2))).reduce(mA);
    out.congruent = out.lhs == out.rhs;

    VForm pairing = contract(brkt, w0).reduce(mA);
    VForm pairingClass = harmonic_projection(pairing);
    out.classZero = pairingClass.isZero();
    out.pairing.solvedTo = -1;
    for (const TMono& mono : ideal_quotient_basis(A)) {
        VForm part = pairingClass.tMonoComponent(mono);
        out.pairing.perOrder.push_back({mono, part, part.isZero()});
    }
    return out;
}

} // namespace kur
