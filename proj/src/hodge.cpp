#include "kur/hodge.hpp"

#include "kur/calculus.hpp"
#include "kur/errors.hpp"

namespace kur {

namespace {

void requireTorus(const VForm& w, const char* who) {
    if (w.geom().ring != RingKind::Torus)
        throw WrongGeometry(std::string(who) + ": flat-torus geometry required");
}

// Shared kernel of the two homotopies: contract each frequency component by
// the weighted frame vectors of the given kind.  `slot` selects the alpha
// (Holo) or beta (Anti) half of the frequency pair.
VForm homotopy(const VForm& w, DerKind kind) {
    requireTorus(w, "homotopy");
    const Geometry& g = w.geom();
    int n = g.n;
    VForm r(g);
    for (auto& [key, series] : w.terms()) {
        for (auto& [mono, fn] : series.parts()) {
            for (auto& [freq, c] : fn.torusTerms()) {
                int base = kind == DerKind::Holo ? 0 : n;
                Rat norm(0);
                for (int j = 0; j < n; ++j) {
                    GaussInt e = freq[base + j];
                    norm += e.toRat() * e.conj().toRat();
                }
                if (norm.isZero()) continue; // harmonic component
                for (int j = 1; j <= n; ++j) {
                    GaussInt e = freq[base + j - 1];
                    if (e.isZero()) continue;
                    auto hit = keyInterior(key, kind, j);
                    if (!hit) continue;
                    auto [sign, reduced] = *hit;
                    Rat coef = c * e.conj().toRat() / norm;
                    if (sign < 0) coef = -coef;
                    r.addCanonical(reduced,
                                   FnSeries::make(mono, Fn::character(g, freq, coef)));
                }
            }
        }
    }
    return r;
}

} // namespace

VForm harmonic_projection(const VForm& w) {
    requireTorus(w, "harmonic_projection");
    const Geometry& g = w.geom();
    VForm r(g);
    for (auto& [key, series] : w.terms()) {
        for (auto& [mono, fn] : series.parts()) {
            Rat c = torus_zero_freq(fn);
            if (!c.isZero()) r.addCanonical(key, FnSeries::make(mono, Fn::constant(g, c)));
        }
    }
    return r;
}

VForm dbar_homotopy(const VForm& w) { return homotopy(w, DerKind::Anti); }

VForm partial_homotopy(const VForm& w) { return homotopy(w, DerKind::Holo); }

VForm solve_dbar(const VForm& y) {
    requireTorus(y, "solve_dbar");
    VForm dy = exterior(y, ExtKind::Delbar);
    if (!dy.isZero()) throw NotClosed("solve_dbar: right-hand side is not delbar-closed", dy.str());
    VForm h = harmonic_projection(y);
    if (!h.isZero())
        throw Obstructed("solve_dbar: right-hand side has a nonzero harmonic part", h.str());
    return dbar_homotopy(y);
}

HodgeDecomposition hodge_decompose(const VForm& y) {
    return HodgeDecomposition{harmonic_projection(y), dbar_homotopy(y),
                              dbar_homotopy(exterior(y, ExtKind::Delbar))};
}

bool classes_equal(const VForm& a, const VForm& b) {
    requireSameGeometry(a, b, "classes_equal");
    VForm da = exterior(a, ExtKind::Delbar);
    if (!da.isZero()) throw NotClosed("classes_equal: first form not closed", da.str());
    VForm db = exterior(b, ExtKind::Delbar);
    if (!db.isZero()) throw NotClosed("classes_equal: second form not closed", db.str());
    return harmonic_projection(a) == harmonic_projection(b);
}

} // namespace kur
