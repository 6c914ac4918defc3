#pragma once

#include "kur/kuranishi.hpp"

namespace kur {

/// Coordinate subtorus Y0 = {v_j = 0 : j not in tangential} of a product
/// torus.  Restrictions are represented as pullbacks along the product
/// projection, so Y0-objects stay inside the ambient algebra and carry the
/// ambient harmonic theory.
struct Subtorus {
    std::set<int> tangential;
};

/// Tangential/normal split of a restricted Kuranishi datum:
/// restrict(xi) = xi' + xi'' with the value index deciding membership.
struct SplitKuranishi {
    VForm tangentialPart; // xi': values along Y0, coefficients on Y0
    VForm normalPart;     // xi'': normal values, coefficients in the ideal
    MonomialIdeal idealWitness;
};

/// Computes the split and validates xi' in m and xi'' in (x)A; the failure
/// of the second condition means xi does not deform Y0 modulo A and raises
/// NotSubmanifoldDeformation carrying the offending terms.
SplitKuranishi split_tangent_normal(const VForm& xi, const Subtorus& Y, const MonomialIdeal& A);

/// Y0-harmonic class of xi'' on the quotient basis of A, after verifying
/// the normal components of delbar xi'' vanish modulo mA.  Zero class means
/// the submanifold deformation extends after an ambient gauge move.
/// Requires the ambient datum integrable modulo mA.
ObstructionReport submanifold_obstruction(const VForm& xi, const Subtorus& Y,
                                          const MonomialIdeal& A);

/// Constant-form basis of K0^r = ker(H^r(M0) -> H^r(Y0)): the degree-r
/// wedge monomials containing at least one normal index.
std::vector<VForm> kzero_basis(const Geometry& g, const Subtorus& Y, int r);

struct Theorem43Result {
    bool hypothesisHolds = false;
    VForm pairingClass;
    std::vector<std::string> witnesses;
};

/// Semiregularity certificate.  The hypothesis "K0^r deforms" is checked in
/// the proof's working form: every flat extension of a K0-class restricts
/// to a form of zero Y0-harmonic class modulo mA.  The pairing class is the
/// Y0-harmonic part of <xi''|w0> restricted, modulo mA; the certified
/// contract is hypothesisHolds => pairingClass = 0.
Theorem43Result theorem43_certificate(const VForm& xi, const Subtorus& Y, const VForm& w0,
                                      const MonomialIdeal& A);

struct PairCocycle {
    VForm pairFirst;  // xi'' (normal restriction, lies in (x)A)
    VForm pairSecond; // ambient Maurer-Cartan residual (lies in (x)A)
    VForm epsilon;    // product-projection pullback of xi''
    VForm combined;   // delbar(xi - eps) - 1/2 [xi,xi],  A/mA representative
};

/// The degree-two cocycle of the deformation of the pair (M0,Y0) in the
/// Dolbeault hypercomplex of T_M -> N: returns (xi'', residual), the
/// canonical epsilon with xi - eps valued in T_{Y0|M0}, and the combined
/// representative, checked to have normal components vanishing on Y0.
PairCocycle pair_obstruction_cocycle(const VForm& xi, const Subtorus& Y, const MonomialIdeal& A);

/// Hypercomplex coboundary delta(a, b) = (-delbar a + b|_Y0, delbar b),
/// where b|_Y0 is the normal-valued part of the restriction.  delta^2 = 0.
std::pair<VForm, VForm> pair_coboundary(const VForm& a, const VForm& b, const Subtorus& Y);

struct CochainCheckResult {
    bool ok = false;
    VForm witness;
    std::string failed; // which equation failed, empty when ok
};

/// Verifies the cochain chain of the pair-obstruction pairing with
/// xi' = xi - eps:  [xi',xi'] = [xi,xi] mod mA, and
///   delbar<xi'|w> + 1/2 del<xi'|<xi'|w0>>
///     = delbar<xi'|w0> - 1/2 <[xi,xi]|w0>   (mod mA).
/// Preconditions checked here: del w = 0, w extends w0 modulo A, eps in
/// (x)A; the vanishing of w on Y0 x Delta_A is the caller's duty.
CochainCheckResult theorem52_cochain_check(const VForm& xi, const VForm& eps, const VForm& w0,
                                           const VForm& w, const MonomialIdeal& A);

} // namespace kur
