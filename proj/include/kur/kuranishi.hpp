#pragma once

#include <map>
#include <utility>

#include "kur/calculus.hpp"
#include "kur/hodge.hpp"

namespace kur {

/// A (0,1)-form with values in the holomorphic tangent frame and no
/// t-constant term: the deformation datum of a transversely holomorphic
/// trivialization.
struct KuranishiData {
    VForm xi;

    explicit KuranishiData(VForm v);
    static KuranishiData zero(const Geometry& g) { return KuranishiData(VForm::zero(g)); }
};

struct ObstructionEntry {
    TMono monomial;
    VForm harmonicForm;
    bool isZero = true;
};

struct ObstructionReport {
    std::vector<ObstructionEntry> perOrder;
    int solvedTo = 0;
    bool allZero() const;
};

/// Maurer-Cartan residual delbar xi - (1/2)[xi,xi]; its vanishing is the
/// integrability of the almost complex structure defined by xi.
VForm mc_residual(const VForm& xi);

/// True when every residual term's t-monomial lies in A.
bool is_integrable_mod(const VForm& xi, const MonomialIdeal& A);

/// Independent integrability check: builds the deformed antiholomorphic
/// frame vectors d/dvb_k - sum h^l_k d/dv_l, takes their commutators and
/// pairs against the deformed (1,0)-forms dv^r + <xi|dv^r>.  Assembled from
/// coefficient arithmetic only (no bracket/exterior/contract calls), so it
/// cross-checks those routines; equals twice the Maurer-Cartan residual.
VForm frame_integrability_oracle(const VForm& xi);

/// The deformed Dolbeault operator (delbar - L_xi)(w) for scalar-valued w.
VForm dbar_xi_operator(const VForm& xi, const VForm& w);

/// Checks the conjugation law
///   (delbar - L^{1,0}_xi)(w) = e^{-<xi|>} (delbar - L_xi)(e^{<xi|>} w)
/// and, when xi is integrable, the vanishing of the commutator of
/// (Dbar_xi + delbar) with e^{<xi|>} on w.
bool conjugated_operator_check(const VForm& xi, const VForm& w);

/// Extracts the Kuranishi datum of the local gauge generated by beta,
/// normalized so that Dbar_{xi_beta} annihilates e^{-L_beta}(v_l) for every
/// coordinate; evaluation on the coordinates determines the datum.  Chart
/// geometry; NotNilpotent when beta has a t-constant term.
KuranishiData local_gauge_to_kuranishi(const VForm& beta);

/// One-parameter gauge family
///   xi_s = exp([s alpha, .])(xi) + ((exp([s alpha, .]) - 1)/[s alpha, .])(s delbar alpha)
/// as a polynomial in s; satisfies d xi_s/ds = delbar alpha + [alpha, xi_s].
SPoly gauge_family(const VForm& xi, const VForm& alpha);
KuranishiData gauge_transform(const VForm& xi, const VForm& alpha, const Rat& s);

struct McOptions {
    /// Test hook: harmonic (0,2) terms added to the order-k bracket sum,
    /// exercising the obstruction-report path (the compact model itself is
    /// unobstructed).
    std::map<int, VForm> injectResidual;
    int maxOrder = 0; // 0 = geometry truncation order
};

/// Order-by-order Maurer-Cartan solver in the Green-operator gauge
/// xi_k = G((1/2) sum_{i+j=k} [xi_i, xi_j]).  The first-order datum is a
/// t-free cocycle (seeded as t_1 * datum when m = 1) or a t-degree-1 form;
/// NotCocycle when delbar of it is nonzero.  Stops at the first nonzero
/// obstruction and reports the harmonic class per t-monomial.
std::pair<KuranishiData, ObstructionReport> mc_solve(const VForm& firstOrder,
                                                     const McOptions& opts = {});

/// Class of the Maurer-Cartan residual of an integrable-mod-A datum on the
/// quotient basis of A; verifies the residual is a cocycle mod mA first.
/// Equal to -1/2 times the bracket class, since delbar xi is exact.
ObstructionReport obstruction_class(const VForm& xi, const MonomialIdeal& A);

/// Gauss-Manin action of d/dt_k on e^{<xi|>} A^{p,q}: the (p,q)-preserving
/// slot e^{<xi|>}(dw/dt_k) and the (p-1,q+1) slot e^{<xi|>}<dxi/dt_k|w>.
std::pair<VForm, VForm> gauss_manin(const VForm& xi, const VForm& w, int k);

struct ExtendOptions {
    bool skipIntegrabilityCheck = false; // fault-injection runs only
};

/// Extends a harmonic (p,q)-form w0 to w with (delbar - L^{1,0}_xi) w = 0
/// mod A, del w = 0 exactly and w|_{t=0} = w0.  The recursion solves
/// delbar w_k = (L^{1,0}_xi w)_k with the Green operator; del-closedness is
/// preserved because del G = -G del frequencywise.  ObstructedExtension
/// with the harmonic witness when an order is unsolvable.
VForm extend_class(const VForm& xi, const VForm& w0, const MonomialIdeal& A,
                   const ExtendOptions& opts = {});

struct Theorem41Result {
    VForm lhs;           // delbar<xi|w> + 1/2 del<xi|<xi|w0>>   (mod mA)
    VForm rhs;           // delbar<xi|w0> - 1/2 <[xi,xi]|w0>     (mod mA)
    ObstructionReport pairing;
    bool congruent = false;   // lhs == rhs term-identically
    bool identity412 = false; // exact intermediate identity
    bool classZero = false;   // harmonic class of <[xi,xi]|w0> mod mA is 0
    bool ok() const { return congruent && identity412 && classZero; }
};

/// Certifies that the obstruction pairs to zero with a harmonic class:
/// verifies the exact identity
///   1/2 <[xi,xi]|w> = <xi|del<xi|w>> - 1/2 del<xi|<xi|w>>,
/// the final congruence mod mA between lhs and rhs above, and the
/// vanishing of the harmonic class of <[xi,xi]|w0> mod mA.
Theorem41Result theorem41_certificate(const VForm& xi, const VForm& w0, const MonomialIdeal& A,
                                      const ExtendOptions& opts = {});

} // namespace kur
