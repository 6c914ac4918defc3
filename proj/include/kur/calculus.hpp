#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "kur/forms.hpp"

namespace kur {

enum class ExtKind { Full, Del, Delbar };
enum class LiePart { Full, Holo, Anti };

/// Exterior derivative: d = del + delbar, df wedged from the left.  Acts
/// coefficientwise in the global frame on vector-valued forms, so this is
/// also the Dolbeault operator on tangent-valued forms.
VForm exterior(const VForm& w, ExtKind kind);

/// Contraction of a (0,k) tangent-valued form against a scalar form:
/// decomposables act as eta_bar ^ iota_chi with interior-product sign
/// (-1)^(r-1) on the r-th letter; maps A^{p,q} to A^{p-1,q+k}.
VForm contract(const VForm& xi, const VForm& w);

/// Lie differentiation <xi| >度d + (-1)^k d<xi| > and its (1,0)/(0,1)
/// refinements (del resp. delbar in place of d).  For k = deg xi:
/// the Holo part maps A^{p,q} to A^{p,q+k}, the Anti part to
/// A^{p-1,q+k+1}, and Full = Holo + Anti.
VForm lie(const VForm& xi, const VForm& w, LiePart part = LiePart::Full);

/// Graded bracket on tangent-valued (0,*)-forms, computed termwise:
/// [dvb^J (x) f d_a, dvb^K (x) g d_b]
///   = dvb^J ^ dvb^K (x) (f dg/dv_a d_b - g df/dv_b d_a).
VForm bracket(const VForm& a, const VForm& b);

/// e^{<xi| >} for (0,1)-valued xi; terminates because each contraction
/// lowers the holomorphic degree.  Multiplicative over wedge.
VForm exp_contract(const VForm& xi, const VForm& w);

/// e^{L_beta} for a (0,0) vector field beta with no t-constant term (the
/// formal pullback of the flow of beta, modulo tbar).  A ring homomorphism
/// on functions; NotNilpotent when beta has a t-constant part.
VForm exp_lie(const VForm& beta, const VForm& x);

/// Polynomial in the flow parameter s with form coefficients: value(s) =
/// sum coeff[j] * s^j.
using SPoly = std::vector<VForm>;

VForm spoly_eval(const SPoly& p, const Rat& s, const Geometry& g);

/// Iterated brackets ad_alpha^k(target) together with the two operator
/// series exp([s alpha, .]) and (exp([s alpha, .]) - 1)/[s alpha, .].
/// Requires alpha in m so the powers vanish past the truncation order.
struct AdExpansion {
    std::vector<VForm> powers; // ad^k(target), k = 0..K (last nonzero)
    SPoly expSeries() const;   // s^k ad^k / k!
    SPoly phiSeries() const;   // s^k ad^k / (k+1)!
};
AdExpansion exp_ad(const VForm& alpha, const VForm& target);

/// Anti-degree of a homogeneous (0,k) vector-valued form; TypeError when
/// the form has holomorphic letters, scalar terms or mixed degree.
int antiDegree(const VForm& xi);

// ---- machine-checkable identity suite ------------------------------------

struct IdentityResult {
    bool ok = false;
    VForm difference; // lhs - rhs of the failing assertion (zero when ok)
    std::string detail;
    IdentityResult(bool ok, VForm diff, std::string d = {})
        : ok(ok), difference(std::move(diff)), detail(std::move(d)) {}
};

using IdentityFn = std::function<IdentityResult(const std::vector<VForm>&)>;

/// Stable identity names: I-2.7.00, I-2.7.3, I-2.7.4, I-2.7.5, I-2.7.6,
/// I-2.7.7, I-2.7.8, I-2.7.9, I-48.5, I-kodd.
const std::vector<std::string>& identityNames();
const std::map<std::string, IdentityFn>& identityTable();

/// Evaluates one named identity on positional inputs (see identityArity);
/// UnknownIdentity for unlisted names, TypeError for ill-typed inputs.
IdentityResult check_identity(const std::string& name, const std::vector<VForm>& inputs);

/// Number and meaning of the positional inputs of each identity.
int identityArity(const std::string& name);

} // namespace kur
