#pragma once

#include "kur/forms.hpp"

namespace kur {

/// Flat-torus Hodge theory.  Everything here works frequency by frequency:
/// a character component is harmonic exactly when its frequency vanishes,
/// and the homotopy operators invert delbar / del on the complement.  All
/// operations accept vector-valued forms (they act frame-componentwise) and
/// throw WrongGeometry on chart inputs.

/// Zero-frequency (constant-coefficient) part; computes the Dolbeault class
/// of a closed form.  Idempotent, annihilates im(del) and im(delbar).
VForm harmonic_projection(const VForm& w);

/// Green-type homotopy G for delbar: per frequency (alpha;beta) with
/// beta != 0 applies (1/N(beta)) sum_j conj(beta_j) iota_{d/dvb_j}; zero on
/// harmonic components.  Satisfies delbar G + G delbar + H = id exactly.
VForm dbar_homotopy(const VForm& w);

/// Mirror homotopy for del, built from the alpha-frequencies and
/// iota_{d/dv_j}; satisfies del G' + G' del + H = id exactly.
VForm partial_homotopy(const VForm& w);

/// Solves delbar x = y for delbar-closed y with zero harmonic part; returns
/// x = G(y).  NotClosed when delbar y != 0; Obstructed with the harmonic
/// part as witness when the class of y is nonzero.
VForm solve_dbar(const VForm& y);

/// y = harmonic + delbar(potential) + remainder reconstruction, exactly:
/// y = H(y) + delbar G(y) + G(delbar y).
struct HodgeDecomposition {
    VForm harmonic;
    VForm potential; // G(y)
    VForm remainder; // G(delbar y)
};
HodgeDecomposition hodge_decompose(const VForm& y);

/// Two delbar-closed forms represent the same class iff their harmonic
/// parts agree.  NotClosed when either input is not closed.
bool classes_equal(const VForm& a, const VForm& b);

} // namespace kur
