#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "kur/funring.hpp"
#include "kur/tseries.hpp"

namespace kur {

/// One cotangent letter: dv_idx (Holo) or dvb_idx (Anti).
struct Letter {
    DerKind kind;
    int idx;
    friend bool operator==(const Letter&, const Letter&) = default;
};
using Word = std::vector<Letter>;

/// Canonical wedge word: strictly increasing holomorphic indices I, then
/// strictly increasing antiholomorphic indices J, plus the optional tangent
/// frame index of a vector value (vec = 0 means scalar-valued; frame
/// indices are 1-based).  Vector-value degree is capped at 1.
struct FormKey {
    std::vector<int> holo; // I
    std::vector<int> anti; // J
    int vec = 0;           // 0 = scalar-valued, else d/dv_vec

    int p() const { return (int)holo.size(); }
    int q() const { return (int)anti.size(); }
    friend bool operator==(const FormKey&, const FormKey&) = default;
};

/// Canonical term order: bidegree (p,q), then I, then J, then vec.
struct FormKeyLess {
    bool operator()(const FormKey& a, const FormKey& b) const;
};

/// Sorts a raw word into canonical order.  Returns the permutation sign and
/// the sorted index lists, or nothing when a letter repeats (the term is
/// zero).  All letters are odd, so every transposition flips the sign.
std::optional<std::pair<int, FormKey>> canonicalWord(const Word& w, int vec);

/// Interior product of a canonical key by the frame vector d/dv_idx (Holo)
/// or d/dvb_idx (Anti): the contracted letter at overall position r
/// (0-based) contributes sign (-1)^r.  Empty when the letter is absent.
std::optional<std::pair<int, FormKey>> keyInterior(const FormKey& k, DerKind kind, int idx);

/// t-graded coefficient of a form term: an element of FunRing (x) C[[t]],
/// stored as a map from t-monomial to ring element.
class FnSeries {
public:
    using Parts = std::map<TMono, Fn, GradedLex>;

    FnSeries() = default;
    static FnSeries make(const TMono& mono, const Fn& f);

    bool isZero() const { return parts_.empty(); }
    const Parts& parts() const { return parts_; }
    void add(const TMono& mono, const Fn& f); // prunes zeros

    FnSeries operator-() const;
    friend FnSeries operator+(const FnSeries& a, const FnSeries& b);
    friend bool operator==(const FnSeries& a, const FnSeries& b);

    /// True when every t-monomial has total degree >= 1 (member of m).
    bool inMaximalIdeal() const;
    /// True when every t-monomial is homogeneous of the given degree.
    bool tHomogeneous(int degree) const;

private:
    Parts parts_;
};

FnSeries fns_scale(const FnSeries& a, const Rat& c);
FnSeries fns_mul(const FnSeries& a, const FnSeries& b, int maxOrder);
FnSeries fns_mul_mono(const FnSeries& a, const TMono& mono, int maxOrder);
FnSeries fns_derivative(const FnSeries& a, int j, DerKind kind);
FnSeries fns_tderivative(const FnSeries& a, int k); // d/dt_k, 1-based
FnSeries fns_reduce(const FnSeries& a, const MonomialIdeal& A);
FnSeries fns_project_sub(const FnSeries& a, const std::set<int>& tangential);
FnSeries fns_tpart(const FnSeries& a, int degree); // homogeneous slice

/// A raw, not yet canonicalized term; input of the canonicalizer.
struct RawTerm {
    FnSeries coef;
    Word word;
    int vec = 0;
};

/// Vector-valued (p,q)-form with series coefficients, kept canonical at all
/// times: strictly increasing index lists, no duplicate keys, no zero
/// terms.  Equality is map equality; rendering of equal forms is identical.
class VForm {
public:
    explicit VForm(const Geometry& g) : geom_(g) {}

    static VForm zero(const Geometry& g) { return VForm(g); }
    static VForm scalar(const Geometry& g, const Rat& c);
    static VForm fromFn(const Geometry& g, const Fn& f);
    static VForm fromFnSeries(const Geometry& g, const FnSeries& s);
    /// Single canonical-letter form, e.g. dv_i, dvb_j, optionally valued.
    static VForm letter(const Geometry& g, DerKind kind, int idx);
    /// The canonicalizer: accumulate raw terms, extracting permutation
    /// signs, merging duplicates and dropping zeros.  Idempotent.
    static VForm canonicalize(const Geometry& g, const std::vector<RawTerm>& raw);

    const Geometry& geom() const { return geom_; }
    const std::map<FormKey, FnSeries, FormKeyLess>& terms() const { return terms_; }
    bool isZero() const { return terms_.empty(); }

    /// Adds coef * (raw word) (x) d/dv_vec with canonical-sign extraction.
    void addRaw(const FnSeries& coef, const Word& word, int vec);
    void addCanonical(const FormKey& key, const FnSeries& coef);

    bool vectorValued() const;
    /// All terms share one bidegree; empty forms report (-1,-1).
    bool bidegreeHomogeneous(int& p, int& q) const;
    /// Every coefficient t-monomial of every term lies in m (no constant
    /// term in t).
    bool inMaximalIdeal() const;

    VForm operator-() const;
    VForm scaled(const Rat& c) const;
    friend VForm operator+(const VForm& a, const VForm& b);
    friend VForm operator-(const VForm& a, const VForm& b);
    friend bool operator==(const VForm& a, const VForm& b);
    friend bool operator!=(const VForm& a, const VForm& b) { return !(a == b); }

    VForm reduce(const MonomialIdeal& A) const;
    VForm tDegreePart(int degree) const;
    VForm tMonoComponent(const TMono& mono) const; // coefficient form, at t^0
    VForm tDerivative(int k) const;
    VForm mulMono(const TMono& mono) const;
    /// Maximal total t-degree appearing, -1 when zero.
    int tTopDegree() const;

    std::string str() const;

private:
    Geometry geom_;
    std::map<FormKey, FnSeries, FormKeyLess> terms_;
};

/// Graded-commutative product.  At most one factor may be vector-valued
/// (DegreeMismatch otherwise); the value is carried through.
VForm wedge(const VForm& a, const VForm& b);

/// The (p,q)-homogeneous summand; summing over all bidegrees recovers the
/// form.
VForm type_project(const VForm& a, int p, int q);

/// Restriction to the coordinate subtorus with tangential index set S,
/// represented as the pullback along the product projection: terms with
/// normal cotangent letters drop, coefficients lose their normal frequency
/// components, vector values keep their ambient index (tangential when the
/// index lies in S, normal otherwise).
VForm restrict_subtorus(const VForm& a, const std::set<int>& tangential);

/// Splits off the terms whose value index lies outside S (normal values).
VForm normal_value_part(const VForm& a, const std::set<int>& tangential);
VForm tangential_value_part(const VForm& a, const std::set<int>& tangential);

void requireSameGeometry(const VForm& a, const VForm& b, const char* op);

} // namespace kur
