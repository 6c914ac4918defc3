#pragma once

#include <map>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "kur/rational.hpp"

namespace kur {

enum class RingKind { Chart, Torus };
enum class DerKind { Holo, Anti };

/// Model-geometry descriptor shared by every value in a session: the
/// coefficient ring, the coordinate dimension n, and the deformation
/// parameters (m, truncation N).
struct Geometry {
    RingKind ring = RingKind::Chart;
    int n = 1;
    int m = 1;
    int N = 3;

    friend bool operator==(const Geometry&, const Geometry&) = default;
    std::string str() const;
};

Geometry chartGeometry(int n, int m, int N);
Geometry torusGeometry(int n, int m, int N);

/// Polynomial on a polydisk chart: exponents for v_1..v_n then vb_1..vb_n.
using ChartMono = std::vector<int>;

/// Frequency pair (alpha; beta) of a torus character, alpha then beta, each
/// of length n.  Lattice constraint: beta_j = -conj(alpha_j) componentwise
/// (equivalently alpha+beta in 2iZ^n and alpha-beta in 2Z^n), which encodes
/// genuine characters of the real torus.  In particular beta = 0 forces
/// alpha = 0: the only holomorphic functions are constants.
using TorusFreq = std::vector<GaussInt>;

bool latticeAdmissible(const TorusFreq& f, int n);

struct ChartMonoLess {
    bool operator()(const ChartMono& a, const ChartMono& b) const;
};
struct TorusFreqLess {
    bool operator()(const TorusFreq& a, const TorusFreq& b) const;
};

/// Element of the coefficient function ring standing in for smooth functions
/// on the model:  a polynomial chart ring, or the span of lattice characters
/// E[alpha;beta] on a flat torus.  Values are immutable in practice: every
/// operation returns a fresh element.
class Fn {
public:
    using ChartTerms = std::map<ChartMono, Rat, ChartMonoLess>;
    using TorusTerms = std::map<TorusFreq, Rat, TorusFreqLess>;

    static Fn zero(const Geometry& g);
    static Fn constant(const Geometry& g, const Rat& c);
    /// Chart coordinate monomial v_j (kind Holo) or vb_j (kind Anti).
    static Fn coordinate(const Geometry& g, int j, DerKind kind);
    static Fn chartMonomial(const Geometry& g, const ChartMono& mono, const Rat& c);
    /// Torus character; validates the lattice constraint.
    static Fn character(const Geometry& g, const TorusFreq& freq, const Rat& c = Rat(1));

    RingKind kind() const { return kind_; }
    int dim() const { return n_; }
    bool isZero() const;

    const ChartTerms& chartTerms() const { return std::get<ChartTerms>(terms_); }
    const TorusTerms& torusTerms() const { return std::get<TorusTerms>(terms_); }

    Fn operator-() const;
    Fn scaled(const Rat& c) const;
    friend Fn operator+(const Fn& a, const Fn& b);
    friend bool operator==(const Fn& a, const Fn& b);
    friend bool operator!=(const Fn& a, const Fn& b) { return !(a == b); }
    friend bool operator<(const Fn& a, const Fn& b); // deterministic order only

    std::string str() const; // "v1^2*vb1", "E[1+i,0;-1+i,0]", "1"

private:
    Fn(RingKind k, int n) : kind_(k), n_(n) {
        if (k == RingKind::Chart)
            terms_ = ChartTerms{};
        else
            terms_ = TorusTerms{};
    }
    void addChart(const ChartMono& m, const Rat& c);
    void addTorus(const TorusFreq& f, const Rat& c);

    RingKind kind_;
    int n_;
    std::variant<ChartTerms, TorusTerms> terms_;

    friend Fn fn_mul(const Fn&, const Fn&);
    friend Fn derivative(const Fn&, int, DerKind);
    friend Fn restrict_chart(const Fn&, const std::set<int>&);
    friend Fn project_to_subtorus(const Fn&, const std::set<int>&);
};

/// Exact ring product (exponent / frequency addition).  RingMismatch if the
/// operands live in different rings or dimensions.
Fn fn_mul(const Fn& f, const Fn& g);

/// Formal partial d/dv_j (Holo) or d/dvb_j (Anti); on characters this is
/// multiplication by alpha_j resp. beta_j.
Fn derivative(const Fn& f, int j, DerKind kind);

/// Coefficient of the constant character E[0;0]; the harmonic projection of
/// a torus function.  Torus ring only.
Rat torus_zero_freq(const Fn& f);

/// Restriction to the coordinate submanifold {v_j = 0 : j in zeroSet}.
/// Chart: substitute zero.  Torus: drop the assigned frequency components,
/// producing an element of the subtorus ring (dimension n - |zeroSet|).
Fn restrict_chart(const Fn& f, const std::set<int>& zeroSet);

/// Same restriction, but represented as the pullback along the product
/// projection: the ambient dimension is kept and the frequency/exponent
/// components off the tangential set S are zeroed.  This is the form-level
/// workhorse: sub-geometry objects stay inside the ambient algebra.
Fn project_to_subtorus(const Fn& f, const std::set<int>& tangential);

} // namespace kur
