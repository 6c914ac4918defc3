#pragma once

#include <gmpxx.h>

#include <string>

namespace kur {

/// Exact element of Q(i).  Both components are GMP rationals, so they are
/// always stored reduced with positive denominator and all arithmetic is
/// exact.  This is the coefficient field of the whole engine; no floating
/// point appears anywhere downstream.
class Rat {
public:
    Rat() : re_(0), im_(0) {}
    Rat(long n) : re_(n), im_(0) {}
    Rat(long num, long den);
    Rat(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
        re_.canonicalize();
        im_.canonicalize();
    }

    static Rat i() { return Rat(mpq_class(0), mpq_class(1)); }
    static Rat imag(long num, long den = 1);

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool isZero() const { return re_ == 0 && im_ == 0; }
    bool isReal() const { return im_ == 0; }

    Rat operator-() const { return Rat(-re_, -im_); }
    Rat conj() const { return Rat(re_, -im_); }

    Rat& operator+=(const Rat& o);
    Rat& operator-=(const Rat& o);
    Rat& operator*=(const Rat& o);
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
    friend bool operator==(const Rat& a, const Rat& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }

    // Total order used only for deterministic term ordering.
    friend bool operator<(const Rat& a, const Rat& b) {
        if (a.re_ != b.re_) return a.re_ < b.re_;
        return a.im_ < b.im_;
    }

    /// Canonical text: "a/b+c/d*i" with zero parts suppressed, "/1" elided,
    /// unit imaginary parts as "i"/"-i".  Mixed values are parenthesized so
    /// the rendering re-parses as a single factor.
    std::string str() const;

private:
    mpq_class re_, im_;
};

/// Gaussian integer; used for torus frequencies.  Arithmetic stays in
/// machine integers (frequency magnitudes are tiny).
struct GaussInt {
    int re = 0;
    int im = 0;

    bool isZero() const { return re == 0 && im == 0; }
    GaussInt operator-() const { return {-re, -im}; }
    GaussInt conj() const { return {re, -im}; }
    friend GaussInt operator+(GaussInt a, GaussInt b) { return {a.re + b.re, a.im + b.im}; }
    friend GaussInt operator-(GaussInt a, GaussInt b) { return {a.re - b.re, a.im - b.im}; }
    friend bool operator==(GaussInt a, GaussInt b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(GaussInt a, GaussInt b) { return !(a == b); }
    friend bool operator<(GaussInt a, GaussInt b) {
        if (a.re != b.re) return a.re < b.re;
        return a.im < b.im;
    }

    Rat toRat() const { return Rat(mpq_class(re), mpq_class(im)); }

    /// "p+qi" with suppressed parts: "0", "2", "i", "-i", "1-2i".
    std::string str() const;
};

} // namespace kur
