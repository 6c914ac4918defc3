#include "kur/rational.hpp"

#include "kur/errors.hpp"

namespace kur {

Rat::Rat(long num, long den) : re_(num, den), im_(0) {
    if (den == 0) throw Error("DivisionByZero", "rational with zero denominator");
    re_.canonicalize();
}

Rat Rat::imag(long num, long den) {
    Rat r;
    r.im_ = mpq_class(num, den);
    r.im_.canonicalize();
    return r;
}

Rat& Rat::operator+=(const Rat& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

Rat& Rat::operator-=(const Rat& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

Rat& Rat::operator*=(const Rat& o) {
    mpq_class r = re_ * o.re_ - im_ * o.im_;
    mpq_class i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
}

Rat& Rat::operator/=(const Rat& o) {
    mpq_class n = o.re_ * o.re_ + o.im_ * o.im_;
    if (n == 0) throw Error("DivisionByZero", "division by zero Gaussian rational");
    mpq_class r = (re_ * o.re_ + im_ * o.im_) / n;
    mpq_class i = (im_ * o.re_ - re_ * o.im_) / n;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
}

namespace {

std::string qstr(const mpq_class& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

} // namespace

std::string Rat::str() const {
    if (isZero()) return "0";
    if (im_ == 0) return qstr(re_);
    std::string ipart;
    if (im_ == 1)
        ipart = "i";
    else if (im_ == -1)
        ipart = "-i";
    else
        ipart = qstr(im_) + "*i";
    if (re_ == 0) return ipart;
    std::string out = "(" + qstr(re_);
    if (ipart[0] != '-')
        out += "+" + ipart;
    else
        out += ipart;
    return out + ")";
}

std::string GaussInt::str() const {
    if (isZero()) return "0";
    std::string ipart;
    if (im == 1)
        ipart = "i";
    else if (im == -1)
        ipart = "-i";
    else if (im != 0)
        ipart = std::to_string(im) + "i";
    if (re == 0) return ipart;
    std::string out = std::to_string(re);
    if (im == 0) return out;
    if (ipart[0] != '-') out += "+";
    return out + ipart;
}

} // namespace kur
