#include "qpoly/quadratic.hpp"

namespace qpoly {

Quad::Quad(Rat a, Rat b, Int d) : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
    a_.canonicalize();
    b_.canonicalize();
    if (d_ < 0) throw ArithmeticError("negative radicand " + d_.get_str());
    if (b_ == 0) {
        d_ = 0;
        return;
    }
    if (d_ == 0) {
        b_ = 0;
        return;
    }
    Int sq;
    d_ = squarefree_part(d_, sq);
    if (sq != 1) b_ *= sq;
    if (d_ == 1) {
        a_ += b_;
        b_ = 0;
        d_ = 0;
    }
}

const Rat& Quad::rational() const {
    if (!is_rational()) throw ArithmeticError("not rational: " + str());
    return a_;
}

Int Quad::common_radicand(const Quad& x, const Quad& y) {
    if (x.d_ == 0) return y.d_;
    if (y.d_ == 0 || x.d_ == y.d_) return x.d_;
    throw ArithmeticError("mixed radicands sqrt(" + x.d_.get_str() + ") and sqrt(" +
                          y.d_.get_str() + ")");
}

int Quad::sign() const {
    int sa = sgn(a_), sb = sgn(b_);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // Opposite signs: compare a^2 against b^2 d.
    int c = cmp(a_ * a_, b_ * b_ * Rat(d_));
    if (c == 0) return 0;  // impossible for squarefree d > 1, kept for safety
    return c > 0 ? sa : sb;
}

Quad& Quad::operator+=(const Quad& o) {
    Int d = common_radicand(*this, o);
    a_ += o.a_;
    b_ += o.b_;
    d_ = b_ == 0 ? Int(0) : d;
    return *this;
}

Quad& Quad::operator-=(const Quad& o) {
    Int d = common_radicand(*this, o);
    a_ -= o.a_;
    b_ -= o.b_;
    d_ = b_ == 0 ? Int(0) : d;
    return *this;
}

Quad& Quad::operator*=(const Quad& o) {
    Int d = common_radicand(*this, o);
    Rat a = a_ * o.a_ + b_ * o.b_ * Rat(d);
    Rat b = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(a);
    b_ = std::move(b);
    d_ = b_ == 0 ? Int(0) : d;
    return *this;
}

Quad& Quad::operator/=(const Quad& o) {
    if (o.is_zero()) throw ArithmeticError("division by zero");
    Int d = common_radicand(*this, o);
    // Rationalize: multiply numerator and denominator by the conjugate.
    Rat n = o.a_ * o.a_ - o.b_ * o.b_ * Rat(d);
    Rat a = (a_ * o.a_ - b_ * o.b_ * Rat(d)) / n;
    Rat b = (b_ * o.a_ - a_ * o.b_) / n;
    a_ = std::move(a);
    b_ = std::move(b);
    d_ = b_ == 0 ? Int(0) : d;
    return *this;
}

std::string Quad::str() const {
    if (is_rational()) return rat_str(a_);
    Int den = lcm(a_.get_den(), b_.get_den());
    Int na = a_.get_num() * (den / a_.get_den());
    Int nb = b_.get_num() * (den / b_.get_den());
    std::string surd = "√" + d_.get_str();
    std::string body;
    if (na != 0) body += na.get_str();
    if (nb == 1)
        body += na != 0 ? "+" : "";
    else if (nb == -1)
        body += "-";
    else
        body += (nb > 0 && na != 0 ? "+" : "") + nb.get_str();
    body += surd;
    if (den == 1) return body;
    return "(" + body + ")/" + den.get_str();
}

}  // namespace qpoly
