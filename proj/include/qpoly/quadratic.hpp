#pragma once

#include <string>

#include "qpoly/rational.hpp"

namespace qpoly {

/// An element a + b*sqrt(d) of Q or a real quadratic extension Q(sqrt(d)).
///
/// Canonical form: d is squarefree and nonnegative, d = 0 whenever b = 0,
/// and d is never 1 (sqrt(1) folds into the rational part). Equality is
/// structural, so equal values always compare equal regardless of how they
/// were produced.
class Quad {
public:
    Quad() : a_(0), b_(0), d_(0) {}
    Quad(int v) : a_(v), b_(0), d_(0) {}
    Quad(long v) : a_(v), b_(0), d_(0) {}
    Quad(const Int& v) : a_(v), b_(0), d_(0) {}
    Quad(const Rat& v) : a_(v), b_(0), d_(0) {}
    Quad(Rat a, Rat b, Int d);

    const Rat& rat_part() const { return a_; }
    const Rat& surd_part() const { return b_; }
    const Int& radicand() const { return d_; }

    bool is_rational() const { return b_ == 0; }
    bool is_integer() const { return b_ == 0 && qpoly::is_integer(a_); }
    bool is_zero() const { return a_ == 0 && b_ == 0; }

    /// The rational value; throws if a surd part is present.
    const Rat& rational() const;

    Quad conj() const { return raw(a_, -b_, d_); }
    /// a^2 - b^2 d, the product with the conjugate.
    Rat norm() const { return a_ * a_ - b_ * b_ * Rat(d_); }

    int sign() const;
    Quad abs() const { return sign() < 0 ? -*this : *this; }

    Quad operator-() const { return raw(-a_, -b_, d_); }
    Quad& operator+=(const Quad& o);
    Quad& operator-=(const Quad& o);
    Quad& operator*=(const Quad& o);
    Quad& operator/=(const Quad& o);

    friend Quad operator+(Quad x, const Quad& y) { return x += y; }
    friend Quad operator-(Quad x, const Quad& y) { return x -= y; }
    friend Quad operator*(Quad x, const Quad& y) { return x *= y; }
    friend Quad operator/(Quad x, const Quad& y) { return x /= y; }

    friend bool operator==(const Quad& x, const Quad& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && x.d_ == y.d_;
    }
    friend bool operator!=(const Quad& x, const Quad& y) { return !(x == y); }
    friend bool operator<(const Quad& x, const Quad& y) { return (x - y).sign() < 0; }
    friend bool operator>(const Quad& x, const Quad& y) { return y < x; }
    friend bool operator<=(const Quad& x, const Quad& y) { return !(y < x); }
    friend bool operator>=(const Quad& x, const Quad& y) { return !(x < y); }

    /// Exact rendering: "65/12", "19+8√19", "(3199-32√19)/61".
    std::string str() const;

private:
    Rat a_, b_;
    Int d_;

    // Skips canonicalization; d must already be squarefree and consistent.
    static Quad raw(Rat a, Rat b, Int d) {
        Quad q;
        q.a_ = std::move(a);
        q.b_ = std::move(b);
        q.d_ = q.b_ == 0 ? Int(0) : std::move(d);
        return q;
    }

    // Checks the two operands live in one field; returns the common radicand.
    static Int common_radicand(const Quad& x, const Quad& y);
};

inline Quad sqrt_of(const Int& d) { return Quad(Rat(0), Rat(1), d); }

}  // namespace qpoly
