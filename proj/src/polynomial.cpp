#include "qpoly/polynomial.hpp"

#include <algorithm>

namespace qpoly {

namespace {

// Divides p (monic not required) by x - r, asserting zero remainder.
std::vector<Int> deflate_root(const std::vector<Int>& p, const Int& r) {
    std::size_t n = p.size() - 1;
    std::vector<Int> q(n);
    Int carry = p[n];
    for (std::size_t j = n; j-- > 0;) {
        q[j] = carry;
        carry = p[j] + carry * r;
    }
    if (carry != 0) throw ArithmeticError("deflation by non-root");
    return q;
}

Int eval(const std::vector<Int>& p, const Int& x) {
    Int v = 0;
    for (std::size_t j = p.size(); j-- > 0;) v = v * x + p[j];
    return v;
}

// Divides monic p by monic x^2 + u x + v; returns quotient or nothing if the
// remainder is nonzero.
std::optional<std::vector<Int>> divide_quadratic(const std::vector<Int>& p, const Int& u,
                                                 const Int& v) {
    std::size_t n = p.size() - 1;
    std::vector<Int> rem = p;
    std::vector<Int> q(n - 1);
    for (std::size_t j = n; j >= 2; j--) {
        Int c = rem[j];
        q[j - 2] = c;
        if (c == 0) continue;
        rem[j] = 0;
        rem[j - 1] -= c * u;
        rem[j - 2] -= c * v;
    }
    if (rem[0] != 0 || rem[1] != 0) return std::nullopt;
    return q;
}

// Integer roots of a (not necessarily monic) integer polynomial.
std::vector<Int> integer_roots(const std::vector<Int>& p) {
    std::vector<Int> roots;
    std::vector<Int> w = p;
    while (w.size() > 1 && w[0] == 0) {
        roots.push_back(0);
        w.erase(w.begin());
    }
    if (w.size() <= 1) return roots;
    for (const Int& d : divisors(w[0])) {
        for (const Int& r : {d, Int(-d)}) {
            if (eval(w, r) == 0 && std::find(roots.begin(), roots.end(), r) == roots.end())
                roots.push_back(r);
        }
    }
    return roots;
}

// Finds a monic integer quadratic factor x^2 + u x + v of monic p, if any.
std::optional<std::pair<Int, Int>> find_quadratic_factor(const std::vector<Int>& p) {
    std::size_t n = p.size() - 1;
    if (n < 2) return std::nullopt;
    if (p[0] == 0) return std::nullopt;  // zero roots are deflated before this
    for (const Int& dv : divisors(p[0])) {
        for (const Int& v : {dv, Int(-dv)}) {
            // Remainder of p mod (x^2 + u x + v) as two polynomials in u;
            // cheaper: for each v, candidate u must make x^2+ux+v divide p.
            // The resultant approach: u is a root of Res_x(p, x^2+ux+v) seen
            // as a polynomial in u. Build it by symbolic division where the
            // coefficients are polynomials in u.
            // Degrees stay <= n, exact integer arithmetic.
            // rem starts as p with coefficients constant in u.
            std::vector<std::vector<Int>> rem(p.size());
            for (std::size_t j = 0; j < p.size(); j++) rem[j] = {p[j]};
            auto mul_u = [](const std::vector<Int>& a) {
                std::vector<Int> r(a.size() + 1, Int(0));
                for (std::size_t i = 0; i < a.size(); i++) r[i + 1] = a[i];
                return r;
            };
            auto sub = [](std::vector<Int>& a, const std::vector<Int>& b) {
                if (a.size() < b.size()) a.resize(b.size(), Int(0));
                for (std::size_t i = 0; i < b.size(); i++) a[i] -= b[i];
            };
            auto scale = [](const std::vector<Int>& a, const Int& c) {
                std::vector<Int> r = a;
                for (auto& x : r) x *= c;
                return r;
            };
            for (std::size_t j = n; j >= 2; j--) {
                std::vector<Int> c = rem[j];
                bool zero = std::all_of(c.begin(), c.end(), [](const Int& x) { return x == 0; });
                if (zero) continue;
                rem[j] = {Int(0)};
                sub(rem[j - 1], mul_u(c));
                sub(rem[j - 2], scale(c, v));
            }
            // Need a common integer root u of rem[0](u) and rem[1](u).
            auto nonzero = [](const std::vector<Int>& a) {
                return std::any_of(a.begin(), a.end(), [](const Int& x) { return x != 0; });
            };
            std::vector<Int> candidates;
            if (nonzero(rem[1]))
                candidates = integer_roots(rem[1]);
            else if (nonzero(rem[0]))
                candidates = integer_roots(rem[0]);
            else
                throw ArithmeticError("degenerate quadratic remainder");  // impossible for monic p
            for (const Int& u : candidates) {
                if (eval(rem[0], u) == 0 && eval(rem[1], u) == 0) return std::make_pair(u, v);
            }
        }
    }
    return std::nullopt;
}

std::vector<Rat> poly_mul(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    std::vector<Rat> r(a.size() + b.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.size(); i++)
        for (std::size_t j = 0; j < b.size(); j++) r[i + j] += a[i] * b[j];
    return r;
}

}  // namespace

int PolyFactorization::degree() const {
    int d = residual_degree;
    for (const auto& l : linear_roots) d += l.multiplicity;
    for (const auto& q : irreducible_quadratics) d += 2 * q.multiplicity;
    return d;
}

std::vector<Quad> PolyFactorization::roots() const {
    if (residual_degree > 0) throw ArithmeticError("roots of unsplit polynomial");
    std::vector<Quad> out;
    for (const auto& l : linear_roots)
        for (int i = 0; i < l.multiplicity; i++) out.push_back(l.root);
    for (const auto& f : irreducible_quadratics) {
        // x^2 + p x + q = 0: x = -p/2 +- sqrt(p^2 - 4q)/2.
        Rat disc = f.p * f.p - 4 * f.q;
        if (disc <= 0) throw ArithmeticError("complex eigenvalue pair");
        Int dnum = disc.get_num() * disc.get_den();  // disc = dnum / den^2
        Quad s = sqrt_of(dnum) / Quad(Rat(disc.get_den()));
        for (int i = 0; i < f.multiplicity; i++) {
            out.push_back((Quad(-f.p) + s) / Quad(2));
            out.push_back((Quad(-f.p) - s) / Quad(2));
        }
    }
    return out;
}

bool PolyFactorization::splits_simply() const {
    if (residual_degree > 0) return false;
    for (const auto& l : linear_roots)
        if (l.multiplicity > 1) return false;
    for (const auto& q : irreducible_quadratics)
        if (q.multiplicity > 1) return false;
    return true;
}

PolyFactorization factor_monic(const std::vector<Rat>& coeffs) {
    if (coeffs.empty() || coeffs.back() != 1)
        throw InvalidParameters("factor_monic expects a monic polynomial");
    std::size_t n = coeffs.size() - 1;
    PolyFactorization out;
    if (n == 0) return out;

    // Substitute x = y / s with s = lcm of denominators: monic integer in y.
    Int s = 1;
    for (const auto& c : coeffs) s = lcm(s, c.get_den());
    std::vector<Int> w(n + 1);
    Int pw = 1;
    for (std::size_t j = n + 1; j-- > 0;) {
        Rat scaled = coeffs[j] * Rat(pw);
        w[j] = to_int(scaled);
        pw *= s;
    }

    auto record_root = [&](const Int& y_root) {
        Rat x_root(y_root, s);
        x_root.canonicalize();
        for (auto& l : out.linear_roots)
            if (l.root == Quad(x_root)) {
                l.multiplicity++;
                return;
            }
        out.linear_roots.push_back({Quad(x_root), 1});
    };
    auto record_quadratic = [&](const Int& u, const Int& v) {
        Rat px(u, s), qx(v, s * s);
        px.canonicalize();
        qx.canonicalize();
        for (auto& f : out.irreducible_quadratics)
            if (f.p == px && f.q == qx) {
                f.multiplicity++;
                return;
            }
        out.irreducible_quadratics.push_back({px, qx, 1});
    };

    // Strip zero roots, then repeatedly deflate integer roots.
    bool progress = true;
    while (progress && w.size() > 1) {
        progress = false;
        while (w.size() > 1 && w[0] == 0) {
            record_root(0);
            w.erase(w.begin());
            progress = true;
        }
        if (w.size() <= 1) break;
        for (const Int& d : divisors(w[0])) {
            for (const Int& r : {d, Int(-d)}) {
                while (w.size() > 1 && eval(w, r) == 0) {
                    w = deflate_root(w, r);
                    record_root(r);
                    progress = true;
                }
            }
            if (w.size() <= 1 || w[0] == 0) break;
        }
    }

    // No rational roots remain; peel off integer quadratic factors.
    while (w.size() - 1 >= 2) {
        if (w.size() - 1 == 2) {
            record_quadratic(w[1], w[0]);
            w = {Int(1)};
            break;
        }
        if (w.size() - 1 == 3) break;  // cubic with no rational root: irreducible
        auto f = find_quadratic_factor(w);
        if (!f) break;
        auto q = divide_quadratic(w, f->first, f->second);
        if (!q) throw ArithmeticError("quadratic factor division failed");
        record_quadratic(f->first, f->second);
        w = *q;
    }

    if (w.size() > 1) {
        // Back-substitute y = s x: coefficient of x^j is w[j] / s^(m-j).
        std::size_t m = w.size() - 1;
        out.residual_degree = static_cast<int>(m);
        out.residual.resize(w.size());
        Int sp = 1;
        for (std::size_t j = w.size(); j-- > 0;) {
            out.residual[j] = Rat(w[j]) / Rat(sp);
            out.residual[j].canonicalize();
            sp *= s;
        }
    }
    return out;
}

PolyFactorization charpoly_factor(const QMat& m) {
    std::vector<Quad> cs = charpoly(m);
    std::vector<Rat> rs(cs.size());
    for (std::size_t i = 0; i < cs.size(); i++) {
        if (!cs[i].is_rational())
            throw InvalidParameters("charpoly_factor requires a rational matrix");
        rs[i] = cs[i].rational();
    }
    return factor_monic(rs);
}

std::vector<Rat> expand_factorization(const PolyFactorization& f) {
    std::vector<Rat> p{Rat(1)};
    for (const auto& l : f.linear_roots) {
        Rat r = l.root.rational();
        for (int i = 0; i < l.multiplicity; i++) p = poly_mul(p, {-r, Rat(1)});
    }
    for (const auto& q : f.irreducible_quadratics)
        for (int i = 0; i < q.multiplicity; i++) p = poly_mul(p, {q.q, q.p, Rat(1)});
    if (f.residual_degree > 0) p = poly_mul(p, f.residual);
    return p;
}

}  // namespace qpoly
