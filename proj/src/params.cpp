#include "qpoly/params.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace qpoly {

namespace {

std::vector<Quad> parse_quad_list(const std::string& s, std::size_t& pos, char terminator) {
    std::vector<Quad> out;
    while (true) {
        out.emplace_back(parse_rat(s, pos));
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) pos++;
        if (pos >= s.size()) throw ParseError("unterminated array", pos);
        if (s[pos] == ',') {
            pos++;
            continue;
        }
        if (s[pos] == terminator) {
            pos++;
            return out;
        }
        throw ParseError("expected ',' or terminator", pos);
    }
}

std::string join_quads(const std::vector<Quad>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); i++) {
        if (i) s += ", ";
        s += v[i].str();
    }
    return s;
}

// Eigenvalues of a rational matrix, all simple and in one quadratic field,
// sorted in decreasing order. Throws otherwise.
std::vector<Quad> simple_spectrum_desc(const QMat& m, const std::string& what) {
    PolyFactorization f = charpoly_factor(m);
    if (f.residual_degree >= 3)
        throw InvalidParameters(what + ": irreducible factor of degree " +
                                std::to_string(f.residual_degree) +
                                " in characteristic polynomial");
    if (!f.splits_simply()) throw InvalidParameters(what + ": repeated eigenvalue");
    std::vector<Quad> roots = f.roots();
    Int d = 0;
    for (const Quad& r : roots) {
        if (r.radicand() == 0) continue;
        if (d == 0)
            d = r.radicand();
        else if (d != r.radicand())
            throw InvalidParameters(what + ": splitting field degree exceeds 2");
    }
    std::sort(roots.begin(), roots.end(), [](const Quad& a, const Quad& b) { return b < a; });
    return roots;
}

void for_each_ordering(int D, const std::function<void(const std::vector<int>&)>& f) {
    std::vector<int> perm(D + 1);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        f(perm);
    } while (std::next_permutation(perm.begin() + 1, perm.end()));
}

}  // namespace

Quad KreinArray::a(int i) const {
    int D = classes();
    Quad bi = i < D ? b[i] : Quad(0);
    Quad ci = i >= 1 ? c[i - 1] : Quad(0);
    return b[0] - bi - ci;
}

bool KreinArray::well_formed() const {
    int D = classes();
    if (D < 1 || static_cast<int>(c.size()) != D) return false;
    for (const Quad& x : b)
        if (x.sign() <= 0) return false;
    for (const Quad& x : c)
        if (x.sign() <= 0) return false;
    for (int i = 0; i <= D; i++)
        if (a(i).sign() < 0) return false;
    return true;
}

bool KreinArray::rational() const {
    for (const Quad& x : b)
        if (!x.is_rational()) return false;
    for (const Quad& x : c)
        if (!x.is_rational()) return false;
    return true;
}

std::string KreinArray::str() const {
    return "{" + join_quads(b) + "; " + join_quads(c) + "}";
}

KreinArray KreinArray::parse(const std::string& s) {
    std::size_t pos = 0;
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) pos++;
    if (pos >= s.size() || s[pos] != '{') throw ParseError("expected '{'", pos);
    pos++;
    KreinArray k;
    k.b = parse_quad_list(s, pos, ';');
    k.c = parse_quad_list(s, pos, '}');
    if (k.b.size() != k.c.size()) throw ParseError("need equally many b* and c* entries", pos);
    return k;
}

bool operator<(const KreinArray& x, const KreinArray& y) {
    if (x.b.size() != y.b.size()) return x.b.size() < y.b.size();
    for (std::size_t i = 0; i < x.b.size(); i++)
        if (x.b[i] != y.b[i]) return x.b[i] < y.b[i];
    for (std::size_t i = 0; i < x.c.size(); i++)
        if (x.c[i] != y.c[i]) return x.c[i] < y.c[i];
    return false;
}

Int IntersectionArray::a(int i) const {
    int D = classes();
    Int bi = i < D ? b[i] : Int(0);
    Int ci = i >= 1 ? c[i - 1] : Int(0);
    return b[0] - bi - ci;
}

bool IntersectionArray::well_formed() const {
    int D = classes();
    if (D < 1 || static_cast<int>(c.size()) != D) return false;
    if (c[0] != 1) return false;
    for (const Int& x : b)
        if (x <= 0) return false;
    for (const Int& x : c)
        if (x <= 0) return false;
    for (int i = 0; i <= D; i++)
        if (a(i) < 0) return false;
    return true;
}

std::string IntersectionArray::str() const {
    std::string s = "{";
    for (std::size_t i = 0; i < b.size(); i++) s += (i ? ", " : "") + b[i].get_str();
    s += "; ";
    for (std::size_t i = 0; i < c.size(); i++) s += (i ? ", " : "") + c[i].get_str();
    return s + "}";
}

IntersectionArray IntersectionArray::parse(const std::string& s) {
    KreinArray k = KreinArray::parse(s);
    IntersectionArray a;
    for (const Quad& x : k.b) a.b.push_back(to_int(x.rational()));
    for (const Quad& x : k.c) a.c.push_back(to_int(x.rational()));
    return a;
}

ParameterSet::ParameterSet(QMat P, QMat Q, Int n)
    : D_(static_cast<int>(P.rows()) - 1), n_(std::move(n)), P_(std::move(P)), Q_(std::move(Q)) {
    std::size_t m = D_ + 1;
    if (P_.rows() != m || P_.cols() != m || Q_.rows() != m || Q_.cols() != m)
        throw InvalidParameters("eigenmatrices must be square of equal size");

    QMat Pinv = inverse(P_), Qinv = inverse(Q_);
    p_.resize(m * m * m);
    q_.resize(m * m * m);
    for (std::size_t i = 0; i < m; i++) {
        QMat dp(m, m), dq(m, m);
        for (std::size_t j = 0; j < m; j++) {
            dp(j, j) = P_(j, i);
            dq(j, j) = Q_(j, i);
        }
        QMat Li = Pinv * dp * P_;
        QMat Lis = Qinv * dq * Q_;
        for (std::size_t k = 0; k < m; k++)
            for (std::size_t j = 0; j < m; j++) {
                p_[idx(i, j, k)] = Li(k, j);
                q_[idx(i, j, k)] = Lis(k, j);
            }
    }
    radicand_ = matrix_radicand(P_);
    validate();
}

void ParameterSet::validate() const {
    std::size_t m = D_ + 1;
    QMat prod = P_ * Q_;
    QMat nI = Quad(Rat(n_)) * QMat::identity(m);
    if (!(prod == nI)) throw InvalidParameters("P*Q != n*I");
    for (std::size_t j = 0; j < m; j++) {
        if (P_(j, 0) != Quad(1) || Q_(j, 0) != Quad(1))
            throw InvalidParameters("first column of P and Q must be all-ones");
    }
    Quad sum_val(0), sum_mult(0);
    for (int i = 0; i <= D_; i++) {
        sum_val += P_(0, i);
        sum_mult += Q_(0, i);
        if (p(i, i, 0) != P_(0, i)) throw InvalidParameters("valency mismatch: p_ii^0 != P_0i");
        if (q(i, i, 0) != Q_(0, i))
            throw InvalidParameters("multiplicity mismatch: q_ii^0 != Q_0i");
    }
    if (sum_val != Quad(Rat(n_)) || sum_mult != Quad(Rat(n_)))
        throw InvalidParameters("valencies and multiplicities must sum to n");
    for (int i = 0; i <= D_; i++)
        for (int j = 0; j <= D_; j++)
            for (int k = 0; k <= D_; k++) {
                if (p(i, j, k) != p(j, i, k) || q(i, j, k) != q(j, i, k))
                    throw InvalidParameters("parameter cube not symmetric in the first two indices");
                if (valency(k) * p(i, j, k) != valency(i) * p(k, j, i))
                    throw InvalidParameters("counting identity fails for p");
                if (multiplicity(k) * q(i, j, k) != multiplicity(i) * q(k, j, i))
                    throw InvalidParameters("counting identity fails for q");
            }
}

KreinArray ParameterSet::krein_array(const std::vector<int>& tau_in) const {
    std::vector<int> tau = tau_in;
    if (tau.empty()) {
        tau.resize(D_ + 1);
        std::iota(tau.begin(), tau.end(), 0);
    }
    KreinArray k;
    for (int i = 0; i < D_; i++) k.b.push_back(q(tau[1], tau[i + 1], tau[i]));
    for (int i = 1; i <= D_; i++) k.c.push_back(q(tau[1], tau[i - 1], tau[i]));
    return k;
}

IntersectionArray ParameterSet::intersection_array(const std::vector<int>& sigma_in) const {
    std::vector<int> sigma = sigma_in;
    if (sigma.empty()) {
        sigma.resize(D_ + 1);
        std::iota(sigma.begin(), sigma.end(), 0);
    }
    IntersectionArray a;
    for (int i = 0; i < D_; i++)
        a.b.push_back(to_int(p(sigma[1], sigma[i + 1], sigma[i]).rational()));
    for (int i = 1; i <= D_; i++)
        a.c.push_back(to_int(p(sigma[1], sigma[i - 1], sigma[i]).rational()));
    return a;
}

bool ParameterSet::is_qpoly_ordering(const std::vector<int>& tau) const {
    for (int k = 0; k <= D_; k++)
        for (int j = 0; j <= D_; j++) {
            const Quad& v = q(tau[1], tau[j], tau[k]);
            int dist = j > k ? j - k : k - j;
            if (dist > 1 && !v.is_zero()) return false;
            if (dist == 1 && v.is_zero()) return false;
        }
    return true;
}

bool ParameterSet::is_ppoly_ordering(const std::vector<int>& sigma) const {
    for (int k = 0; k <= D_; k++)
        for (int j = 0; j <= D_; j++) {
            const Quad& v = p(sigma[1], sigma[j], sigma[k]);
            int dist = j > k ? j - k : k - j;
            if (dist > 1 && !v.is_zero()) return false;
            if (dist == 1 && v.is_zero()) return false;
        }
    return true;
}

ParameterSet from_L1(const QMat& L1, const Int& n) {
    std::size_t m = L1.rows();
    if (m != L1.cols() || m < 2) throw InvalidParameters("L1 must be square, at least 2x2");
    for (std::size_t i = 0; i < m; i++)
        for (std::size_t j = 0; j < m; j++)
            if (!L1(i, j).is_rational()) throw InvalidParameters("L1 must have rational entries");
    Quad n1 = L1(0, 1);
    if (L1(0, 0) != Quad(0) || n1.sign() <= 0)
        throw InvalidParameters("L1 row 0 must be (0, n1, 0, ...)");
    for (std::size_t j = 2; j < m; j++)
        if (L1(0, j) != Quad(0)) throw InvalidParameters("L1 row 0 must be (0, n1, 0, ...)");
    for (std::size_t k = 0; k < m; k++) {
        if (L1(k, 0) != (k == 1 ? Quad(1) : Quad(0)))
            throw InvalidParameters("L1 column 0 must be e_1");
        Quad sum(0);
        for (std::size_t j = 0; j < m; j++) sum += L1(k, j);
        if (sum != n1) throw InvalidParameters("L1 must have constant row sums");
    }
    std::vector<Quad> eigs = simple_spectrum_desc(L1, "L1");
    if (eigs.front() != n1) throw InvalidParameters("largest eigenvalue of L1 must be the valency");
    QMat P = left_eigenvectors_normalized(L1, eigs);
    QMat Q = Quad(Rat(n)) * inverse(P);
    return ParameterSet(std::move(P), std::move(Q), n);
}

ParameterSet from_krein_array(const KreinArray& k) {
    int D = k.classes();
    if (!k.well_formed()) throw InvalidParameters("Krein array not well-formed: " + k.str());
    if (!k.rational())
        throw InvalidParameters("only rational Krein arrays are supported (degree-2 dual data)");
    std::vector<Quad> mult(D + 1);
    mult[0] = Quad(1);
    for (int j = 0; j < D; j++) {
        mult[j + 1] = mult[j] * k.b[j] / k.c[j];
        if (mult[j + 1].sign() <= 0) throw InvalidParameters("nonpositive multiplicity in " + k.str());
    }
    Quad total(0);
    for (const Quad& v : mult) total += v;
    if (!total.is_integer()) throw InvalidParameters("vertex count not integral for " + k.str());
    Int n = to_int(total.rational());

    QMat L1s(D + 1, D + 1);
    for (int i = 0; i <= D; i++) {
        L1s(i, i) = k.a(i);
        if (i < D) L1s(i, i + 1) = k.b[i];
        if (i > 0) L1s(i, i - 1) = k.c[i - 1];
    }
    std::vector<Quad> eigs = simple_spectrum_desc(L1s, "L1*");
    if (eigs.front() != k.b[0]) throw InvalidParameters("largest dual eigenvalue must equal b0*");
    QMat Q = left_eigenvectors_normalized(L1s, eigs);
    QMat P = Quad(Rat(n)) * inverse(Q);
    return ParameterSet(std::move(P), std::move(Q), n);
}

ParameterSet from_intersection_array(const IntersectionArray& a) {
    int D = a.classes();
    if (static_cast<int>(a.c.size()) != D || D < 1)
        throw InvalidParameters("intersection array needs D entries on both sides");
    if (a.c[0] != 1) throw InvalidParameters("c1 must be 1 in " + a.str());
    if (!a.well_formed()) throw InvalidParameters("intersection array not well-formed: " + a.str());
    std::vector<Rat> val(D + 1);
    val[0] = 1;
    for (int j = 0; j < D; j++) {
        val[j + 1] = val[j] * Rat(a.b[j]) / Rat(a.c[j]);
        if (val[j + 1] <= 0) throw InvalidParameters("nonpositive valency in " + a.str());
    }
    Rat total(0);
    for (const Rat& v : val) total += v;
    if (!is_integer(total)) throw InvalidParameters("vertex count not integral for " + a.str());

    QMat L1(D + 1, D + 1);
    for (int i = 0; i <= D; i++) {
        L1(i, i) = Quad(a.a(i));
        if (i < D) L1(i, i + 1) = Quad(a.b[i]);
        if (i > 0) L1(i, i - 1) = Quad(a.c[i - 1]);
    }
    return from_L1(L1, to_int(total));
}

OrderingInfo classify(const ParameterSet& ps) {
    int D = ps.classes();
    OrderingInfo info;

    for_each_ordering(D, [&](const std::vector<int>& perm) {
        if (ps.is_ppoly_ordering(perm)) info.ppoly_orderings.push_back(perm);
        if (ps.is_qpoly_ordering(perm)) info.qpoly_orderings.push_back(perm);
    });

    // Primitivity: every relation graph connected, read off the nonzero
    // pattern of the intersection numbers.
    info.primitive = true;
    for (int i = 1; i <= D && info.primitive; i++) {
        std::vector<bool> seen(D + 1, false);
        seen[0] = true;
        bool grew = true;
        while (grew) {
            grew = false;
            for (int k = 0; k <= D; k++) {
                if (!seen[k]) continue;
                for (int j = 0; j <= D; j++) {
                    if (!seen[j] && !ps.p(i, k, j).is_zero()) {
                        seen[j] = true;
                        grew = true;
                    }
                }
            }
        }
        for (int j = 0; j <= D; j++)
            if (!seen[j]) info.primitive = false;
    }

    for (const auto& tau : info.qpoly_orderings) {
        KreinArray k = ps.krein_array(tau);
        bool bip = true;
        for (int i = 0; i <= D; i++)
            if (!k.a(i).is_zero()) bip = false;
        if (bip) info.q_bipartite = true;
        bool antip = true;
        for (int i = 0; i <= D; i++) {
            if (i == D / 2) continue;
            Quad bi = i < D ? k.b[i] : Quad(0);
            Quad cDi = (D - i) >= 1 ? k.c[D - i - 1] : Quad(0);
            if (bi != cDi) antip = false;
        }
        if (antip) info.q_antipodal = true;
    }

    for_each_ordering(D, [&](const std::vector<int>& sigma) {
        if (info.formally_self_dual) return;
        for_each_ordering(D, [&](const std::vector<int>& tau) {
            if (info.formally_self_dual) return;
            for (int i = 0; i <= D; i++)
                for (int j = 0; j <= D; j++)
                    if (ps.P()(tau[j], sigma[i]) != ps.Q()(sigma[j], tau[i])) return;
            info.formally_self_dual = true;
            info.fsd_relations = sigma;
            info.fsd_eigenspaces = tau;
        });
    });

    return info;
}

KreinArray quotient_krein(const ParameterSet& ps) {
    int D = ps.classes();
    if (D != 4 && D != 5) throw InvalidParameters("quotient needs a 4- or 5-class scheme");
    std::vector<int> id(D + 1);
    std::iota(id.begin(), id.end(), 0);
    if (!ps.is_qpoly_ordering(id))
        throw InvalidParameters("parameter set is not Q-polynomial in the given ordering");
    KreinArray k = ps.krein_array();
    for (int i = 0; i <= D; i++)
        if (!k.a(i).is_zero()) throw InvalidParameters("parameter set is not Q-bipartite");
    Quad mu = ps.q(1, 1, 2);
    KreinArray quot;
    quot.b = {k.b[0] * k.b[1] / mu, k.b[2] * k.b[3] / mu};
    quot.c = {k.c[0] * k.c[1] / mu, k.c[2] * k.c[3] / mu};
    return quot;
}

}  // namespace qpoly
