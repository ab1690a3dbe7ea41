#pragma once

#include <optional>
#include <vector>

#include "qpoly/matrix.hpp"
#include "qpoly/polynomial.hpp"

namespace qpoly {

/// Krein array {b0*, ..., b(D-1)*; c1*, ..., cD*}.
struct KreinArray {
    std::vector<Quad> b;  // b0* ... b(D-1)*
    std::vector<Quad> c;  // c1* ... cD*

    int classes() const { return static_cast<int>(b.size()); }
    Quad a(int i) const;  // a_i* = b0* - b_i* - c_i*, with b_D* = c_0* = 0

    bool well_formed() const;  // entries > 0 and a_i* >= 0
    bool rational() const;

    std::string str() const;
    static KreinArray parse(const std::string& s);

    friend bool operator==(const KreinArray& x, const KreinArray& y) {
        return x.b == y.b && x.c == y.c;
    }
    friend bool operator<(const KreinArray& x, const KreinArray& y);
};

/// Intersection array {b0, ..., b(D-1); c1, ..., cD} of a distance-regular graph.
struct IntersectionArray {
    std::vector<Int> b;
    std::vector<Int> c;

    int classes() const { return static_cast<int>(b.size()); }
    Int a(int i) const;

    bool well_formed() const;
    std::string str() const;
    static IntersectionArray parse(const std::string& s);

    friend bool operator==(const IntersectionArray& x, const IntersectionArray& y) {
        return x.b == y.b && x.c == y.c;
    }
};

/// Detected orderings and imprimitivity flags of a parameter set.
struct OrderingInfo {
    // Permutations of {0..D} fixing 0; entry i is the original index of the
    // relation (resp. eigenspace) placed at position i.
    std::vector<std::vector<int>> ppoly_orderings;
    std::vector<std::vector<int>> qpoly_orderings;
    bool primitive = false;
    bool q_bipartite = false;
    bool q_antipodal = false;
    bool formally_self_dual = false;
    // Witness for formal self-duality: relation and eigenspace permutations.
    std::vector<int> fsd_relations, fsd_eigenspaces;
};

/// Complete parameter set of a symmetric association scheme: eigenmatrices,
/// both parameter cubes, valencies and multiplicities. Immutable value.
class ParameterSet {
public:
    ParameterSet(QMat P, QMat Q, Int n);

    int classes() const { return D_; }
    const Int& n() const { return n_; }
    const QMat& P() const { return P_; }
    const QMat& Q() const { return Q_; }

    const Quad& p(int i, int j, int k) const { return p_[idx(i, j, k)]; }
    const Quad& q(int i, int j, int k) const { return q_[idx(i, j, k)]; }

    const Quad& valency(int i) const { return P_(0, i); }
    const Quad& multiplicity(int j) const { return Q_(0, j); }

    /// Common radicand of the splitting field (0 when rational).
    const Int& radicand() const { return radicand_; }

    /// Krein array read off under an eigenspace ordering (identity by default).
    KreinArray krein_array(const std::vector<int>& tau = {}) const;
    /// Intersection array under a relation ordering.
    IntersectionArray intersection_array(const std::vector<int>& sigma = {}) const;

    /// True when L1* (resp. L1) under the given ordering is tridiagonal with
    /// nonzero off-diagonals.
    bool is_qpoly_ordering(const std::vector<int>& tau) const;
    bool is_ppoly_ordering(const std::vector<int>& sigma) const;

private:
    int D_;
    Int n_;
    QMat P_, Q_;
    std::vector<Quad> p_, q_;
    Int radicand_;

    std::size_t idx(int i, int j, int k) const {
        return (static_cast<std::size_t>(i) * (D_ + 1) + j) * (D_ + 1) + k;
    }
    void validate() const;
};

/// Builds the parameter set determined by a first intersection matrix
/// L1[k][j] = p_{1j}^k with D+1 distinct eigenvalues; eigenspaces are ordered
/// by decreasing eigenvalue (the natural ordering).
ParameterSet from_L1(const QMat& L1, const Int& n);

/// Builds the parameter set of a Q-polynomial scheme from its (rational)
/// Krein array; relations get the natural ordering (decreasing dual
/// eigenvalue).
ParameterSet from_krein_array(const KreinArray& k);

/// Dual construction from an intersection array (distance-regular graph).
ParameterSet from_intersection_array(const IntersectionArray& a);

/// Enumerates every P-/Q-polynomial ordering and computes imprimitivity and
/// duality flags.
OrderingInfo classify(const ParameterSet& ps);

/// Krein array of the 2-class quotient of a Q-bipartite scheme with D in
/// {4,5}; requires the identity ordering to be Q-polynomial and Q-bipartite.
KreinArray quotient_krein(const ParameterSet& ps);

}  // namespace qpoly
