#include <set>

#include "doctest.h"
#include "qpoly/params.hpp"

using namespace qpoly;

namespace {

Quad qr(long n, long d = 1) {
    Rat q(n, d);
    q.canonicalize();
    return Quad(q);
}

// a/den + (b/den) sqrt(19)
Quad q19(long a, long b, long den = 1) {
    Rat ra(a, den), rb(b, den);
    ra.canonicalize();
    rb.canonicalize();
    return Quad(ra, rb, 19);
}

const char* kArray91 = "{12, 338/35, 39/25; 1, 312/175, 39/5}";
const char* kArray225 = "{24, 20, 36/11; 1, 30/11, 24}";
const char* kArray1470 = "{104, 70, 25; 1, 7, 80}";

}  // namespace

TEST_CASE("array parsing and printing round-trips") {
    KreinArray k = KreinArray::parse(kArray91);
    CHECK(k.classes() == 3);
    CHECK(k.str() == kArray91);
    CHECK(k.b[1] == qr(338, 35));
    CHECK_THROWS_AS(KreinArray::parse("{1, 2; 3"), ParseError);
    IntersectionArray ia = IntersectionArray::parse("{3, 2; 1, 1}");
    CHECK(ia.str() == "{3, 2; 1, 1}");
}

TEST_CASE("Petersen scheme from intersection array") {
    ParameterSet ps = from_intersection_array(IntersectionArray::parse("{3,2;1,1}"));
    CHECK(ps.n() == 10);
    CHECK(ps.multiplicity(0) == Quad(1));
    CHECK(ps.multiplicity(1) == Quad(5));
    CHECK(ps.multiplicity(2) == Quad(4));
    CHECK(ps.valency(1) == Quad(3));
    CHECK(ps.valency(2) == Quad(6));

    OrderingInfo info = classify(ps);
    CHECK(!info.ppoly_orderings.empty());
    CHECK(!info.qpoly_orderings.empty());
    CHECK(info.primitive);
}

TEST_CASE("intersection array with c1 != 1 is rejected") {
    IntersectionArray ia;
    ia.b = {4, 2};
    ia.c = {2, 4};
    CHECK_THROWS_AS(from_intersection_array(ia), InvalidParameters);
}

TEST_CASE("row 91,12 from Krein array") {
    ParameterSet ps = from_krein_array(KreinArray::parse(kArray91));
    CHECK(ps.n() == 91);
    CHECK(ps.multiplicity(1) == Quad(12));
    CHECK(ps.multiplicity(2) == Quad(65));
    CHECK(ps.multiplicity(3) == Quad(13));
    // Round trip through the q-cube.
    CHECK(ps.krein_array().str() == kArray91);
}

TEST_CASE("row 225,24 from Krein array") {
    ParameterSet ps = from_krein_array(KreinArray::parse(kArray225));
    CHECK(ps.n() == 225);
    CHECK(ps.p(1, 1, 3) == Quad(22));
    CHECK(ps.p(3, 3, 3) == Quad(3));
    OrderingInfo info = classify(ps);
    CHECK(info.qpoly_orderings.size() == 2);
    CHECK(info.primitive);
    CHECK(info.ppoly_orderings.empty());
}

TEST_CASE("row 1470,104 is formally self-dual") {
    ParameterSet ps = from_krein_array(KreinArray::parse(kArray1470));
    CHECK(ps.n() == 1470);
    CHECK(ps.p(1, 2, 1) == Quad(70));
    CHECK(ps.p(3, 2, 1) == Quad(250));
    OrderingInfo info = classify(ps);
    CHECK(info.formally_self_dual);
    CHECK(!info.ppoly_orderings.empty());
}

TEST_CASE("pentagon scheme from L1") {
    QMat l1{{Quad(0), Quad(2), Quad(0)}, {Quad(1), Quad(0), Quad(1)}, {Quad(0), Quad(1), Quad(1)}};
    ParameterSet ps = from_L1(l1, 5);
    Quad phi_p(Rat(-1, 2), Rat(1, 2), 5);
    Quad phi_m(Rat(-1, 2), Rat(-1, 2), 5);
    CHECK(ps.P()(1, 1) == phi_p);
    CHECK(ps.P()(1, 2) == phi_m);
    CHECK(ps.P()(2, 1) == phi_m);
    CHECK(ps.P()(2, 2) == phi_p);
    CHECK(ps.radicand() == 5);
}

TEST_CASE("L1 with repeated eigenvalue is rejected") {
    QMat l1{{Quad(0), Quad(2), Quad(0)}, {Quad(1), Quad(1), Quad(0)}, {Quad(0), Quad(0), Quad(2)}};
    CHECK_THROWS_AS(from_L1(l1, 6), InvalidParameters);
}

TEST_CASE("976-vertex irrational parameter set matches the displayed matrices") {
    QMat l1{{qr(0), qr(285), qr(0), qr(0)},
            {qr(1), qr(116), qr(60), qr(108)},
            {qr(0), qr(60), qr(90), qr(135)},
            {qr(0), qr(76), qr(95), qr(114)}};
    ParameterSet ps = from_L1(l1, 976);

    QMat P{{qr(1), qr(285), qr(285), qr(405)},
           {qr(1), q19(19, 8), q19(-38, 1), q19(18, -9)},
           {qr(1), qr(-3), qr(5), qr(-3)},
           {qr(1), q19(19, -8), q19(-38, -1), q19(18, 9)}};
    CHECK(ps.P() == P);

    QMat Q{{qr(1), qr(60), qr(855), qr(60)},
           {qr(1), q19(76, 32, 19), qr(-9), q19(76, -32, 19)},
           {qr(1), q19(-152, 4, 19), qr(15), q19(-152, -4, 19)},
           {qr(1), q19(8, -4, 3), qr(-19, 3), q19(8, 4, 3)}};
    CHECK(ps.Q() == Q);

    QMat L2{{qr(0), qr(0), qr(285), qr(0)},
            {qr(0), qr(60), qr(90), qr(135)},
            {qr(1), qr(90), qr(59), qr(135)},
            {qr(0), qr(95), qr(95), qr(95)}};
    QMat L3{{qr(0), qr(0), qr(0), qr(405)},
            {qr(0), qr(108), qr(135), qr(162)},
            {qr(0), qr(135), qr(135), qr(135)},
            {qr(1), qr(114), qr(95), qr(195)}};
    for (int k = 0; k <= 3; k++)
        for (int j = 0; j <= 3; j++) {
            CHECK(ps.p(2, j, k) == L2(k, j));
            CHECK(ps.p(3, j, k) == L3(k, j));
        }

    QMat L1s{{qr(0), qr(60), qr(0), qr(0)},
             {qr(1), q19(400, 32, 61), q19(3199, -32, 61), qr(0)},
             {qr(0), q19(12796, -128, 3477), q19(181184, 128, 3477), qr(80, 19)},
             {qr(0), qr(0), qr(60), qr(0)}};
    QMat L2s{{qr(0), qr(0), qr(855), qr(0)},
             {qr(0), q19(3199, -32, 61), q19(45296, 32, 61), qr(60)},
             {qr(1), q19(181184, 128, 3477), qr(137210, 183), q19(181184, -128, 3477)},
             {qr(0), qr(60), q19(45296, -32, 61), q19(3199, 32, 61)}};
    QMat L3s{{qr(0), qr(0), qr(0), qr(60)},
             {qr(0), qr(0), qr(60), qr(0)},
             {qr(0), qr(80, 19), q19(181184, -128, 3477), q19(12796, 128, 3477)},
             {qr(1), qr(0), q19(3199, 32, 61), q19(400, -32, 61)}};
    for (int k = 0; k <= 3; k++)
        for (int j = 0; j <= 3; j++) {
            CHECK(ps.q(1, j, k) == L1s(k, j));
            CHECK(ps.q(2, j, k) == L2s(k, j));
            CHECK(ps.q(3, j, k) == L3s(k, j));
        }

    CHECK(ps.radicand() == 19);
    CHECK(ps.is_qpoly_ordering({0, 1, 2, 3}));
}

TEST_CASE("zero patterns follow detected orderings") {
    for (const char* arr : {kArray91, kArray225, kArray1470}) {
        ParameterSet ps = from_krein_array(KreinArray::parse(arr));
        OrderingInfo info = classify(ps);
        int D = ps.classes();
        for (const auto& tau : info.qpoly_orderings) {
            for (int i = 1; i <= D; i++)
                for (int j = 1; j <= D; j++)
                    for (int k = 1; k <= D; k++)
                        if (k > i + j || k < std::abs(i - j))
                            CHECK(ps.q(tau[i], tau[j], tau[k]).is_zero());
        }
        for (const auto& sigma : info.ppoly_orderings) {
            for (int i = 1; i <= D; i++)
                for (int j = 1; j <= D; j++)
                    for (int k = 1; k <= D; k++)
                        if (k > i + j || k < std::abs(i - j))
                            CHECK(ps.p(sigma[i], sigma[j], sigma[k]).is_zero());
        }
        for (int i = 0; i <= D; i++)
            for (int k = 0; k <= D; k++) {
                Quad sp(0), sq(0);
                for (int j = 0; j <= D; j++) {
                    sp += ps.p(i, j, k);
                    sq += ps.q(i, j, k);
                }
                CHECK(sp == ps.valency(i));
                CHECK(sq == ps.multiplicity(i));
            }
    }
}

TEST_CASE("every primitive 3-class Q-polynomial set has a relation with 4 distinct eigenvalues") {
    for (const char* arr : {kArray91, kArray225, kArray1470}) {
        ParameterSet ps = from_krein_array(KreinArray::parse(arr));
        bool found = false;
        for (int i = 1; i <= 3; i++) {
            std::set<std::string> vals;
            for (int j = 0; j <= 3; j++) vals.insert(ps.P()(j, i).str());
            if (vals.size() == 4) found = true;
        }
        CHECK(found);
    }
}

TEST_CASE("DRG {53,40,28,16;1,4,10,28} is formally self-dual and Q-polynomial") {
    ParameterSet ps = from_intersection_array(IntersectionArray::parse("{53,40,28,16;1,4,10,28}"));
    CHECK(ps.n() == 1 + 53 + 530 + 1484 + 848);
    OrderingInfo info = classify(ps);
    CHECK(info.formally_self_dual);
    CHECK(ps.is_qpoly_ordering({0, 1, 2, 3, 4}));
}

TEST_CASE("2197,126 formally self-dual under relation reordering") {
    ParameterSet ps = from_krein_array(KreinArray::parse("{126, 90, 10; 1, 6, 105}"));
    OrderingInfo info = classify(ps);
    CHECK(info.formally_self_dual);
    std::vector<int> sigma{0, 2, 3, 1};
    bool witness = false;
    std::vector<int> tau{0, 1, 2, 3};
    do {
        bool ok = true;
        for (int i = 0; i <= 3 && ok; i++)
            for (int j = 0; j <= 3 && ok; j++)
                if (ps.P()(tau[j], sigma[i]) != ps.Q()(sigma[j], tau[i])) ok = false;
        if (ok) witness = true;
    } while (std::next_permutation(tau.begin() + 1, tau.end()));
    CHECK(witness);
}

TEST_CASE("quotient of a Q-bipartite 4-class scheme") {
    // (r,m) = (3,17) member of the two-parameter family: n = 578.
    KreinArray k = KreinArray::parse("{17, 16, 136/9, 9; 1, 17/9, 8, 17}");
    ParameterSet ps = from_krein_array(k);
    CHECK(ps.n() == 578);
    OrderingInfo info = classify(ps);
    CHECK(info.q_bipartite);
    KreinArray quot = quotient_krein(ps);
    ParameterSet psq = from_krein_array(quot);
    // SRG (m^2, (m-1) r^2, m + r^2 (r^2 - 3), r^2 (r^2 - 1)) = (289, 144, 71, 72).
    CHECK(psq.n() == 289);
    CHECK(psq.valency(1) == Quad(144));
    CHECK(psq.p(1, 1, 1) == Quad(71));
    CHECK(psq.p(1, 1, 2) == Quad(72));
    ParameterSet ps3 = from_krein_array(KreinArray::parse(kArray225));
    CHECK_THROWS_AS(quotient_krein(ps3), InvalidParameters);
}
