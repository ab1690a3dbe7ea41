#include "qpoly/rational.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace qpoly {

namespace {

// Pollard's rho with Brent cycle detection; n odd composite, not a prime power
// small enough for the trial division below.
Int pollard_rho(const Int& n) {
    if (n % 2 == 0) return 2;
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(0x9e3779b9UL);
    while (true) {
        Int x = rng.get_z_range(n - 2) + 2;
        Int c = rng.get_z_range(n - 1) + 1;
        Int y = x, d = 1;
        while (d == 1) {
            x = (x * x + c) % n;
            y = (y * y + c) % n;
            y = (y * y + c) % n;
            d = gcd(x > y ? x - y : y - x, n);
        }
        if (d != n) return d;
    }
}

void factor_into(const Int& n, std::map<Int, unsigned>& out) {
    if (n == 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 32)) {
        out[n]++;
        return;
    }
    Int d = pollard_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

std::map<Int, unsigned> factorize(Int n) {
    std::map<Int, unsigned> f;
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L}) {
        while (n % p == 0) {
            f[p]++;
            n /= p;
        }
    }
    long p = 17;
    while (n > 1 && p <= 100000 && Int(p) * p <= n) {
        while (n % p == 0) {
            f[p]++;
            n /= p;
        }
        p += 2;
    }
    if (n > 1) {
        if (Int(p) * p > n || mpz_probab_prime_p(n.get_mpz_t(), 32)) {
            f[n]++;
        } else {
            factor_into(n, f);
        }
    }
    return f;
}

}  // namespace

Int squarefree_part(const Int& n, Int& square_root_part) {
    if (n < 0) throw ArithmeticError("negative radicand");
    square_root_part = 1;
    if (n == 0 || n == 1) return n;
    Int free_part = 1;
    for (const auto& [p, e] : factorize(n)) {
        if (e % 2) free_part *= p;
        for (unsigned i = 0; i + 1 < e; i += 2) square_root_part *= p;
    }
    return free_part;
}

std::vector<Int> divisors(const Int& n) {
    if (n == 0) throw ArithmeticError("divisors of zero");
    Int m = n < 0 ? Int(-n) : n;
    std::vector<Int> ds{1};
    for (const auto& [p, e] : factorize(m)) {
        std::size_t sz = ds.size();
        Int pk = 1;
        for (unsigned k = 1; k <= e; k++) {
            pk *= p;
            for (std::size_t i = 0; i < sz; i++) ds.push_back(ds[i] * pk);
        }
    }
    return ds;
}

Rat parse_rat(const std::string& s, std::size_t& pos) {
    auto skip_ws = [&] {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) pos++;
    };
    skip_ws();
    std::size_t start = pos;
    bool neg = false;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
        neg = s[pos] == '-';
        pos++;
    }
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
        throw ParseError("expected number", pos);
    std::string digits;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) digits += s[pos++];
    Int num(digits);
    Int den = 1;
    skip_ws();
    if (pos < s.size() && s[pos] == '/') {
        pos++;
        skip_ws();
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            throw ParseError("expected denominator", pos);
        std::string dd;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) dd += s[pos++];
        den = Int(dd);
        if (den == 0) throw ParseError("zero denominator", start);
    }
    Rat q(num, den);
    q.canonicalize();
    return neg ? Rat(-q) : q;
}

}  // namespace qpoly
