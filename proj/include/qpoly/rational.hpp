#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qpoly {

using Int = mpz_class;
using Rat = mpq_class;

/// Base class for all errors thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : Error {
    std::size_t column;
    ParseError(const std::string& msg, std::size_t col)
        : Error(msg + " (column " + std::to_string(col) + ")"), column(col) {}
};

struct ArithmeticError : Error {
    using Error::Error;
};

struct SingularMatrixError : Error {
    std::size_t stage;
    explicit SingularMatrixError(std::size_t s)
        : Error("singular matrix (zero pivot at elimination stage " + std::to_string(s) + ")"),
          stage(s) {}
};

struct InvalidParameters : Error {
    using Error::Error;
};

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline Int to_int(const Rat& q) {
    if (!is_integer(q)) throw ArithmeticError("expected integer, got " + q.get_str());
    return q.get_num();
}

inline bool fits_long(const Int& z) { return z.fits_slong_p(); }

/// Largest integer <= num/den.
inline Int floor_div(const Int& num, const Int& den) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

/// Smallest integer >= num/den.
inline Int ceil_div(const Int& num, const Int& den) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

inline Int rat_floor(const Rat& q) { return floor_div(q.get_num(), q.get_den()); }
inline Int rat_ceil(const Rat& q) { return ceil_div(q.get_num(), q.get_den()); }

inline Int lcm(const Int& a, const Int& b) {
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int gcd(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline bool is_perfect_square(const Int& n, Int* root = nullptr) {
    if (n < 0) return false;
    if (mpz_perfect_square_p(n.get_mpz_t())) {
        if (root) mpz_sqrt(root->get_mpz_t(), n.get_mpz_t());
        return true;
    }
    return false;
}

/// n = s^2 * f with f squarefree; returns f and stores s.
Int squarefree_part(const Int& n, Int& square_root_part);

/// All positive divisors of |n| (n != 0), unsorted.
std::vector<Int> divisors(const Int& n);

/// Renders a rational as "p/q" or "p".
inline std::string rat_str(const Rat& q) { return q.get_str(); }

/// Parses an integer or fraction "p/q"; returns position past the token.
Rat parse_rat(const std::string& s, std::size_t& pos);

inline Rat parse_rat(const std::string& s) {
    std::size_t pos = 0;
    Rat q = parse_rat(s, pos);
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) pos++;
    if (pos != s.size()) throw ParseError("trailing characters after rational", pos);
    return q;
}

}  // namespace qpoly
