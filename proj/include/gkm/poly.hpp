// poly.hpp
// --------
// Exact sparse multivariate polynomials over the integers in a fixed number
// of torus variables t1..tn ("rank"), plus nonzero integer linear forms.
// Terms are kept in graded-lexicographic order, leading term first, so equal
// polynomials have identical term sequences and serialization is canonical.

#pragma once

#include "gkm/bigint.hpp"

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace gkm {

using Exponents = std::vector<uint32_t>;

// Graded-lex, descending: higher total degree first, ties broken
// lexicographically with the larger exponent vector first.
struct GradedLexDesc {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

class LinearForm;

class Polynomial {
public:
    explicit Polynomial(uint32_t rank) : rank_(rank) {}

    static Polynomial constant(uint32_t rank, BigInt c);
    static Polynomial variable(uint32_t rank, uint32_t index); // 0-based

    uint32_t rank() const { return rank_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    // -1 for the zero polynomial
    long total_degree() const;

    // adds c * t^e, dropping the term if the sum cancels
    void add_term(const Exponents& e, const BigInt& c);

    const std::map<Exponents, BigInt, GradedLexDesc>& terms() const { return terms_; }

    BigInt coefficient(const Exponents& e) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);
    Polynomial& operator*=(const BigInt& c);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
    friend Polynomial operator*(Polynomial a, const BigInt& c) { return a *= c; }

    Polynomial pow(uint32_t n) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.rank_ == b.rank_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    // e.g. "t1^2*t2 - 3*t2 + 1"
    std::string str() const;

private:
    uint32_t rank_;
    std::map<Exponents, BigInt, GradedLexDesc> terms_;

    void check_rank(const Polynomial& o) const;
};

// A nonzero vector in Z^n read as a degree-1 polynomial. Zero vectors are
// rejected: no flag of a labeled graph ever carries the zero label, and
// divisibility mod 0 is meaningless.
class LinearForm {
public:
    static LinearForm make(std::vector<BigInt> coeffs); // throws ZeroForm on 0

    uint32_t rank() const { return static_cast<uint32_t>(coeffs_.size()); }
    const std::vector<BigInt>& coefficients() const { return coeffs_; }

    Polynomial to_polynomial() const;
    LinearForm negated() const;

    friend bool operator==(const LinearForm& a, const LinearForm& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const LinearForm& a, const LinearForm& b) { return !(a == b); }
    friend bool operator<(const LinearForm& a, const LinearForm& b) {
        return a.coeffs_ < b.coeffs_;
    }

    std::string str() const;

private:
    explicit LinearForm(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {}
    std::vector<BigInt> coeffs_;
};

// difference of two labels etc.; may be zero, hence a plain vector
std::vector<BigInt> form_difference(const LinearForm& a, const LinearForm& b);

// c such that d == c * l, if one exists (d may be zero -> c = 0)
std::optional<BigInt> integer_ratio(const std::vector<BigInt>& d, const LinearForm& l);

// 2x2-minor test: dependent over Z iff dependent over Q for integer vectors
bool linearly_independent(const LinearForm& a, const LinearForm& b);

// Elementary symmetric polynomial S_k of the given forms; S_0 = 1.
Polynomial elementary_symmetric(uint32_t k, std::span<const LinearForm> forms);

// Complete homogeneous symmetric polynomial h_k: the sum of all degree-k
// monomials in the forms; h_k of a single argument is its k-th power. This
// is the symmetric function satisfying
//   h_k(x1..xm) - h_k(x1..x_{m-1},x_{m+1}) = (x_m - x_{m+1}) h_{k-1}(x1..x_{m+1}).
Polynomial complete_homogeneous(uint32_t k, std::span<const LinearForm> forms);

struct Division {
    Polynomial quotient;
    Polynomial remainder;
    bool exact() const { return remainder.is_zero(); }
};

// Division of f by a linear form, exact over Z. Eliminates the first
// variable with nonzero coefficient in l; the quotient is accepted only if
// every coefficient division is exact, so non-primitive forms (e.g. -2b)
// behave correctly. remainder == 0 iff f == quotient * l over Z.
Division divide_by_form(const Polynomial& f, const LinearForm& l);

// Throwing wrapper: returns q with f = q*l, or raises NotDivisible carrying
// the nonzero remainder in the message.
Polynomial divide_exact(const Polynomial& f, const LinearForm& l);

bool is_congruent_zero(const Polynomial& f, const LinearForm& l);

// Rank of the Z-span of a set of integer vectors (fraction-free elimination).
int lattice_rank(const std::vector<std::vector<BigInt>>& vectors);

} // namespace gkm
