#include "gkm/poly.hpp"
#include "gkm/error.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace gkm {

bool GradedLexDesc::operator()(const Exponents& a, const Exponents& b) const {
    uint64_t da = std::accumulate(a.begin(), a.end(), uint64_t{0});
    uint64_t db = std::accumulate(b.begin(), b.end(), uint64_t{0});
    if (da != db) return da > db;
    return a > b;
}

Polynomial Polynomial::constant(uint32_t rank, BigInt c) {
    Polynomial p(rank);
    if (!c.is_zero()) p.terms_.emplace(Exponents(rank, 0), std::move(c));
    return p;
}

Polynomial Polynomial::variable(uint32_t rank, uint32_t index) {
    if (index >= rank) throw DomainError(errc::out_of_range, "variable index exceeds rank");
    Polynomial p(rank);
    Exponents e(rank, 0);
    e[index] = 1;
    p.terms_.emplace(std::move(e), BigInt(1));
    return p;
}

long Polynomial::total_degree() const {
    if (terms_.empty()) return -1;
    // leading term has maximal total degree under graded-lex
    const Exponents& e = terms_.begin()->first;
    return static_cast<long>(std::accumulate(e.begin(), e.end(), uint64_t{0}));
}

void Polynomial::add_term(const Exponents& e, const BigInt& c) {
    if (e.size() != rank_) throw DomainError(errc::rank_mismatch, "exponent vector length != rank");
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

BigInt Polynomial::coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? BigInt() : it->second;
}

void Polynomial::check_rank(const Polynomial& o) const {
    if (rank_ != o.rank_)
        throw DomainError(errc::rank_mismatch,
                          "polynomial ranks differ: " + std::to_string(rank_) + " vs " + std::to_string(o.rank_));
}

Polynomial Polynomial::operator-() const {
    Polynomial out(rank_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    check_rank(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    check_rank(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
    check_rank(o);
    Polynomial out(rank_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            Exponents e(rank_);
            for (uint32_t i = 0; i < rank_; ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    }
    *this = std::move(out);
    return *this;
}

Polynomial& Polynomial::operator*=(const BigInt& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, coeff] : terms_) coeff *= c;
    return *this;
}

Polynomial Polynomial::pow(uint32_t n) const {
    Polynomial out = Polynomial::constant(rank_, BigInt(1));
    for (uint32_t i = 0; i < n; ++i) out *= *this;
    return out;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        BigInt a = c;
        if (first) {
            if (a.is_negative()) os << "-";
        } else {
            os << (a.is_negative() ? " - " : " + ");
        }
        first = false;
        a = a.abs();
        bool has_vars = std::any_of(e.begin(), e.end(), [](uint32_t x) { return x > 0; });
        bool printed = false;
        if (!a.is_one() || !has_vars) {
            os << a.str();
            printed = true;
        }
        for (uint32_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (printed) os << "*";
            os << "t" << (i + 1);
            if (e[i] > 1) os << "^" << e[i];
            printed = true;
        }
    }
    return os.str();
}

LinearForm LinearForm::make(std::vector<BigInt> coeffs) {
    bool all_zero = std::all_of(coeffs.begin(), coeffs.end(), [](const BigInt& c) { return c.is_zero(); });
    if (coeffs.empty() || all_zero)
        throw DomainError(errc::zero_form, "zero linear form is not a valid label");
    return LinearForm(std::move(coeffs));
}

Polynomial LinearForm::to_polynomial() const {
    Polynomial p(rank());
    for (uint32_t i = 0; i < rank(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        Exponents e(rank(), 0);
        e[i] = 1;
        p.add_term(e, coeffs_[i]);
    }
    return p;
}

LinearForm LinearForm::negated() const {
    std::vector<BigInt> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(-c);
    return LinearForm(std::move(out));
}

std::string LinearForm::str() const {
    return to_polynomial().str();
}

std::vector<BigInt> form_difference(const LinearForm& a, const LinearForm& b) {
    if (a.rank() != b.rank()) throw DomainError(errc::rank_mismatch, "form ranks differ");
    std::vector<BigInt> out;
    out.reserve(a.rank());
    for (uint32_t i = 0; i < a.rank(); ++i) out.push_back(a.coefficients()[i] - b.coefficients()[i]);
    return out;
}

std::optional<BigInt> integer_ratio(const std::vector<BigInt>& d, const LinearForm& l) {
    if (d.size() != l.rank()) throw DomainError(errc::rank_mismatch, "vector length != form rank");
    bool zero = std::all_of(d.begin(), d.end(), [](const BigInt& c) { return c.is_zero(); });
    if (zero) return BigInt(0);
    size_t pivot = 0;
    while (l.coefficients()[pivot].is_zero()) ++pivot;
    auto [q, r] = BigInt::divmod(d[pivot], l.coefficients()[pivot]);
    if (!r.is_zero()) return std::nullopt;
    for (size_t i = 0; i < d.size(); ++i) {
        if (d[i] != q * l.coefficients()[i]) return std::nullopt;
    }
    return q;
}

bool linearly_independent(const LinearForm& a, const LinearForm& b) {
    if (a.rank() != b.rank()) throw DomainError(errc::rank_mismatch, "form ranks differ");
    for (uint32_t i = 0; i < a.rank(); ++i) {
        for (uint32_t j = i + 1; j < a.rank(); ++j) {
            BigInt minor = a.coefficients()[i] * b.coefficients()[j] - a.coefficients()[j] * b.coefficients()[i];
            if (!minor.is_zero()) return true;
        }
    }
    return false;
}

Polynomial elementary_symmetric(uint32_t k, std::span<const LinearForm> forms) {
    if (k > forms.size())
        throw DomainError(errc::out_of_range,
                          "S_" + std::to_string(k) + " of " + std::to_string(forms.size()) + " forms");
    uint32_t rank = forms.empty() ? 0 : forms[0].rank();
    for (const auto& f : forms) {
        if (f.rank() != rank) throw DomainError(errc::rank_mismatch, "form ranks differ");
    }
    // e[j] after processing i forms = S_j(x_1..x_i)
    std::vector<Polynomial> e;
    e.reserve(k + 1);
    e.push_back(Polynomial::constant(rank, BigInt(1)));
    for (uint32_t j = 1; j <= k; ++j) e.push_back(Polynomial(rank));
    for (const auto& f : forms) {
        Polynomial x = f.to_polynomial();
        for (uint32_t j = std::min<size_t>(k, e.size() - 1); j >= 1; --j) {
            e[j] += e[j - 1] * x;
        }
    }
    return e[k];
}

Polynomial complete_homogeneous(uint32_t k, std::span<const LinearForm> forms) {
    uint32_t rank = forms.empty() ? 0 : forms[0].rank();
    // h[j] after processing i forms = h_j(x_1..x_i); h_j(empty) = 0 for j >= 1
    std::vector<Polynomial> h;
    h.push_back(Polynomial::constant(rank, BigInt(1)));
    for (uint32_t j = 1; j <= k; ++j) h.push_back(Polynomial(rank));
    for (const auto& f : forms) {
        Polynomial x = f.to_polynomial();
        // h_j(A + y) = h_j(A) + y * h_{j-1}(A + y)
        for (uint32_t j = 1; j <= k; ++j) h[j] += x * h[j - 1];
    }
    return h[k];
}

Division divide_by_form(const Polynomial& f, const LinearForm& l) {
    if (f.rank() != l.rank()) throw DomainError(errc::rank_mismatch, "polynomial and form ranks differ");
    const uint32_t rank = f.rank();
    uint32_t pivot = 0;
    while (l.coefficients()[pivot].is_zero()) ++pivot;
    const BigInt& c = l.coefficients()[pivot];

    // l = c*t_pivot + rest, where rest does not involve t_pivot
    Polynomial rest(rank);
    for (uint32_t i = 0; i < rank; ++i) {
        if (i == pivot || l.coefficients()[i].is_zero()) continue;
        Exponents e(rank, 0);
        e[i] = 1;
        rest.add_term(e, l.coefficients()[i]);
    }

    // slice f by exact t_pivot degree; levels[d] has no t_pivot
    uint32_t max_deg = 0;
    for (const auto& [e, coeff] : f.terms()) max_deg = std::max(max_deg, e[pivot]);
    std::vector<Polynomial> levels(max_deg + 1, Polynomial(rank));
    for (const auto& [e, coeff] : f.terms()) {
        Exponents stripped = e;
        uint32_t d = stripped[pivot];
        stripped[pivot] = 0;
        levels[d].add_term(stripped, coeff);
    }

    Polynomial quotient(rank);
    Polynomial remainder(rank);
    for (uint32_t d = max_deg; d >= 1; --d) {
        Polynomial q_d(rank); // quotient slice at t_pivot^(d-1)
        for (const auto& [e, coeff] : levels[d].terms()) {
            auto [qc, rc] = BigInt::divmod(coeff, c);
            if (!qc.is_zero()) q_d.add_term(e, qc);
            if (!rc.is_zero()) {
                Exponents back = e;
                back[pivot] = d;
                remainder.add_term(back, rc);
            }
        }
        if (!q_d.is_zero()) {
            levels[d - 1] -= q_d * rest;
            for (const auto& [e, coeff] : q_d.terms()) {
                Exponents qe = e;
                qe[pivot] = d - 1;
                quotient.add_term(qe, coeff);
            }
        }
    }
    remainder += levels[0];
    return Division{std::move(quotient), std::move(remainder)};
}

Polynomial divide_exact(const Polynomial& f, const LinearForm& l) {
    Division d = divide_by_form(f, l);
    if (!d.exact())
        throw DomainError(errc::not_divisible,
                          "(" + f.str() + ") is not divisible by (" + l.str() + "); remainder " + d.remainder.str());
    return d.quotient;
}

bool is_congruent_zero(const Polynomial& f, const LinearForm& l) {
    return divide_by_form(f, l).exact();
}

int lattice_rank(const std::vector<std::vector<BigInt>>& vectors) {
    if (vectors.empty()) return 0;
    std::vector<std::vector<BigInt>> m = vectors;
    const size_t cols = m[0].size();
    size_t row = 0;
    for (size_t col = 0; col < cols && row < m.size(); ++col) {
        size_t sel = row;
        while (sel < m.size() && m[sel][col].is_zero()) ++sel;
        if (sel == m.size()) continue;
        std::swap(m[row], m[sel]);
        for (size_t i = row + 1; i < m.size(); ++i) {
            if (m[i][col].is_zero()) continue;
            // fraction-free row elimination: exactness over Q is all we need
            BigInt a = m[row][col];
            BigInt b = m[i][col];
            for (size_t j = 0; j < cols; ++j) {
                m[i][j] = m[i][j] * a - m[row][j] * b;
            }
        }
        ++row;
    }
    return static_cast<int>(row);
}

} // namespace gkm
