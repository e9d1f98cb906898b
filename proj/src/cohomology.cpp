#include "gkm/cohomology.hpp"
#include "gkm/error.hpp"

#include <algorithm>
#include <sstream>

namespace gkm {

const Polynomial& CohomologyClass::at(const std::string& vertex) const {
    auto it = values.find(vertex);
    if (it == values.end()) throw DomainError(errc::unknown_vertex, "class has no value at " + vertex);
    return it->second;
}

bool CohomologyClass::is_zero() const {
    return std::all_of(values.begin(), values.end(),
                       [](const auto& kv) { return kv.second.is_zero(); });
}

long CohomologyClass::total_degree() const {
    long d = -1;
    for (const auto& [v, p] : values) d = std::max(d, p.total_degree());
    return d;
}

namespace {

void require_same_carrier(const CohomologyClass& a, const CohomologyClass& b) {
    if (a.rank != b.rank) throw DomainError(errc::rank_mismatch, "class ranks differ");
    if (a.values.size() != b.values.size())
        throw DomainError(errc::rank_mismatch, "classes live on different vertex sets");
    for (const auto& [v, p] : a.values) {
        if (!b.values.count(v))
            throw DomainError(errc::rank_mismatch, "classes live on different vertex sets: " + v);
    }
}

template <typename F>
CohomologyClass pointwise(const CohomologyClass& a, const CohomologyClass& b, F&& op) {
    require_same_carrier(a, b);
    CohomologyClass out;
    out.rank = a.rank;
    for (const auto& [v, p] : a.values) out.values.emplace(v, op(p, b.values.at(v)));
    return out;
}

} // namespace

CohomologyClass class_add(const CohomologyClass& a, const CohomologyClass& b) {
    return pointwise(a, b, [](const Polynomial& x, const Polynomial& y) { return x + y; });
}

CohomologyClass class_sub(const CohomologyClass& a, const CohomologyClass& b) {
    return pointwise(a, b, [](const Polynomial& x, const Polynomial& y) { return x - y; });
}

CohomologyClass class_mul(const CohomologyClass& a, const CohomologyClass& b) {
    return pointwise(a, b, [](const Polynomial& x, const Polynomial& y) { return x * y; });
}

CohomologyClass class_neg(const CohomologyClass& a) {
    CohomologyClass out;
    out.rank = a.rank;
    for (const auto& [v, p] : a.values) out.values.emplace(v, -p);
    return out;
}

CohomologyClass class_scale(const CohomologyClass& a, const Polynomial& c) {
    CohomologyClass out;
    out.rank = a.rank;
    for (const auto& [v, p] : a.values) out.values.emplace(v, p * c);
    return out;
}

CohomologyClass class_pow(const CohomologyClass& a, uint32_t n) {
    CohomologyClass out;
    out.rank = a.rank;
    for (const auto& [v, p] : a.values) out.values.emplace(v, p.pow(n));
    return out;
}

CohomologyClass constant_class(const LabeledGraph& lg, const Polynomial& value) {
    if (value.rank() != lg.rank) throw DomainError(errc::rank_mismatch, "constant has wrong rank");
    CohomologyClass out;
    out.rank = lg.rank;
    for (const auto& v : lg.graph.vertices()) out.values.emplace(v, value);
    return out;
}

CohomologyClass zero_class(const LabeledGraph& lg) {
    return constant_class(lg, Polynomial(lg.rank));
}

std::string ClassReport::summary() const {
    if (ok()) return "valid";
    std::ostringstream os;
    for (const auto& v : violations) os << v.code << ": " << v.message << "\n";
    return os.str();
}

ClassReport check_class(const LabeledGraph& lg, const std::map<std::string, Polynomial>& values) {
    ClassReport r;
    for (const auto& v : lg.graph.vertices()) {
        auto it = values.find(v);
        if (it == values.end()) {
            r.violations.push_back({errc::not_in_cohomology, "no value at vertex " + v});
        } else if (it->second.rank() != lg.rank) {
            r.violations.push_back({errc::rank_mismatch, "value at " + v + " has wrong rank"});
        }
    }
    for (const auto& [v, p] : values) {
        if (!lg.graph.has_vertex(v))
            r.violations.push_back({errc::unknown_vertex, "value at unknown vertex " + v});
    }
    if (!r.ok()) return r;
    for (const auto& e : lg.graph.edges()) {
        if (!e.is_compact()) continue;
        const std::string& p = e.ends[0];
        const std::string& q = e.ends[1];
        Division d = divide_by_form(values.at(p) - values.at(q), lg.label(p, e.id));
        if (!d.exact()) {
            r.violations.push_back(
                {errc::congruence_violation, "edge " + e.id + ": f(" + p + ") - f(" + q + ") = " +
                                                 (values.at(p) - values.at(q)).str() +
                                                 " is not divisible by " + lg.label(p, e.id).str() +
                                                 "; remainder " + d.remainder.str()});
        }
    }
    return r;
}

CohomologyClass validate_class(const LabeledGraph& lg, std::map<std::string, Polynomial> values) {
    ClassReport r = check_class(lg, values);
    if (!r.ok()) throw DomainError(errc::congruence_violation, r.summary());
    CohomologyClass out;
    out.rank = lg.rank;
    out.values = std::move(values);
    return out;
}

namespace {

CohomologyClass chern_from_fibers(const LabeledGraph& base,
                                  const std::map<std::string, std::vector<LinearForm>>& fibers,
                                  uint32_t rank, uint32_t k) {
    if (k > rank)
        throw DomainError(errc::out_of_range,
                          "chern index " + std::to_string(k) + " exceeds rank " + std::to_string(rank));
    std::map<std::string, Polynomial> values;
    for (const auto& p : base.graph.vertices()) {
        const auto& w = fibers.at(p);
        values.emplace(p, elementary_symmetric(k, std::span<const LinearForm>(w)));
    }
    ClassReport r = check_class(base, values);
    if (!r.ok())
        throw DomainError(errc::internal_invariant, "chern class fails base congruences: " + r.summary());
    CohomologyClass out;
    out.rank = base.rank;
    out.values = std::move(values);
    return out;
}

} // namespace

CohomologyClass chern(const LegBundle& xi, uint32_t k) {
    std::map<std::string, std::vector<LinearForm>> fibers;
    for (const auto& p : xi.base.graph.vertices()) fibers[p] = xi.fiber_labels(p);
    return chern_from_fibers(xi.base, fibers, xi.rank, k);
}

CohomologyClass chern(const Projectivization& proj, uint32_t k) {
    return chern_from_fibers(proj.base, proj.fiber_labels, proj.bundle_rank, k);
}

CohomologyClass pullback_class(const Projectivization& proj, const CohomologyClass& f) {
    if (f.rank != proj.base.rank) throw DomainError(errc::rank_mismatch, "class rank differs from base");
    CohomologyClass out;
    out.rank = f.rank;
    for (const auto& [v, info] : proj.vertex_info) out.values.emplace(v, f.at(info.first));
    return out;
}

CohomologyClass c1_tautological(const Projectivization& proj) {
    CohomologyClass out;
    out.rank = proj.total.rank;
    for (const auto& [v, info] : proj.vertex_info)
        out.values.emplace(v, proj.fiber_labels.at(info.first)[info.second - 1].to_polynomial());
    return out;
}

CohomologyClass c1_tautological(const TautologicalBundle& gamma) {
    return chern(gamma, 1);
}

CohomologyClass bh_residue(const Projectivization& proj, const CohomologyClass& t) {
    const uint32_t rank = proj.bundle_rank;
    CohomologyClass acc = zero_class(proj.total);
    for (uint32_t k = 0; k <= rank; ++k) {
        CohomologyClass term = class_mul(pullback_class(proj, chern(proj, k)), class_pow(t, rank - k));
        acc = (k % 2 == 0) ? class_add(acc, term) : class_sub(acc, term);
    }
    return acc;
}

CohomologyClass mu(const Projectivization& proj, std::span<const CohomologyClass> coefficients) {
    for (const auto& q : coefficients) {
        ClassReport r = check_class(proj.base, q.values);
        if (!r.ok())
            throw DomainError(errc::not_in_cohomology, "mu coefficient is not a base class: " + r.summary());
    }
    CohomologyClass t = c1_tautological(proj);
    CohomologyClass acc = zero_class(proj.total);
    CohomologyClass power = constant_class(proj.total, Polynomial::constant(proj.total.rank, BigInt(1)));
    for (size_t k = 0; k < coefficients.size(); ++k) {
        if (k > 0) power = class_mul(power, t);
        acc = class_add(acc, class_mul(pullback_class(proj, coefficients[k]), power));
    }
    ClassReport r = check_class(proj.total, acc.values);
    if (!r.ok())
        throw DomainError(errc::internal_invariant, "mu produced a non-class: " + r.summary());
    return acc;
}

std::vector<Polynomial> fiber_decompose_raw(const std::vector<LinearForm>& labels,
                                            const std::vector<Polynomial>& values) {
    const size_t k = labels.size();
    if (values.size() != k)
        throw DomainError(errc::out_of_range, "fiber needs one value per leg");
    if (k == 0) return {};
    const uint32_t n = labels[0].rank();

    for (size_t i = 0; i < k; ++i) {
        for (size_t j = i + 1; j < k; ++j) {
            if (labels[i] == labels[j])
                throw DomainError(errc::non_gkm_fiber,
                                  "fiber labels coincide: " + labels[i].str());
        }
    }
    // the fiber is a complete graph; check every congruence up front
    for (size_t i = 0; i < k; ++i) {
        for (size_t j = i + 1; j < k; ++j) {
            LinearForm diff = LinearForm::make(form_difference(labels[i], labels[j]));
            if (!is_congruent_zero(values[i] - values[j], diff))
                throw DomainError(errc::not_in_fiber_cohomology,
                                  "values at legs " + std::to_string(i + 1) + " and " +
                                      std::to_string(j + 1) + " violate the fiber congruence mod " +
                                      diff.str());
        }
    }

    // Newton elimination pivoting on the legs in index order
    std::vector<Polynomial> coeff; // divided-difference coefficients b_j
    std::vector<Polynomial> cur = values;
    coeff.push_back(cur[0]);
    for (size_t i = 0; i < k; ++i) cur[i] -= coeff[0];
    for (size_t j = 1; j < k; ++j) {
        Polynomial y = cur[j];
        for (size_t q = 0; q < j; ++q) {
            LinearForm node = LinearForm::make(form_difference(labels[j], labels[q]));
            Division d = divide_by_form(y, node);
            if (!d.exact())
                throw DomainError(errc::not_in_fiber_cohomology,
                                  "elimination step " + std::to_string(j) +
                                      " is not exactly divisible; remainder " + d.remainder.str());
            y = std::move(d.quotient);
        }
        coeff.push_back(y);
        for (size_t i = j + 1; i < k; ++i) {
            Polynomial basis = Polynomial::constant(n, BigInt(1));
            for (size_t q = 0; q < j; ++q) {
                Polynomial node(n);
                auto diff = form_difference(labels[i], labels[q]);
                for (uint32_t c = 0; c < n; ++c) {
                    Exponents e(n, 0);
                    e[c] = 1;
                    node.add_term(e, diff[c]);
                }
                basis *= node;
            }
            cur[i] -= coeff[j] * basis;
        }
    }

    // expand the Newton basis into powers of t_p
    std::vector<Polynomial> out(k, Polynomial(n));
    for (size_t j = 0; j < k; ++j) {
        std::span<const LinearForm> nodes(labels.data(), j);
        for (size_t d = 0; d <= j; ++d) {
            Polynomial s = j == 0 ? Polynomial::constant(n, BigInt(1))
                                  : elementary_symmetric(static_cast<uint32_t>(j - d), nodes);
            if ((j - d) % 2 == 1) s = -s;
            out[d] += coeff[j] * s;
        }
    }
    return out;
}

std::vector<Polynomial> fiber_decompose(const Projectivization& proj, const std::string& base_vertex,
                                        const std::map<std::string, Polynomial>& values) {
    auto fit = proj.fiber_vertices.find(base_vertex);
    if (fit == proj.fiber_vertices.end())
        throw DomainError(errc::unknown_vertex, "no fiber over " + base_vertex);
    std::vector<Polynomial> x;
    for (const auto& v : fit->second) {
        auto it = values.find(v);
        if (it == values.end())
            throw DomainError(errc::not_in_fiber_cohomology, "no value at fiber vertex " + v);
        x.push_back(it->second);
    }
    return fiber_decompose_raw(proj.fiber_labels.at(base_vertex), x);
}

ModuleDecomposition decompose(const Projectivization& proj, const CohomologyClass& f) {
    GkmResult gkm = is_gkm(proj.total);
    if (!gkm.gkm) {
        const auto& [p, e1, e2] = *gkm.witness;
        throw DomainError(errc::not_gkm, "projectivization is not a GKM graph: labels at " + p +
                                             " along " + e1 + " and " + e2 + " are dependent");
    }
    ClassReport r = check_class(proj.total, f.values);
    if (!r.ok()) throw DomainError(errc::not_in_cohomology, r.summary());

    ModuleDecomposition out;
    out.coefficients.assign(proj.bundle_rank, CohomologyClass{proj.base.rank, {}});
    for (const auto& p : proj.base.graph.vertices()) {
        std::vector<Polynomial> x;
        for (const auto& v : proj.fiber_vertices.at(p)) x.push_back(f.at(v));
        std::vector<Polynomial> q = fiber_decompose_raw(proj.fiber_labels.at(p), x);
        for (uint32_t kidx = 0; kidx < proj.bundle_rank; ++kidx)
            out.coefficients[kidx].values.emplace(p, std::move(q[kidx]));
    }
    // the base congruences for the Q_k are a theorem; verify rather than trust
    for (const auto& q : out.coefficients) {
        ClassReport qr = check_class(proj.base, q.values);
        if (!qr.ok())
            throw DomainError(errc::internal_invariant,
                              "decomposition coefficient fails base congruences: " + qr.summary());
    }
    CohomologyClass back = mu(proj, out.coefficients);
    if (!(back == f))
        throw DomainError(errc::internal_invariant, "decomposition does not reassemble to the input");
    return out;
}

PresentationElement presentation_element(const Projectivization& proj,
                                         std::vector<CohomologyClass> kappa_coeffs) {
    const uint32_t rank = proj.bundle_rank;
    for (const auto& q : kappa_coeffs) {
        ClassReport r = check_class(proj.base, q.values);
        if (!r.ok())
            throw DomainError(errc::not_in_cohomology,
                              "presentation coefficient is not a base class: " + r.summary());
    }
    std::vector<CohomologyClass> cs;
    for (uint32_t k = 0; k <= rank; ++k) cs.push_back(chern(proj, k));
    // kappa^rank = sum_{k=1..rank} (-1)^(k+1) c_k kappa^(rank-k)
    while (kappa_coeffs.size() > rank) {
        CohomologyClass top = kappa_coeffs.back();
        kappa_coeffs.pop_back();
        size_t d = kappa_coeffs.size(); // degree of the removed term
        for (uint32_t k = 1; k <= rank; ++k) {
            CohomologyClass term = class_mul(top, cs[k]);
            size_t at = d - k;
            kappa_coeffs[at] =
                (k % 2 == 1) ? class_add(kappa_coeffs[at], term) : class_sub(kappa_coeffs[at], term);
        }
    }
    while (kappa_coeffs.size() < rank) kappa_coeffs.push_back(zero_class(proj.base));
    PresentationElement out;
    out.kappa_coeffs = std::move(kappa_coeffs);
    return out;
}

PresentationElement presentation_multiply(const Projectivization& proj, const PresentationElement& a,
                                          const PresentationElement& b) {
    if (a.kappa_coeffs.empty() || b.kappa_coeffs.empty())
        return presentation_element(proj, {});
    std::vector<CohomologyClass> prod(a.kappa_coeffs.size() + b.kappa_coeffs.size() - 1,
                                      zero_class(proj.base));
    for (size_t i = 0; i < a.kappa_coeffs.size(); ++i) {
        for (size_t j = 0; j < b.kappa_coeffs.size(); ++j) {
            prod[i + j] = class_add(prod[i + j], class_mul(a.kappa_coeffs[i], b.kappa_coeffs[j]));
        }
    }
    return presentation_element(proj, std::move(prod));
}

bool presentation_equal(const PresentationElement& a, const PresentationElement& b) {
    if (a.kappa_coeffs.size() != b.kappa_coeffs.size()) return false;
    for (size_t i = 0; i < a.kappa_coeffs.size(); ++i) {
        if (!(a.kappa_coeffs[i] == b.kappa_coeffs[i])) return false;
    }
    return true;
}

} // namespace gkm
