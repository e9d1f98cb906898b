// cohomology.hpp
// --------------
// Graph equivariant cohomology: vertex-indexed integer polynomials subject
// to the edgewise divisibility conditions, equivariant Chern classes of leg
// bundles, the induced map along the projectivization and the first Chern
// class of the tautological bundle, the evaluation map mu, the fiberwise
// Newton decomposition, and arithmetic in the quotient presentation
//   H*(G)[kappa] / ( sum_k (-1)^k c_k(xi) kappa^(rank-k) ).

#pragma once

#include "gkm/bundle.hpp"

#include <map>
#include <span>
#include <string>
#include <vector>

namespace gkm {

struct CohomologyClass {
    uint32_t rank = 0;
    std::map<std::string, Polynomial> values;

    const Polynomial& at(const std::string& vertex) const;
    bool is_zero() const;
    long total_degree() const; // max over vertices, -1 when zero

    friend bool operator==(const CohomologyClass& a, const CohomologyClass& b) {
        return a.rank == b.rank && a.values == b.values;
    }
    friend bool operator!=(const CohomologyClass& a, const CohomologyClass& b) { return !(a == b); }
};

// pointwise ring structure; both classes must live on the same vertex set
CohomologyClass class_add(const CohomologyClass& a, const CohomologyClass& b);
CohomologyClass class_sub(const CohomologyClass& a, const CohomologyClass& b);
CohomologyClass class_mul(const CohomologyClass& a, const CohomologyClass& b);
CohomologyClass class_neg(const CohomologyClass& a);
CohomologyClass class_scale(const CohomologyClass& a, const Polynomial& c);
CohomologyClass class_pow(const CohomologyClass& a, uint32_t n);

// the image of iota: the constant function
CohomologyClass constant_class(const LabeledGraph& lg, const Polynomial& value);
CohomologyClass zero_class(const LabeledGraph& lg);

struct ClassReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
    std::string summary() const;
};

// report-valued congruence check of a vertex assignment against a carrier
ClassReport check_class(const LabeledGraph& lg, const std::map<std::string, Polynomial>& values);

// throwing form; the exception message carries the failing edge and the
// nonzero remainder witness
CohomologyClass validate_class(const LabeledGraph& lg, std::map<std::string, Polynomial> values);

// k-th equivariant Chern class, 0 <= k <= rank; the k-th elementary
// symmetric polynomial of the fiber labels at each vertex. Lives on the
// base and is revalidated there as a postcondition.
CohomologyClass chern(const LegBundle& xi, uint32_t k);
CohomologyClass chern(const Projectivization& proj, uint32_t k);

// induced homomorphism: value f(p) at every vertex of the fiber over p
CohomologyClass pullback_class(const Projectivization& proj, const CohomologyClass& f);

// the class t: the leg label of the tautological bundle at each vertex
CohomologyClass c1_tautological(const Projectivization& proj);
CohomologyClass c1_tautological(const TautologicalBundle& gamma);

// sum_{k=0}^{rank} (-1)^k phi*(c_k) t^(rank-k); identically zero, returned
// so callers can assert it
CohomologyClass bh_residue(const Projectivization& proj, const CohomologyClass& t);

// evaluation of a kappa-polynomial with base-class coefficients at t;
// accepts any number of coefficients
CohomologyClass mu(const Projectivization& proj, std::span<const CohomologyClass> coefficients);

// Newton decomposition of a fiber class against pairwise distinct leg
// labels: X(l^i) = sum_k Q_k w_i^k, eliminating in index order.
std::vector<Polynomial> fiber_decompose_raw(const std::vector<LinearForm>& labels,
                                            const std::vector<Polynomial>& values);
std::vector<Polynomial> fiber_decompose(const Projectivization& proj, const std::string& base_vertex,
                                        const std::map<std::string, Polynomial>& values);

struct ModuleDecomposition {
    std::vector<CohomologyClass> coefficients; // Q_0 .. Q_(rank-1), classes on the base
};

// Constructive Leray-Hirsch: requires the projectivization to satisfy the
// GKM condition. Each Q_k is verified against the base congruences and the
// reassembly mu(Q) == f is checked before returning.
ModuleDecomposition decompose(const Projectivization& proj, const CohomologyClass& f);

struct PresentationElement {
    std::vector<CohomologyClass> kappa_coeffs; // degree < bundle rank after reduction
};

PresentationElement presentation_element(const Projectivization& proj,
                                         std::vector<CohomologyClass> kappa_coeffs);
PresentationElement presentation_multiply(const Projectivization& proj, const PresentationElement& a,
                                          const PresentationElement& b);
bool presentation_equal(const PresentationElement& a, const PresentationElement& b);

} // namespace gkm
