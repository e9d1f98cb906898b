// error.hpp
// ---------
// Exception hierarchy shared by all gkm modules.
//
// ParseError  -> malformed input documents (CLI exit code 2)
// DomainError -> violated preconditions or failed mathematical checks,
//                tagged with a stable machine-readable code (CLI exit code 1)

#pragma once

#include <stdexcept>
#include <string>

namespace gkm {

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class ParseError : public Error {
public:
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

class DomainError : public Error {
public:
    DomainError(std::string code, const std::string& msg)
        : Error(code + ": " + msg), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

private:
    std::string code_;
};

namespace errc {
// Stable codes used across the library; tests and the CLI match on these.
inline constexpr const char* rank_mismatch = "RankMismatch";
inline constexpr const char* zero_divisor = "ZeroDivisor";
inline constexpr const char* zero_form = "ZeroForm";
inline constexpr const char* not_divisible = "NotDivisible";
inline constexpr const char* out_of_range = "OutOfRange";
inline constexpr const char* unknown_vertex = "UnknownVertex";
inline constexpr const char* unknown_edge = "UnknownEdge";
inline constexpr const char* invalid_graph = "InvalidGraph";
inline constexpr const char* invalid_morphism = "InvalidMorphism";
inline constexpr const char* congruence_violation = "CongruenceViolation";
inline constexpr const char* transport_not_inverse = "TransportNotInverse";
inline constexpr const char* degenerate_fiber = "DegenerateFiber";
inline constexpr const char* generation_failed = "GenerationFailed";
inline constexpr const char* internal_invariant = "InternalInvariant";
inline constexpr const char* not_gkm = "NotGKM";
inline constexpr const char* non_gkm_fiber = "NonGKMFiber";
inline constexpr const char* not_in_cohomology = "NotInCohomology";
inline constexpr const char* not_in_fiber_cohomology = "NotInFiberCohomology";
inline constexpr const char* id_collision = "IdCollision";
inline constexpr const char* unknown_corpus = "UnknownCorpus";
} // namespace errc

} // namespace gkm
