// corpus.hpp
// ----------
// Built-in documents: the CP^2 GKM triangle with its tangent leg bundle, the
// rank-3 bundle over a single edge, a twisted rank-2 bundle over the
// triangle, and the CP^1 x CP^1 square. These drive the test corpus and the
// `corpus` CLI subcommand; `builtin:<name>` resolves to them everywhere a
// document path is accepted.

#pragma once

#include "gkm/bundle.hpp"
#include "gkm/io.hpp"

#include <string>
#include <vector>

namespace gkm {

std::vector<std::string> corpus_names();

LabeledGraph corpus_cp2_base();
LegBundle corpus_cp2_tangent();
LegBundle corpus_edge_rank3();
LegBundle corpus_triangle_rank2_twisted();
LabeledGraph corpus_square();

// document for a corpus name; "random" additionally honors seed/rank/base
Json corpus_document(const std::string& name, uint64_t seed = 0, uint32_t rank = 2,
                     const std::string& base = "cp2-base");

// resolves "builtin:<name>" or a filesystem path to a parsed document
Json resolve_document(const std::string& path_or_builtin);

} // namespace gkm
