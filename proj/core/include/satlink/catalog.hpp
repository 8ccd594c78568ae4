#pragma once

// Built-in patterns used by the self-test and mirrored in corpus/.

#include "satlink/clasp_presentation.hpp"

namespace satlink::catalog {

/// The (n,1)-cable with no clasps.
ClaspPresentation cable(std::size_t n);

/// Winding 8, P(U) unknotted; lifted linkings (0), (0,0,0) and
/// (1,0,-1,-1,-1,0,1) for m = 2, 4, 8, so no cover obstructs.
ClaspPresentation winding8_inconclusive();

/// Text of winding8_inconclusive in the pattern format.
std::string_view winding8_inconclusive_text();

}  // namespace satlink::catalog
