#pragma once

#include <string>
#include <vector>

#include "luttinger/manifold.hpp"

namespace luttinger {

/// Names of the built-in building blocks.
std::vector<std::string> builtin_names();

/// Returns a built-in block by name: "matsumoto_W", "block_C", "block_B",
/// "torus_T4", "W_prime". Throws with the catalog listing on unknown names.
ManifoldBlock builtin(const std::string& name);

/// Reference presentations used by the cross-check suite: "pi1_C",
/// "pi1_C_minus_T1", "pi1_C_minus_T2", "pi1_B".
Presentation builtin_presentation(const std::string& name);
std::vector<std::string> builtin_presentation_names();

/// The standard gluing of W's genus-2 fiber onto B's genus-2 surface
/// (a1->x1, b1->y1, a2->x2, b2->y2).
GluingMatch standard_genus2_match(const ManifoldBlock& w, const ManifoldBlock& b);

/// The block R: fiber sum of matsumoto_W and block_B along the genus-2
/// surfaces. e = 8, sigma = -4, two marked Lagrangian tori T1, T2.
ManifoldBlock construct_R();

/// P = 1/1 surgery on R's T1 along its s-direction push-off.
ManifoldBlock construct_P();

/// Q(k1, s; k2, p*y2 + t): surgery on T1 in the (0,1) direction with
/// coefficient k1, then on T2 in the (p,1) direction with coefficient k2.
ManifoldBlock construct_Q(long long k1, long long k2, long long p);

}  // namespace luttinger
