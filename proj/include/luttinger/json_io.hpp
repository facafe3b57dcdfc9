#pragma once

#include <json.hpp>

#include "luttinger/abelian.hpp"
#include "luttinger/coset_enum.hpp"
#include "luttinger/manifold.hpp"

namespace luttinger {

nlohmann::json block_to_json(const ManifoldBlock& b);
ManifoldBlock block_from_json(const nlohmann::json& j);

nlohmann::json invariants_to_json(const AbelianInvariants& inv);
nlohmann::json enumeration_to_json(const EnumerationResult& r);

}  // namespace luttinger
