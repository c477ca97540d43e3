#pragma once

#include <memory>
#include <string>
#include <vector>

#include "tambara/burnside.hpp"
#include "tambara/fixed_point.hpp"
#include "tambara/text_format.hpp"

namespace tambara {

// c2, c3, c4, s3, c2xc2 as permutation groups. Throws InputError for other names.
GroupPtr builtin_group(const std::string& name);
const std::vector<std::string>& builtin_group_names();

// Functor designators:
//   omega | pz | zmod <n> trivial | prodfield <q> <n> perm|trivial | gring <name>
// A gring designator is resolved through `grings` (loaded G-ring files).
using GRingLookup = std::function<GRingPtr(const std::string&)>;
FunctorPtr make_functor(const ContextPtr& ctx, const std::string& designator, const GRingLookup& grings = {},
                        std::size_t point_cap = kDefaultPointCap);

}  // namespace tambara
