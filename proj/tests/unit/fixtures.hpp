#pragma once

#include <map>
#include <string>

#include "tambara/builtin.hpp"

namespace tambara::test {

// One context per built-in group, shared by every case in a suite.
inline ContextPtr context(const std::string& name) {
  static std::map<std::string, ContextPtr> cache;
  auto it = cache.find(name);
  if (it != cache.end()) return it->second;
  return cache[name] = GroupContext::create(builtin_group(name));
}

inline FunctorPtr functor(const std::string& group, const std::string& designator) {
  return make_functor(context(group), designator);
}

}  // namespace tambara::test
