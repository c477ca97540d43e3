#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "tambara/fixed_point.hpp"
#include "tambara/functor.hpp"
#include "tambara/gset.hpp"
#include "tambara/ideals.hpp"

namespace tambara {

// Line-oriented text formats. Blank lines and '#' comments are ignored; every
// printer emits the canonical form its parser reads back unchanged.

using GroupPtr = std::shared_ptr<const FiniteGroup>;
using GroupLookup = std::function<GroupPtr(const std::string&)>;
using GSetLookup = std::function<GSetPtr(const std::string&)>;
// Resolves the designator after "ideal over" (and the optional group line).
using FunctorLookup = std::function<FunctorPtr(const std::string& designator, const std::string& group)>;

// A document holds several blocks, each opened by one of the keywords
// group, gset, gmap, gring, ideal.
struct TextBlock {
  std::string keyword;
  std::string text;
  int first_line = 1;
};
std::vector<TextBlock> split_blocks(const std::string& document);

// group <name> / order <n> / table + n rows, or group <name> / perm <d> / gen lines.
GroupPtr parse_group(const std::string& text);
std::string format_group(const FiniteGroup& g);

// gset <name> over <group> / size <n> / action + |G| rows.
GSetPtr parse_gset(const std::string& text, const GroupLookup& groups);
std::string format_gset(const GSet& x, const std::string& name, const std::string& group);

// gmap <src> -> <dst> / images ...
struct NamedGMap {
  std::string src, dst;
  GMap map;
};
NamedGMap parse_gmap(const std::string& text, const GSetLookup& sets);
std::string format_gmap(const GMap& f, const std::string& src, const std::string& dst);

// gring <name> over <group> / elements <n> / [labels ...] / add rows / mul rows / action rows.
GRingPtr parse_gring(const std::string& text, const GroupLookup& groups);
std::string format_gring(const GRing& r, const std::string& group);

// ideal over <functor> / [group <name>] / level <H>: {a, b} | level <H>: lattice [v1; v2].
// The parsed family carries an unknown certificate; check_ideal decides it.
IdealFamily parse_ideal(const std::string& text, const FunctorLookup& functors);
std::string format_ideal(const IdealFamily& i, const std::string& designator, const std::string& group = {});

// "<src>-><dst>" or "<src>-><dst>@<g>", or the projection shorthand "p<dst><src>" (pGe).
TransitiveMap parse_transitive_map(const GroupContext& ctx, const std::string& text);

// "<H-name>: <literal>" or a bare literal at `default_level`.
struct LevelElement {
  std::size_t level = 0;
  Value value;
};
LevelElement parse_level_element(const TambaraFunctor& t, const std::string& text, std::size_t default_level);

}  // namespace tambara
