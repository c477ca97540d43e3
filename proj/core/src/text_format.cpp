#include "tambara/text_format.hpp"

#include <algorithm>
#include <sstream>

#include "tambara/error.hpp"

namespace tambara {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::string strip_comment(const std::string& line) {
  const auto hash = line.find('#');
  return trim(hash == std::string::npos ? line : line.substr(0, hash));
}

std::vector<std::string> words(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> out;
  for (std::string w; is >> w;) out.push_back(w);
  return out;
}

// Non-empty, comment-free lines of a block, with their source line numbers.
struct Line {
  std::string text;
  int number = 0;
};

std::vector<Line> content_lines(const std::string& text) {
  std::vector<Line> out;
  std::istringstream is(text);
  int n = 0;
  for (std::string raw; std::getline(is, raw);) {
    ++n;
    std::string s = strip_comment(raw);
    if (!s.empty()) out.push_back({std::move(s), n});
  }
  return out;
}

[[noreturn]] void fail_at(const Line& l, const std::string& what) {
  throw InputError("line " + std::to_string(l.number) + ": " + what);
}

int to_int(const Line& l, const std::string& w) {
  try {
    std::size_t used = 0;
    const long v = std::stol(w, &used);
    if (used == w.size()) return static_cast<int>(v);
  } catch (const std::exception&) {
  }
  fail_at(l, "expected an integer, got '" + w + "'");
}

std::vector<int> int_row(const Line& l, std::size_t expected) {
  std::vector<int> row;
  for (const auto& w : words(l.text)) row.push_back(to_int(l, w));
  if (row.size() != expected)
    fail_at(l, "expected " + std::to_string(expected) + " integers, got " + std::to_string(row.size()));
  return row;
}

// Reads `count` rows after the keyword line at position `at`.
std::vector<std::vector<int>> read_rows(const std::vector<Line>& lines, std::size_t& at, std::size_t count,
                                        std::size_t width) {
  std::vector<std::vector<int>> rows;
  for (std::size_t i = 0; i < count; ++i) {
    if (at >= lines.size()) throw InputError("unexpected end of input: " + std::to_string(count) + " rows expected");
    rows.push_back(int_row(lines[at++], width));
  }
  return rows;
}

const Line& expect(const std::vector<Line>& lines, std::size_t at, const std::string& keyword) {
  if (at >= lines.size()) throw InputError("unexpected end of input: '" + keyword + "' expected");
  const auto w = words(lines[at].text);
  if (w.empty() || w[0] != keyword) fail_at(lines[at], "'" + keyword + "' expected");
  return lines[at];
}

void print_rows(std::ostringstream& os, const std::vector<std::vector<int>>& rows) {
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? " " : "") << row[i];
    os << "\n";
  }
}

// Splits on commas or semicolons outside brackets and parentheses.
std::vector<std::string> split_top(const std::string& s, char sep) {
  std::vector<std::string> out{""};
  int depth = 0;
  for (char c : s) {
    if (c == '[' || c == '(' || c == '{') ++depth;
    if (c == ']' || c == ')' || c == '}') --depth;
    if (c == sep && depth == 0) {
      out.emplace_back();
      continue;
    }
    out.back() += c;
  }
  for (auto& x : out) x = trim(x);
  if (out.size() == 1 && out[0].empty()) out.clear();
  return out;
}

}  // namespace

std::vector<TextBlock> split_blocks(const std::string& document) {
  static const char* const kKeywords[] = {"group", "gset", "gmap", "gring", "ideal"};
  std::vector<TextBlock> out;
  std::istringstream is(document);
  int n = 0;
  for (std::string raw; std::getline(is, raw);) {
    ++n;
    const auto w = words(strip_comment(raw));
    bool opens = false;
    if (!w.empty())
      for (const char* k : kKeywords) opens |= w[0] == k;
    // "group <name>" inside an ideal block names the ideal's group, not a new block.
    if (opens && w[0] == "group" && !out.empty() && out.back().keyword == "ideal") opens = false;
    if (opens) {
      out.push_back({w[0], {}, n});
    } else if (out.empty()) {
      if (!w.empty()) throw InputError("line " + std::to_string(n) + ": block keyword expected");
      continue;
    }
    out.back().text += raw + "\n";
  }
  return out;
}

// ---- Groups -----------------------------------------------------------------

GroupPtr parse_group(const std::string& text) {
  const auto lines = content_lines(text);
  const Line& head = expect(lines, 0, "group");
  const auto hw = words(head.text);
  if (hw.size() != 2) fail_at(head, "expected 'group <name>'");
  if (lines.size() < 2) throw InputError("group " + hw[1] + " has no body");
  const auto w = words(lines[1].text);
  std::size_t at = 2;
  if (w[0] == "order") {
    if (w.size() != 2) fail_at(lines[1], "expected 'order <n>'");
    const int n = to_int(lines[1], w[1]);
    if (n <= 0) fail_at(lines[1], "order must be positive");
    expect(lines, at++, "table");
    auto table = read_rows(lines, at, static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    if (at != lines.size()) fail_at(lines[at], "trailing input after group table");
    return std::make_shared<const FiniteGroup>(FiniteGroup::from_table(hw[1], table));
  }
  if (w[0] == "perm") {
    if (w.size() != 2) fail_at(lines[1], "expected 'perm <degree>'");
    const int d = to_int(lines[1], w[1]);
    if (d <= 0) fail_at(lines[1], "degree must be positive");
    std::vector<std::vector<int>> gens;
    for (; at < lines.size(); ++at) {
      auto gw = words(lines[at].text);
      if (gw[0] != "gen") fail_at(lines[at], "'gen' expected");
      gens.push_back(int_row(Line{lines[at].text.substr(3), lines[at].number}, static_cast<std::size_t>(d)));
    }
    return std::make_shared<const FiniteGroup>(FiniteGroup::from_permutations(hw[1], d, gens));
  }
  fail_at(lines[1], "'order' or 'perm' expected");
}

std::string format_group(const FiniteGroup& g) {
  std::ostringstream os;
  os << "group " << g.name() << "\n";
  if (g.degree() > 0) {
    os << "perm " << g.degree() << "\n";
    for (const auto& gen : g.generator_images()) {
      os << "gen";
      for (int x : gen) os << " " << x;
      os << "\n";
    }
    return os.str();
  }
  os << "order " << g.order() << "\ntable\n";
  print_rows(os, g.table());
  return os.str();
}

// ---- G-sets and G-maps ------------------------------------------------------

GSetPtr parse_gset(const std::string& text, const GroupLookup& groups) {
  const auto lines = content_lines(text);
  const Line& head = expect(lines, 0, "gset");
  const auto hw = words(head.text);
  if (hw.size() != 4 || hw[2] != "over") fail_at(head, "expected 'gset <name> over <group>'");
  const GroupPtr g = groups(hw[3]);
  const Line& sz = expect(lines, 1, "size");
  const auto sw = words(sz.text);
  if (sw.size() != 2) fail_at(sz, "expected 'size <n>'");
  const int n = to_int(sz, sw[1]);
  if (n < 0) fail_at(sz, "size must be non-negative");
  expect(lines, 2, "action");
  std::size_t at = 3;
  auto rows = read_rows(lines, at, static_cast<std::size_t>(g->order()), static_cast<std::size_t>(n));
  if (at != lines.size()) fail_at(lines[at], "trailing input after action rows");
  for (const auto& row : rows)
    for (int x : row)
      if (x < 0 || x >= n) throw InputError("gset " + hw[1] + ": action entry out of range");
  auto x = std::make_shared<GSet>(GSet::from_rows(g, rows, hw[1]));
  if (!x->is_valid()) throw InputError("gset " + hw[1] + " is not a G-action");
  return x;
}

std::string format_gset(const GSet& x, const std::string& name, const std::string& group) {
  std::ostringstream os;
  os << "gset " << name << " over " << group << "\nsize " << x.size() << "\naction\n";
  print_rows(os, x.action_rows());
  return os.str();
}

NamedGMap parse_gmap(const std::string& text, const GSetLookup& sets) {
  const auto lines = content_lines(text);
  const Line& head = expect(lines, 0, "gmap");
  const auto hw = words(head.text);
  if (hw.size() != 4 || hw[2] != "->") fail_at(head, "expected 'gmap <src> -> <dst>'");
  const GSetPtr src = sets(hw[1]);
  const GSetPtr dst = sets(hw[3]);
  const Line& im = expect(lines, 1, "images");
  if (lines.size() != 2) fail_at(lines[2], "trailing input after images");
  auto images = int_row(Line{im.text.substr(6), im.number}, static_cast<std::size_t>(src->size()));
  for (int y : images)
    if (y < 0 || y >= dst->size()) fail_at(im, "image out of range");
  GMap f(src, dst, std::move(images), false);
  if (!f.is_equivariant()) fail_at(im, "map is not G-equivariant");
  return NamedGMap{hw[1], hw[3], std::move(f)};
}

std::string format_gmap(const GMap& f, const std::string& src, const std::string& dst) {
  std::ostringstream os;
  os << "gmap " << src << " -> " << dst << "\nimages";
  for (int y : f.images()) os << " " << y;
  os << "\n";
  return os.str();
}

// ---- G-rings ----------------------------------------------------------------

GRingPtr parse_gring(const std::string& text, const GroupLookup& groups) {
  const auto lines = content_lines(text);
  const Line& head = expect(lines, 0, "gring");
  const auto hw = words(head.text);
  if (hw.size() != 4 || hw[2] != "over") fail_at(head, "expected 'gring <name> over <group>'");
  const GroupPtr g = groups(hw[3]);
  const Line& el = expect(lines, 1, "elements");
  const auto ew = words(el.text);
  if (ew.size() != 2) fail_at(el, "expected 'elements <n>'");
  const int n = to_int(el, ew[1]);
  if (n <= 0) fail_at(el, "a ring has at least one element");
  std::size_t at = 2;
  std::vector<std::string> labels;
  if (at < lines.size() && words(lines[at].text)[0] == "labels") {
    auto lw = words(lines[at].text);
    labels.assign(lw.begin() + 1, lw.end());
    if (labels.size() != static_cast<std::size_t>(n)) fail_at(lines[at], "one label per element expected");
    ++at;
  }
  const auto un = static_cast<std::size_t>(n);
  expect(lines, at++, "add");
  auto add = read_rows(lines, at, un, un);
  expect(lines, at++, "mul");
  auto mul = read_rows(lines, at, un, un);
  expect(lines, at++, "action");
  auto action = read_rows(lines, at, static_cast<std::size_t>(g->order()), un);
  if (at != lines.size()) fail_at(lines[at], "trailing input after action rows");
  for (const auto* tab : {&add, &mul, &action})
    for (const auto& row : *tab)
      for (int x : row)
        if (x < 0 || x >= n) throw InputError("gring " + hw[1] + ": table entry out of range");
  LevelRing ring = LevelRing::finite(add, mul, std::move(labels));
  const RingAxiomReport ax = check_ring_axioms(ring);
  if (!ax.ok) throw InputError("gring " + hw[1] + ": " + ax.failure);
  return std::make_shared<const GRing>(g, std::move(ring), std::move(action), hw[1]);
}

std::string format_gring(const GRing& r, const std::string& group) {
  std::ostringstream os;
  const LevelRing& ring = r.ring();
  std::string name = r.name();
  std::replace(name.begin(), name.end(), ' ', '-');  // names are single words in the header
  os << "gring " << name << " over " << group << "\nelements " << ring.size() << "\n";
  bool numeric = true;
  for (std::size_t i = 0; i < ring.size(); ++i) numeric &= ring.labels()[i] == std::to_string(i);
  if (!numeric) {
    os << "labels";
    for (const auto& l : ring.labels()) os << " " << l;
    os << "\n";
  }
  os << "add\n";
  print_rows(os, ring.add_table());
  os << "mul\n";
  print_rows(os, ring.mul_table());
  os << "action\n";
  print_rows(os, r.action());
  return os.str();
}

// ---- Ideals -----------------------------------------------------------------

IdealFamily parse_ideal(const std::string& text, const FunctorLookup& functors) {
  const auto lines = content_lines(text);
  const Line& head = expect(lines, 0, "ideal");
  if (head.text.rfind("ideal over ", 0) != 0) fail_at(head, "expected 'ideal over <functor>'");
  const std::string designator = trim(head.text.substr(11));
  std::size_t at = 1;
  std::string group;
  if (at < lines.size() && words(lines[at].text)[0] == "group") {
    const auto gw = words(lines[at].text);
    if (gw.size() != 2) fail_at(lines[at], "expected 'group <name>'");
    group = gw[1];
    ++at;
  }
  const FunctorPtr t = functors(designator, group);
  std::vector<std::optional<LevelIdeal>> levels(t->num_levels());
  for (; at < lines.size(); ++at) {
    const Line& l = lines[at];
    if (l.text.rfind("level ", 0) != 0) fail_at(l, "'level <H>: ...' expected");
    const auto colon = l.text.find(':');
    if (colon == std::string::npos) fail_at(l, "':' expected after the level name");
    const std::string name = trim(l.text.substr(6, colon - 6));
    const auto cls = t->catalog().class_by_name(name);
    if (!cls) fail_at(l, "unknown level '" + name + "'");
    if (levels[*cls]) fail_at(l, "level " + name + " given twice");
    std::string body = trim(l.text.substr(colon + 1));
    const LevelRing& r = t->level(*cls);
    try {
      if (r.is_finite()) {
        if (body.size() < 2 || body.front() != '{' || body.back() != '}') fail_at(l, "'{...}' expected");
        LevelIdeal li = level_zero(r);
        li.members.assign(r.size(), false);
        for (const auto& e : split_top(body.substr(1, body.size() - 2), ','))
          li.members[t->parse(*cls, e)[0]] = true;
        levels[*cls] = std::move(li);
      } else {
        if (body.rfind("lattice", 0) != 0) fail_at(l, "'lattice [...]' expected");
        body = trim(body.substr(7));
        if (body.size() < 2 || body.front() != '[' || body.back() != ']') fail_at(l, "'[...]' expected");
        std::vector<Value> gens;
        for (const auto& e : split_top(body.substr(1, body.size() - 2), ';')) gens.push_back(t->parse(*cls, e));
        levels[*cls] = level_span(r, gens);
      }
    } catch (const InputError& e) {
      if (std::string(e.what()).rfind("line ", 0) == 0) throw;
      fail_at(l, e.what());
    }
  }
  std::vector<LevelIdeal> out;
  for (std::size_t c = 0; c < levels.size(); ++c) {
    if (!levels[c]) throw InputError("ideal file has no line for level " + t->catalog().class_name(c));
    out.push_back(std::move(*levels[c]));
  }
  return IdealFamily(t, std::move(out));
}

std::string format_ideal(const IdealFamily& i, const std::string& designator, const std::string& group) {
  const std::string body = i.format();
  std::string out = "ideal over " + designator + "\n";
  if (!group.empty()) out += "group " + group + "\n";
  return out + body.substr(body.find('\n') + 1);
}

// ---- Maps and literals ------------------------------------------------------

TransitiveMap parse_transitive_map(const GroupContext& ctx, const std::string& text) {
  const SubgroupCatalog& cat = ctx.catalog();
  const std::string s = trim(text);
  TransitiveMap f;
  const auto arrow = s.find("->");
  if (arrow != std::string::npos) {
    std::string dst = s.substr(arrow + 2);
    const auto at = dst.find('@');
    if (at != std::string::npos) {
      try {
        std::size_t used = 0;
        f.g = std::stoi(dst.substr(at + 1), &used);
        if (used != dst.size() - at - 1) throw InputError("");
      } catch (const std::exception&) {
        throw InputError("bad group element in map '" + s + "'");
      }
      if (f.g < 0 || f.g >= ctx.group().order()) throw InputError("group element out of range in map '" + s + "'");
      dst = dst.substr(0, at);
    }
    const auto a = cat.class_by_name(trim(s.substr(0, arrow)));
    const auto b = cat.class_by_name(trim(dst));
    if (!a || !b) throw InputError("unknown subgroup class in map '" + s + "'");
    f.src = *a;
    f.dst = *b;
  } else if (s.size() > 2 && s[0] == 'p') {
    bool found = false;
    for (std::size_t k = 2; k < s.size() && !found; ++k) {
      const auto b = cat.class_by_name(s.substr(1, k - 1));
      const auto a = cat.class_by_name(s.substr(k));
      if (a && b) {
        f = TransitiveMap{*a, *b, 0};
        found = true;
      }
    }
    if (!found) throw InputError("unknown projection '" + s + "'");
  } else {
    throw InputError("map expected as '<K>-><H>[@g]' or 'p<H><K>', got '" + s + "'");
  }
  if (!ctx.is_valid(f)) throw InputError("'" + s + "' is not a G-map between coset spaces");
  return ctx.canonical(f);
}

LevelElement parse_level_element(const TambaraFunctor& t, const std::string& text, std::size_t default_level) {
  const auto colon = text.find(':');
  if (colon != std::string::npos) {
    // An optional functor word may precede the level name ("omega G: ...").
    const auto prefix = words(text.substr(0, colon));
    const auto cls = prefix.empty() ? std::nullopt : t.catalog().class_by_name(prefix.back());
    if (!cls) throw InputError("unknown level in '" + text + "'");
    return LevelElement{*cls, t.parse(*cls, trim(text.substr(colon + 1)))};
  }
  return LevelElement{default_level, t.parse(default_level, trim(text))};
}

}  // namespace tambara
