#include <doctest.h>

#include <fstream>
#include <sstream>

#include "fixtures.hpp"
#include "tambara/error.hpp"

using namespace tambara;

namespace {

GroupPtr lookup(const std::string& name) { return builtin_group(name); }

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

TEST_CASE("group formats round-trip") {
  for (const auto& name : builtin_group_names()) {
    const std::string text = format_group(*builtin_group(name));
    CHECK(format_group(*parse_group(text)) == text);
  }
  const std::string table = "group z2\norder 2\ntable\n0 1\n1 0\n";
  const GroupPtr g = parse_group("# comment\n" + table + "\n");
  CHECK(g->order() == 2);
  CHECK(format_group(*g) == table);
}

TEST_CASE("group format errors carry line numbers") {
  CHECK_THROWS_WITH_AS(parse_group("group z\norder 2\ntable\n0 1\n"), "unexpected end of input: 2 rows expected",
                       InputError);
  CHECK_THROWS_WITH_AS(parse_group("group z\nsize 2\n"), "line 2: 'order' or 'perm' expected", InputError);
}

TEST_CASE("gset and gmap formats round-trip") {
  const std::string x = "gset X over c2\nsize 3\naction\n0 1 2\n1 0 2\n";
  const GSetPtr s = parse_gset(x, lookup);
  CHECK(format_gset(*s, "X", "c2") == x);
  const std::string y = "gset Y over c2\nsize 1\naction\n0\n0\n";
  const GSetPtr t = parse_gset(y, lookup);
  const std::string m = "gmap X -> Y\nimages 0 0 0\n";
  const NamedGMap f = parse_gmap(m, [&](const std::string& n) { return n == "X" ? s : t; });
  CHECK(format_gmap(f.map, f.src, f.dst) == m);
  CHECK_THROWS_AS(parse_gset("gset X over c2\nsize 2\naction\n0 1\n0 0\n", lookup), InputError);
  CHECK_THROWS_AS(parse_gmap("gmap Y -> X\nimages 0\n", [&](const std::string& n) { return n == "X" ? s : t; }),
                  InputError);
}

TEST_CASE("gring format round-trips, with and without labels") {
  const GroupPtr c2 = builtin_group("c2");
  for (const GRingPtr& r : {zmod_trivial(c2, 4), product_field(c2, 2, 2, true)}) {
    const std::string text = format_gring(*r, "c2");
    const GRingPtr back = parse_gring(text, [&](const std::string&) { return c2; });
    CHECK(format_gring(*back, "c2") == text);
    CHECK(back->action() == r->action());
  }
  CHECK_THROWS_AS(parse_gring("gring R over c2\nelements 2\nadd\n0 1\n1 1\nmul\n0 0\n0 1\naction\n0 1\n0 1\n",
                              [&](const std::string&) { return c2; }),
                  InputError);
}

TEST_CASE("ideal format round-trips through a functor lookup") {
  const ContextPtr ctx = test::context("c2");
  const FunctorPtr om = omega_functor(ctx);
  const FunctorPtr p = make_functor(ctx, "prodfield 2 2 trivial");
  auto functors = [&](const std::string& d, const std::string&) { return d == "omega" ? om : p; };
  const IdealFamily i = generate(om, {Generator{0, Value{2}}}).ideal;
  const std::string text = format_ideal(i, "omega", "c2");
  const IdealFamily back = parse_ideal(text, functors);
  CHECK(back == i);
  CHECK(format_ideal(back, "omega", "c2") == text);
  const IdealFamily j = generate(p, {Generator{1, p->parse(1, "(1,0)")}}).ideal;
  const std::string ftext = format_ideal(j, "prodfield 2 2 trivial");
  CHECK(ftext.find("{(0,0), (1,0)}") != std::string::npos);
  CHECK(parse_ideal(ftext, functors) == j);
}

TEST_CASE("the shipped 2*Omega file parses") {
  const ContextPtr ctx = test::context("c2");
  const FunctorPtr om = omega_functor(ctx);
  const auto blocks = split_blocks(slurp(TAMBARA_TEST_DATA "/two-omega.idl"));
  REQUIRE(blocks.size() == 1);
  const IdealFamily i = parse_ideal(blocks[0].text, [&](const std::string&, const std::string& g) {
    CHECK(g == "c2");
    return om;
  });
  CHECK_FALSE(check_ideal(i).is_ideal);
}

TEST_CASE("ideal format errors") {
  const FunctorPtr om = omega_functor(test::context("c2"));
  auto functors = [&](const std::string&, const std::string&) { return om; };
  CHECK_THROWS_AS(parse_ideal("ideal over omega\nlevel e: lattice [2*[G/e]]\n", functors), InputError);
  CHECK_THROWS_AS(parse_ideal("ideal over omega\nlevel Q: lattice []\nlevel G: lattice []\n", functors), InputError);
  CHECK_THROWS_AS(parse_ideal("ideal over omega\nlevel e: {1}\nlevel G: lattice []\n", functors), InputError);
}

TEST_CASE("documents split into blocks") {
  const auto b = split_blocks("# header\ngroup z\nperm 2\ngen 1 0\n\nideal over omega\ngroup c2\nlevel e: lattice []\n");
  REQUIRE(b.size() == 2);
  CHECK(b[0].keyword == "group");
  CHECK(b[1].keyword == "ideal");
  CHECK(b[1].text.find("group c2") != std::string::npos);
  CHECK_THROWS_AS(split_blocks("level e: {}\n"), InputError);
}

TEST_CASE("transitive map designators") {
  const ContextPtr ctx = test::context("s3");
  CHECK(parse_transitive_map(*ctx, "pGe") == ctx->projection(0, 3));
  CHECK(parse_transitive_map(*ctx, "e->H1") == TransitiveMap{0, 1, 0});
  CHECK(parse_transitive_map(*ctx, "pH1e") == TransitiveMap{0, 1, 0});
  // 1 lies in H1, so the twist is absorbed by canonicalization.
  CHECK(ctx->describe(parse_transitive_map(*ctx, "H1->H1@1")) == "H1->H1");
  CHECK(ctx->describe(parse_transitive_map(*ctx, "e->e@1")) == "e->e@1");
  CHECK_THROWS_AS(parse_transitive_map(*ctx, "H1->H2"), InputError);
  CHECK_THROWS_AS(parse_transitive_map(*ctx, "pQe"), InputError);
}

TEST_CASE("level-prefixed element literals") {
  const auto om = omega_functor(test::context("c2"));
  CHECK(parse_level_element(*om, "e: 2", 1).level == 0);
  CHECK(parse_level_element(*om, "omega G: 3*[G/e]", 0).value == om->parse(1, "3*[G/e]"));
  CHECK(parse_level_element(*om, "[G/G]", 1).level == 1);
}
