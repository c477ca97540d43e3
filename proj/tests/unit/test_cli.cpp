#include <doctest.h>

#include <sstream>

#include "cli.hpp"

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = tambara::cli::run(args, out, err);
  return Run{code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("tam nm reproduces the C2 norm example") {
  const Run r = run({"tam", "nm", "--functor", "omega", "--group", "c2", "--map", "pGe", "--elem", "2*[G/e]"});
  CHECK(r.code == 0);
  CHECK(r.out == "2*[G/G] + 1*[G/e]\n");
}

TEST_CASE("res, tr and shriek") {
  CHECK(run({"tam", "res", "--map", "pGe", "--elem", "[G/e]"}).out == "2*[G/e]\n");
  CHECK(run({"tam", "tr", "--map", "pGe", "--elem", "1"}).out == "1*[G/e]\n");
  CHECK(run({"tam", "shriek", "--map", "pGe", "--elem", "2*[G/e]"}).out == "2*[G/G] + 1*[G/e]\n");
  CHECK(run({"tam", "nm", "--functor", "pz", "--map", "e->G", "--elem", "-5"}).out == "[25]\n");
}

TEST_CASE("ideal check on 2*Omega exits 1 with the counterexample") {
  const Run r = run({"ideal", "check", "--file", TAMBARA_TEST_DATA "/two-omega.idl"});
  CHECK(r.code == 1);
  CHECK(r.out.find("condition (iii) fails: nm along e->G of 2*[G/e] = 2*[G/G] + 1*[G/e] is not in I(G)") !=
        std::string::npos);
}

TEST_CASE("demo mrc over S3 prints the isomorphism table") {
  const Run r = run({"demo", "mrc", "--group", "s3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("level H2:") != std::string::npos);
  CHECK(r.out.find("verified") != std::string::npos);
}

TEST_CASE("every demo succeeds") {
  for (const char* d : {"norm-example", "mrc", "crt", "omega-domain", "spec-inclusion"}) {
    CAPTURE(d);
    CHECK(run({"demo", d}).code == 0);
  }
}

TEST_CASE("exit codes") {
  CHECK(run({"tam", "nm", "--map", "pGe", "--elem", "2*[G/x]"}).code == 2);
  CHECK(run({"group", "info", "--group", "a5"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"ideal", "check", "--file", "/nonexistent.idl"}).code == 2);
  CHECK(run({"gset", "maps", "--src", "X", "--dst", "Y"}).code == 2);
  CHECK(run({"tam", "axioms", "--functor", "zmod 4 trivial"}).code == 0);
  CHECK(run({"tam", "nm", "--cap-points", "1", "--map", "pGe", "--elem", "2*[G/e]"}).code == 3);
}

TEST_CASE("output is byte-identical across runs") {
  const std::vector<std::string> args{"demo", "omega-domain", "--group", "s3", "--pairs", "10"};
  CHECK(run(args).out == run(args).out);
  CHECK(run({"spec", "compute", "--functor", "prodfield 2 2 trivial"}).out ==
        run({"spec", "compute", "--functor", "prodfield 2 2 trivial"}).out);
}

TEST_CASE("spec and ideal commands") {
  const Run s = run({"spec", "compute", "--functor", "prodfield 2 2 trivial"});
  CHECK(s.code == 0);
  CHECK(s.out.find("flag connected = false (proved)") != std::string::npos);
  const Run g = run({"ideal", "gen", "--gen", "e: 2", "--trace"});
  CHECK(g.code == 0);
  CHECK(g.out.find("s2 = nm[e->G](s0) = 2*[G/G] + 1*[G/e] at G") != std::string::npos);
  const Run l = run({"ideal", "lift", "--gen", "e: 0"});
  CHECK(l.out.find("level G: lattice [-2*[G/G] + 1*[G/e]]") != std::string::npos);
  CHECK(run({"spec", "classify", "--functor", "omega"}).out.find("flag domain_like = true (by-theorem)") !=
        std::string::npos);
}

TEST_CASE("ideal files: member, op, radical, quotient, spec map") {
  const std::string z6 = TAMBARA_TEST_DATA "/z6-two.idl";
  const std::string z6b = TAMBARA_TEST_DATA "/z6-three.idl";
  const Run m = run({"ideal", "member", "--file", z6, "--elem", "e: 4"});
  CHECK(m.code == 0);
  CHECK(m.out.rfind("in\n", 0) == 0);
  CHECK(run({"ideal", "member", "--file", z6, "--elem", "G: 3"}).out.rfind("not-in", 0) == 0);
  const Run sum = run({"ideal", "op", "--op", "sum", "--file", z6, "--file", z6b});
  CHECK(sum.code == 0);
  CHECK(sum.out.find("level G: {0, 1, 2, 3, 4, 5}") != std::string::npos);
  const Run meet = run({"ideal", "op", "--op", "intersect", "--file", z6, "--file", z6b});
  CHECK(meet.out.find("level e: {0}") != std::string::npos);
  const Run q = run({"ideal", "quotient", "--file", z6});
  CHECK(q.code == 0);
  CHECK(q.out.find("level e: 2 elements") != std::string::npos);
  const Run rad = run({"ideal", "radical", "--file", TAMBARA_TEST_DATA "/z4-zero.idl"});
  CHECK(rad.out.find("level e: {0, 2}") != std::string::npos);
  const Run sm = run({"spec", "map", "--file", z6});
  CHECK(sm.code == 0);
  CHECK(sm.out.find("homeomorphism onto V(Ker): yes") != std::string::npos);
}

TEST_CASE("G-set and group documents") {
  const std::string doc = TAMBARA_TEST_DATA "/c2-sets.txt";
  const Run o = run({"gset", "orbits", "--file", doc, "--set", "X"});
  CHECK(o.code == 0);
  CHECK(o.out.find("2 orbit(s)") != std::string::npos);
  CHECK(run({"gset", "maps", "--file", doc, "--src", "X", "--dst", "P"}).out.rfind("1 equivariant", 0) == 0);
  const Run pi = run({"gset", "pi", "--file", doc, "--map", "F->P", "--along", "A->F"});
  CHECK(pi.code == 0);
  CHECK(pi.out.find("4 points") != std::string::npos);
  const Run e = run({"tam", "eval", "--file", doc, "--set", "X"});
  CHECK(e.out.find("product over 2 orbit(s)") != std::string::npos);
  const Run g = run({"group", "info", "--file", doc, "--group", "z2"});
  CHECK(g.code == 0);
  CHECK(g.out.find("order 2") != std::string::npos);
  const Run r = run({"spec", "compute", "--file", doc, "--functor", "gring F4", "--group", "c2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("flag field_like = true") != std::string::npos);
}
