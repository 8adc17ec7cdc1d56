#include <doctest.h>

#include <random>

#include "testutil.hpp"
#include "wordeq/generate.hpp"

using namespace wordeq;
using namespace wordeq::testutil;

TEST_CASE("canonicalize outcomes") {
  SUBCASE("identical sides are universal") {
    EqSystem sys = S("aXb = aXb");
    CHECK(canonicalize(sys).kind == CanonOutcome::Kind::Universal);
    CHECK(sys.eqs.empty());
  }
  SUBCASE("trailing X trimmed, unique explicit word") {
    EqSystem sys = S("abX = XX");
    CanonOutcome out = canonicalize(sys);
    REQUIRE(out.kind == CanonOutcome::Kind::UniqueExplicit);
    REQUIRE(out.unique_words.size() == 1);
    CHECK(out.unique_words[0].size() == 2);
  }
  SUBCASE("mismatched trailing letters") {
    EqSystem sys = S("Xaa = aXb");
    CHECK(canonicalize(sys).kind == CanonOutcome::Kind::NoSolution);
  }
  SUBCASE("form (1) is reached") {
    EqSystem sys = S("abX = Xab");
    CHECK(canonicalize(sys).kind == CanonOutcome::Kind::Ok);
    CHECK(check_form(sys).empty());
    CHECK(sys.eqs[0].lhs.x_count() == 1);
    CHECK_FALSE(sys.eqs[0].lhs.starts_with_x());
    CHECK(sys.eqs[0].rhs.starts_with_x());
  }
}

TEST_CASE("epsilon check") {
  CHECK(epsilon_check(P("aX = Xa").lhs, P("aX = Xa").rhs));
  {
    auto eq = P("aX = Xa");
    CHECK(epsilon_check(eq.lhs, eq.rhs));
  }
  {
    auto eq = P("Xaa = aXX");
    CHECK_FALSE(epsilon_check(eq.lhs, eq.rhs));
  }
  {
    auto eq = P("abXaX = XbaXa");
    CHECK_FALSE(epsilon_check(eq.lhs, eq.rhs));  // "aba" vs "baa"
  }
}

TEST_CASE("epsilon verdict is invariant under trimming") {
  std::mt19937_64 rng(11);
  for (int tc = 0; tc < 200; ++tc) {
    ParsedEquation eq = gen_random(rng(), 4 + rng() % 30, 1 + rng() % 3, rng() % 2 == 0);
    bool before = epsilon_check(eq.lhs, eq.rhs);
    EqSystem sys = make_system(eq);
    CanonOutcome out = canonicalize(sys);
    if (out.kind != CanonOutcome::Kind::Ok) continue;
    REQUIRE(sys.eqs.size() == 1);
    bool after = epsilon_check(sys.eqs[0]);
    REQUIRE(before == after);
  }
}

TEST_CASE("first/last profile") {
  SUBCASE("aabXc = XabXc") {
    // built directly: canonicalize would collapse this equation
    EqSystem sys = S("aabXc = XabXc");
    FirstLastProfile p = first_last_profile(sys);
    CHECK(u32_to_utf8(sys.alphabet.expand_sym(p.a, 4)) == "a");
    CHECK(p.a_prefix_len == 2);
    CHECK(u32_to_utf8(sys.alphabet.expand_sym(p.b, 4)) == "c");
    CHECK(p.b_suffix_len == 1);
  }
  SUBCASE("abX = Xab") {
    EqSystem sys = SC("abX = Xab");
    FirstLastProfile p = first_last_profile(sys);
    CHECK(u32_to_utf8(sys.alphabet.expand_sym(p.a, 4)) == "a");
    CHECK(p.a_prefix_len == 1);
    CHECK(u32_to_utf8(sys.alphabet.expand_sym(p.b, 4)) == "b");
    CHECK(p.b_suffix_len == 1);
  }
  SUBCASE("aaaXb = Xaab") {
    EqSystem sys = S("aaaXb = Xaab");
    FirstLastProfile p = first_last_profile(sys);
    CHECK(p.a_prefix_len == 3);
    CHECK(p.b_suffix_len == 1);
  }
}

TEST_CASE("check_form diagnostics") {
  EqSystem sys = SC("abX = Xab");
  CHECK(check_form(sys).empty());
  // empty A0
  EqSystem bad = SC("abX = Xab");
  bad.eqs[0].lhs.words[0].syms.clear();
  auto diags = check_form(bad);
  CHECK_FALSE(diags.empty());
}

TEST_CASE("split at a matched X w X pair") {
  // a X ab X b = b X ab X a ; cutting at the shared "ab" gives a=b (no solution)
  EqSystem sys = S("aXabXb = bXabXa");
  SysState st = split_equation(sys, 0, 1, 1);
  CHECK(st.kind == SysState::Kind::NoSolution);

  // matched halves that canonicalize away entirely
  EqSystem sys2 = S("aXcXb = aXcXb");
  SysState st2 = split_equation(sys2, 0, 1, 1);
  CHECK(st2.is_ok());
  CHECK(sys2.eqs.empty());

  // misaligned cut points are a caller bug
  EqSystem sys3 = S("aXabXb = bXbaXa");
  CHECK_THROWS_AS(split_equation(sys3, 0, 1, 1), std::logic_error);
}

TEST_CASE("split keeps equation order") {
  // X ab X cd X = X ab X cd X with distinct outer context, split at "ab"
  EqSystem sys = S("aXabXcdXz = bXabXcdXz");
  REQUIRE(sys.eqs.size() == 1);
  SysState st = split_equation(sys, 0, 1, 1);
  // first sub-equation a = b is unsatisfiable
  CHECK(st.kind == SysState::Kind::NoSolution);
}
