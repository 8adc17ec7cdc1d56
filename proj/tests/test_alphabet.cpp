#include <doctest.h>

#include <random>

#include "testutil.hpp"
#include "wordeq/alphabet.hpp"

using namespace wordeq;
using namespace wordeq::testutil;

TEST_CASE("fresh pair letters") {
  Alphabet a;
  Sym sa = a.add_original(U'a');
  Sym sb = a.add_original(U'b');
  Sym c = a.fresh_pair_letter(sa, sb);
  CHECK(a.weight(c) == 2);
  CHECK(u32_to_utf8(a.expand_sym(c, 10)) == "ab");
  // (c, a) expands "aba"
  Sym d = a.fresh_pair_letter(c, sa);
  CHECK(a.weight(d) == 3);
  CHECK(u32_to_utf8(a.expand_sym(d, 10)) == "aba");
  CHECK_THROWS_WITH_AS(a.fresh_pair_letter(sa, sa), "block, not pair", std::invalid_argument);
  // memoized within a phase
  CHECK(a.fresh_pair_letter(sa, sb) == c);
  a.begin_phase();
  CHECK(a.fresh_pair_letter(sa, sb) != c);
}

TEST_CASE("fresh block letters") {
  Alphabet a;
  Sym sa = a.add_original(U'a');
  Sym sb = a.add_original(U'b');
  Sym a3 = a.fresh_block_letter(sa, 3);
  CHECK(a.weight(a3) == 3);
  CHECK(u32_to_utf8(a.expand_sym(a3, 10)) == "aaa");
  Sym c = a.fresh_pair_letter(sa, sb);
  Sym c2 = a.fresh_block_letter(c, 2);
  CHECK(a.weight(c2) == 4);
  CHECK(u32_to_utf8(a.expand_sym(c2, 10)) == "abab");
  CHECK_THROWS_AS(a.fresh_block_letter(sa, 1), std::invalid_argument);
  CHECK(a.fresh_block_letter(sa, 3) == a3);
}

TEST_CASE("pair of pair then block expands correctly") {
  Alphabet a;
  Sym sa = a.add_original(U'a');
  Sym sb = a.add_original(U'b');
  Sym ab = a.fresh_pair_letter(sa, sb);
  Sym b3 = a.fresh_block_letter(ab, 3);
  CHECK(u32_to_utf8(a.expand_sym(b3, 10)) == "ababab");
  CHECK(a.weight(b3) == 6);
}

TEST_CASE("expand limit carries the weight") {
  Alphabet a;
  Sym s = a.add_original(U'a');
  for (int i = 0; i < 30; ++i) s = a.fresh_block_letter(s, 2);  // weight 2^30
  try {
    a.expand_sym(s, 1000000);
    FAIL("expected ExpandLimitError");
  } catch (const ExpandLimitError& e) {
    CHECK(e.weight == (uint64_t{1} << 30));
  }
}

TEST_CASE("expansion laws hold on random grammars") {
  std::mt19937_64 rng(7);
  Alphabet a;
  std::vector<Sym> pool = {a.add_original(U'a'), a.add_original(U'b'), a.add_original(U'c')};
  for (int step = 0; step < 60; ++step) {
    if (rng() % 2 == 0) {
      Sym x = pool[rng() % pool.size()], y = pool[rng() % pool.size()];
      if (x == y) continue;
      Sym c = a.fresh_pair_letter(x, y);
      REQUIRE(a.expand_sym(c, 1 << 20) ==
              a.expand_sym(x, 1 << 20) + a.expand_sym(y, 1 << 20));
      REQUIRE(a.weight(c) == a.weight(x) + a.weight(y));
      pool.push_back(c);
    } else {
      Sym x = pool[rng() % pool.size()];
      uint64_t k = 2 + rng() % 3;
      if (a.weight(x) * k > (1 << 18)) continue;
      Sym c = a.fresh_block_letter(x, k);
      std::u32string want;
      for (uint64_t i = 0; i < k; ++i) want += a.expand_sym(x, 1 << 20);
      REQUIRE(a.expand_sym(c, 1 << 20) == want);
      pool.push_back(c);
    }
  }
}

TEST_CASE("renumber compacts symbol ids") {
  EqSystem sys = S("abcX = Xcba");
  // introduce letters that fall out of use
  Sym x = sys.alphabet.add_original(U'z');
  (void)x;
  size_t before = sys.alphabet.sym_count();
  CHECK(before > 3);
  renumber(sys);
  CHECK(sys.alphabet.sym_count() == 3);
  for (const auto& eq : sys.eqs)
    for (const auto* side : {&eq.lhs, &eq.rhs})
      for (const auto& w : side->words)
        for (Sym s : w.syms) CHECK(s < static_cast<Sym>(3));
  // words still expand to the original letters
  CHECK(u32_to_utf8(sys.alphabet.expand_sym(sys.eqs[0].lhs.words[0].syms[0], 10)) == "a");
  // idempotent
  renumber(sys);
  CHECK(sys.alphabet.sym_count() == 3);
}

TEST_CASE("renumber on an empty system") {
  EqSystem sys;
  sys.alphabet.add_original(U'a');
  renumber(sys);
  CHECK(sys.alphabet.sym_count() == 0);
}
