#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wordeq/alphabet.hpp"
#include "wordeq/types.hpp"

namespace wordeq {

/// An explicit word between variable occurrences.
struct ExplicitWord {
  std::vector<Sym> syms;
  uint64_t uid = 0;            // stable identity for per-phase accounting
  int orig_index = -1;         // word number on its side of the input equation
  int became_short_phase = -1; // phase in which |syms| first dropped to <= N
  int overdue_since = -1;      // phase in which the word was flagged overdue
  int short_id = -1;           // per-phase dedup id (linear engine)

  size_t size() const { return syms.size(); }
  bool empty() const { return syms.empty(); }
  bool is_short(int n) const { return syms.size() <= static_cast<size_t>(n); }
};

/// One side of an equation: words.size() == x_count()+1, with the words
/// interleaved by X occurrences. An empty first (last) entry means the side
/// starts (ends) with X.
struct Side {
  std::vector<ExplicitWord> words;

  int x_count() const { return static_cast<int>(words.size()) - 1; }
  bool starts_with_x() const { return x_count() >= 1 && words.front().empty(); }
  bool ends_with_x() const { return x_count() >= 1 && words.back().empty(); }
  bool empty() const { return x_count() == 0 && words.front().empty(); }
  size_t letter_count() const;
  size_t token_count() const { return letter_count() + static_cast<size_t>(x_count()); }

  // kVar marks variable occurrences in the token stream.
  void to_tokens(std::vector<Sym>& out) const;

  std::optional<Sym> front_token() const;
  std::optional<Sym> back_token() const;
  void pop_front();
  void pop_back();
};

struct Equation {
  Side lhs, rhs;

  // The side beginning with a letter; lhs wins ties in transient states.
  const Side& letter_side() const { return lhs.starts_with_x() ? rhs : lhs; }
  Side& letter_side() { return lhs.starts_with_x() ? rhs : lhs; }
  const Side& x_side() const { return lhs.starts_with_x() ? lhs : rhs; }
  Side& x_side() { return lhs.starts_with_x() ? lhs : rhs; }

  const ExplicitWord& first_word() const { return letter_side().words.front(); }
  ExplicitWord& first_word() { return letter_side().words.front(); }

  // The nonempty of the two terminal words, or null while both are empty.
  const ExplicitWord* last_word() const;
  ExplicitWord* last_word();
};

/// An ordered system of equations over one variable, sharing one letter table
/// and one popped record. Splitting inserts sub-equations in place.
struct EqSystem {
  Alphabet alphabet;
  std::vector<Equation> eqs;
  PoppedRecord popped;
  int phase = 0;
  uint64_t next_uid = 1;

  ExplicitWord make_word(std::vector<Sym> syms, int orig_index = -1) {
    ExplicitWord w;
    w.syms = std::move(syms);
    w.uid = next_uid++;
    w.orig_index = orig_index;
    return w;
  }

  size_t total_symbols() const;
  bool is_unary() const;  // every occurring letter equal
};

struct CanonOutcome {
  enum class Kind { Ok, NoSolution, Universal, UniqueExplicit };
  Kind kind = Kind::Ok;
  // Words w from equations that collapsed to X = w, in encounter order.
  std::vector<std::vector<Sym>> unique_words;
};

/// Pipeline status threaded through mutating operations.
struct SysState {
  enum class Kind { Ok, NoSolution, AllTrivial, Unique, ExitAStar };
  Kind kind = Kind::Ok;
  std::vector<std::vector<Sym>> unique_words;

  static SysState ok() { return {}; }
  bool is_ok() const { return kind == Kind::Ok; }
};

SysState to_sys_state(CanonOutcome out);

/// Repeatedly removes identical leading/trailing symbols from both sides of
/// every equation; detects mismatched ends, equations that vanish, and
/// equations collapsing to X = w. Trivially true equations are dropped.
CanonOutcome canonicalize(EqSystem& sys);
CanonOutcome canonicalize_equation(EqSystem& sys, size_t idx);

/// True iff deleting every X occurrence from both sides yields equal strings.
bool epsilon_check(std::span<const Sym> lhs_tokens, std::span<const Sym> rhs_tokens);
bool epsilon_check(const Equation& eq);

struct FirstLastProfile {
  Sym a = -1;           // first letter of A0 of the first equation
  int a_prefix_len = 0; // run of a starting A0 (meaningful when A0 not in a+)
  Sym b = -1;           // last letter of the first equation's last word
  int b_suffix_len = 0;
};

FirstLastProfile first_last_profile(const EqSystem& sys);

/// Replaces equation `eq_index` by the two sub-equations obtained by cutting
/// out the matched pair X w X at lhs word `i` and rhs word `j`. Both parts are
/// re-canonicalized; trivial parts are dropped. Throws std::logic_error when
/// the cut points are not aligned (unequal words or not X-flanked).
SysState split_equation(EqSystem& sys, size_t eq_index, size_t i, size_t j);

/// Form diagnostics; empty on a canonical system.
std::vector<std::string> check_form(const EqSystem& sys);

/// Drops tombstones left by in-place pair replacement.
void compact_words(EqSystem& sys);

}  // namespace wordeq
