#pragma once

#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "wordeq/types.hpp"

namespace wordeq {

struct EqSystem;

/// Thrown by expand() when the expansion would exceed the caller's limit.
/// Carries the weight so the caller can still report the length.
class ExpandLimitError : public std::runtime_error {
 public:
  explicit ExpandLimitError(Weight w)
      : std::runtime_error("expansion exceeds limit"), weight(w) {}
  Weight weight;
};

/// How a letter expands back to the original alphabet.
struct Expansion {
  enum class Kind : uint8_t { Original, Pair, Block };
  Kind kind = Kind::Original;
  char32_t codepoint = 0;  // Original
  GramId left = -1;        // Pair
  GramId right = -1;       // Pair
  GramId base = -1;        // Block
  uint64_t count = 0;      // Block
};

/// Letter table. Two id spaces: the expansion grammar is append-only with
/// stable GramIds (kept for the whole run so any reported solution can be
/// expanded later), while equations hold dense Syms that are compacted by
/// renumber() at the end of each phase. Fresh letters are memoized per phase
/// so equal pairs/blocks anywhere in the system compress to the same letter.
class Alphabet {
 public:
  Sym add_original(char32_t cp);
  Sym fresh_pair_letter(Sym a, Sym b);
  Sym fresh_block_letter(Sym a, uint64_t len);

  // Clears the per-phase memo tables.
  void begin_phase();

  Weight weight(Sym s) const { return grammar_[gram_of(s)].weight; }
  GramId gram_of(Sym s) const { return sym_to_gram_.at(static_cast<size_t>(s)); }
  Weight gram_weight(GramId g) const { return grammar_[static_cast<size_t>(g)].weight; }
  size_t sym_count() const { return sym_to_gram_.size(); }
  size_t gram_count() const { return grammar_.size(); }
  const Expansion& rule(GramId g) const { return grammar_[static_cast<size_t>(g)].rule; }

  /// Full original-alphabet expansion, or ExpandLimitError carrying the weight.
  std::u32string expand(GramId g, uint64_t limit) const;
  std::u32string expand_sym(Sym s, uint64_t limit) const { return expand(gram_of(s), limit); }
  std::u32string expand_seq(const std::vector<GramId>& gs, uint64_t limit) const;

  // Replaces the current symbol table; used by renumber().
  void reset_sym_table(std::vector<GramId> table) { sym_to_gram_ = std::move(table); }

 private:
  struct Entry {
    Expansion rule;
    Weight weight = 0;
  };

  Sym push_sym(GramId g) {
    sym_to_gram_.push_back(g);
    return static_cast<Sym>(sym_to_gram_.size() - 1);
  }

  std::vector<Entry> grammar_;
  std::vector<GramId> sym_to_gram_;
  std::unordered_map<uint64_t, Sym> pair_memo_;
  std::unordered_map<uint64_t, Sym> block_memo_;
};

/// Letters popped off X so far. Prefix is outermost first, suffix innermost
/// first: the original solution is expand(prefix) ++ current ++ expand(suffix).
struct PoppedRecord {
  std::vector<GramId> prefix;
  std::vector<GramId> suffix;
  Weight prefix_weight = 0;
  Weight suffix_weight = 0;

  void push_prefix(const Alphabet& a, Sym s) {
    prefix.push_back(a.gram_of(s));
    prefix_weight += a.weight(s);
  }
  // the freshest popped letter sits closest to X, i.e. first in the list
  void push_suffix(const Alphabet& a, Sym s) {
    suffix.insert(suffix.begin(), a.gram_of(s));
    suffix_weight += a.weight(s);
  }
};

/// Re-identifies the letters occurring in the system with consecutive ids and
/// rewrites all occurrences; the expansion grammar is untouched.
void renumber(EqSystem& sys);

}  // namespace wordeq
