#include "wordeq/alphabet.hpp"

#include <algorithm>

#include "wordeq/equation.hpp"

namespace wordeq {

namespace {
uint64_t pair_key(Sym a, Sym b) {
  return (static_cast<uint64_t>(static_cast<uint32_t>(a)) << 32) |
         static_cast<uint32_t>(b);
}
uint64_t block_key(Sym a, uint64_t len) {
  // len is bounded by 3x the system size, well below 2^32 at any usable scale
  return (static_cast<uint64_t>(static_cast<uint32_t>(a)) << 32) ^ len;
}
}  // namespace

Sym Alphabet::add_original(char32_t cp) {
  Entry e;
  e.rule.kind = Expansion::Kind::Original;
  e.rule.codepoint = cp;
  e.weight = 1;
  grammar_.push_back(e);
  return push_sym(static_cast<GramId>(grammar_.size() - 1));
}

Sym Alphabet::fresh_pair_letter(Sym a, Sym b) {
  if (a == b) throw std::invalid_argument("block, not pair");
  auto key = pair_key(a, b);
  if (auto it = pair_memo_.find(key); it != pair_memo_.end()) return it->second;
  Entry e;
  e.rule.kind = Expansion::Kind::Pair;
  e.rule.left = gram_of(a);
  e.rule.right = gram_of(b);
  e.weight = weight(a) + weight(b);
  grammar_.push_back(e);
  Sym s = push_sym(static_cast<GramId>(grammar_.size() - 1));
  pair_memo_.emplace(key, s);
  return s;
}

Sym Alphabet::fresh_block_letter(Sym a, uint64_t len) {
  if (len < 2) throw std::invalid_argument("block length must be at least 2");
  auto key = block_key(a, len);
  if (auto it = block_memo_.find(key); it != block_memo_.end()) return it->second;
  Entry e;
  e.rule.kind = Expansion::Kind::Block;
  e.rule.base = gram_of(a);
  e.rule.count = len;
  e.weight = weight(a) * len;
  grammar_.push_back(e);
  Sym s = push_sym(static_cast<GramId>(grammar_.size() - 1));
  block_memo_.emplace(key, s);
  return s;
}

void Alphabet::begin_phase() {
  pair_memo_.clear();
  block_memo_.clear();
}

std::u32string Alphabet::expand(GramId g, uint64_t limit) const {
  Weight w = gram_weight(g);
  if (w > limit) throw ExpandLimitError(w);
  std::u32string out;
  out.reserve(static_cast<size_t>(w));
  // iterative expansion; a block frame re-emits its base `count` times
  struct Frame {
    GramId g;
    uint64_t repeat;
  };
  std::vector<Frame> stack;
  stack.push_back({g, 1});
  while (!stack.empty()) {
    Frame f = stack.back();
    stack.pop_back();
    const Expansion& r = rule(f.g);
    switch (r.kind) {
      case Expansion::Kind::Original:
        out.append(static_cast<size_t>(f.repeat), r.codepoint);
        break;
      case Expansion::Kind::Pair:
        if (f.repeat > 1) {
          stack.push_back({f.g, f.repeat - 1});
          stack.push_back({r.right, 1});
          stack.push_back({r.left, 1});
        } else {
          stack.push_back({r.right, 1});
          stack.push_back({r.left, 1});
        }
        break;
      case Expansion::Kind::Block:
        stack.push_back({r.base, r.count * f.repeat});
        break;
    }
  }
  return out;
}

std::u32string Alphabet::expand_seq(const std::vector<GramId>& gs, uint64_t limit) const {
  Weight total = 0;
  for (GramId g : gs) total += gram_weight(g);
  if (total > limit) throw ExpandLimitError(total);
  std::u32string out;
  out.reserve(static_cast<size_t>(total));
  for (GramId g : gs) out += expand(g, limit);
  return out;
}

void renumber(EqSystem& sys) {
  Alphabet& alpha = sys.alphabet;
  std::vector<Sym> remap(alpha.sym_count(), -1);
  std::vector<GramId> table;
  auto visit = [&](Sym s) {
    auto idx = static_cast<size_t>(s);
    if (remap[idx] < 0) {
      remap[idx] = static_cast<Sym>(table.size());
      table.push_back(alpha.gram_of(s));
    }
  };
  for (auto& eq : sys.eqs) {
    for (auto* side : {&eq.lhs, &eq.rhs})
      for (auto& w : side->words)
        for (Sym s : w.syms) visit(s);
  }
  for (auto& eq : sys.eqs) {
    for (auto* side : {&eq.lhs, &eq.rhs})
      for (auto& w : side->words)
        for (Sym& s : w.syms) s = remap[static_cast<size_t>(s)];
  }
  alpha.reset_sym_table(std::move(table));
}

}  // namespace wordeq
