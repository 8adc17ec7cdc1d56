#include "wordeq/equation.hpp"

#include <algorithm>

namespace wordeq {

size_t Side::letter_count() const {
  size_t n = 0;
  for (const auto& w : words) n += w.syms.size();
  return n;
}

void Side::to_tokens(std::vector<Sym>& out) const {
  for (size_t i = 0; i < words.size(); ++i) {
    if (i) out.push_back(kVar);
    out.insert(out.end(), words[i].syms.begin(), words[i].syms.end());
  }
}

std::optional<Sym> Side::front_token() const {
  if (empty()) return std::nullopt;
  if (words.front().empty()) return kVar;
  return words.front().syms.front();
}

std::optional<Sym> Side::back_token() const {
  if (empty()) return std::nullopt;
  if (words.back().empty()) return kVar;
  return words.back().syms.back();
}

void Side::pop_front() {
  if (words.front().empty())
    words.erase(words.begin());
  else
    words.front().syms.erase(words.front().syms.begin());
}

void Side::pop_back() {
  if (words.back().empty())
    words.pop_back();
  else
    words.back().syms.pop_back();
}

const ExplicitWord* Equation::last_word() const {
  if (!lhs.words.back().empty()) return &lhs.words.back();
  if (!rhs.words.back().empty()) return &rhs.words.back();
  return nullptr;
}

ExplicitWord* Equation::last_word() {
  if (!lhs.words.back().empty()) return &lhs.words.back();
  if (!rhs.words.back().empty()) return &rhs.words.back();
  return nullptr;
}

size_t EqSystem::total_symbols() const {
  size_t n = 0;
  for (const auto& eq : eqs)
    n += eq.lhs.token_count() + eq.rhs.token_count();
  return n;
}

bool EqSystem::is_unary() const {
  Sym seen = -1;
  for (const auto& eq : eqs)
    for (const auto* side : {&eq.lhs, &eq.rhs})
      for (const auto& w : side->words)
        for (Sym s : w.syms) {
          if (seen < 0) seen = s;
          else if (s != seen) return false;
        }
  return true;
}

SysState to_sys_state(CanonOutcome out) {
  SysState st;
  switch (out.kind) {
    case CanonOutcome::Kind::Ok: st.kind = SysState::Kind::Ok; break;
    case CanonOutcome::Kind::NoSolution: st.kind = SysState::Kind::NoSolution; break;
    case CanonOutcome::Kind::Universal: st.kind = SysState::Kind::AllTrivial; break;
    case CanonOutcome::Kind::UniqueExplicit:
      st.kind = SysState::Kind::Unique;
      st.unique_words = std::move(out.unique_words);
      break;
  }
  return st;
}

namespace {

enum class EqStatus { Ok, Trivial, NoSolution, Unique };

EqStatus trim_and_classify(Equation& eq, std::vector<Sym>* unique_out) {
  auto& L = eq.lhs;
  auto& R = eq.rhs;
  for (;;) {
    auto f1 = L.front_token(), f2 = R.front_token();
    if (f1 && f2 && *f1 == *f2) {
      L.pop_front();
      R.pop_front();
      continue;
    }
    break;
  }
  for (;;) {
    if (L.empty() || R.empty()) break;
    auto b1 = L.back_token(), b2 = R.back_token();
    if (b1 && b2 && *b1 == *b2) {
      L.pop_back();
      R.pop_back();
      continue;
    }
    break;
  }
  bool le = L.empty(), re = R.empty();
  if (le && re) return EqStatus::Trivial;
  // Empty against anything nonempty: only epsilon could match, and epsilon is
  // handled separately, so no solution survives here.
  if (le || re) return EqStatus::NoSolution;
  auto f1 = *L.front_token(), f2 = *R.front_token();
  if (f1 != kVar && f2 != kVar) return EqStatus::NoSolution;  // distinct letters
  auto b1 = *L.back_token(), b2 = *R.back_token();
  if (b1 != kVar && b2 != kVar) return EqStatus::NoSolution;
  // X = w with w explicit
  auto is_single_x = [](const Side& s) {
    return s.x_count() == 1 && s.words[0].empty() && s.words[1].empty();
  };
  if (is_single_x(L) && R.x_count() == 0) {
    if (unique_out) *unique_out = R.words[0].syms;
    return EqStatus::Unique;
  }
  if (is_single_x(R) && L.x_count() == 0) {
    if (unique_out) *unique_out = L.words[0].syms;
    return EqStatus::Unique;
  }
  return EqStatus::Ok;
}

}  // namespace

CanonOutcome canonicalize_equation(EqSystem& sys, size_t idx) {
  CanonOutcome out;
  std::vector<Sym> w;
  switch (trim_and_classify(sys.eqs[idx], &w)) {
    case EqStatus::Ok:
      break;
    case EqStatus::Trivial:
      sys.eqs.erase(sys.eqs.begin() + static_cast<ptrdiff_t>(idx));
      out.kind = CanonOutcome::Kind::Universal;
      break;
    case EqStatus::NoSolution:
      out.kind = CanonOutcome::Kind::NoSolution;
      break;
    case EqStatus::Unique:
      sys.eqs.erase(sys.eqs.begin() + static_cast<ptrdiff_t>(idx));
      out.kind = CanonOutcome::Kind::UniqueExplicit;
      out.unique_words.push_back(std::move(w));
      break;
  }
  return out;
}

CanonOutcome canonicalize(EqSystem& sys) {
  CanonOutcome out;
  size_t i = 0;
  while (i < sys.eqs.size()) {
    std::vector<Sym> w;
    switch (trim_and_classify(sys.eqs[i], &w)) {
      case EqStatus::Ok:
        ++i;
        break;
      case EqStatus::Trivial:
        sys.eqs.erase(sys.eqs.begin() + static_cast<ptrdiff_t>(i));
        break;
      case EqStatus::NoSolution:
        out.kind = CanonOutcome::Kind::NoSolution;
        return out;
      case EqStatus::Unique:
        out.unique_words.push_back(std::move(w));
        sys.eqs.erase(sys.eqs.begin() + static_cast<ptrdiff_t>(i));
        break;
    }
  }
  if (!out.unique_words.empty())
    out.kind = CanonOutcome::Kind::UniqueExplicit;
  else if (sys.eqs.empty())
    out.kind = CanonOutcome::Kind::Universal;
  return out;
}

bool epsilon_check(std::span<const Sym> lhs_tokens, std::span<const Sym> rhs_tokens) {
  std::vector<Sym> a, b;
  for (Sym s : lhs_tokens)
    if (s != kVar) a.push_back(s);
  for (Sym s : rhs_tokens)
    if (s != kVar) b.push_back(s);
  return a == b;
}

bool epsilon_check(const Equation& eq) {
  std::vector<Sym> lt, rt;
  eq.lhs.to_tokens(lt);
  eq.rhs.to_tokens(rt);
  return epsilon_check(lt, rt);
}

FirstLastProfile first_last_profile(const EqSystem& sys) {
  FirstLastProfile p;
  if (sys.eqs.empty()) return p;
  const Equation& eq = sys.eqs.front();
  const ExplicitWord& a0 = eq.first_word();
  if (!a0.empty()) {
    p.a = a0.syms.front();
    int run = 0;
    for (Sym s : a0.syms) {
      if (s != p.a) break;
      ++run;
    }
    p.a_prefix_len = run;
  }
  if (const ExplicitWord* last = eq.last_word()) {
    p.b = last->syms.back();
    int run = 0;
    for (auto it = last->syms.rbegin(); it != last->syms.rend(); ++it) {
      if (*it != p.b) break;
      ++run;
    }
    p.b_suffix_len = run;
  }
  return p;
}

SysState split_equation(EqSystem& sys, size_t eq_index, size_t i, size_t j) {
  Equation& eq = sys.eqs[eq_index];
  auto& lw = eq.lhs.words;
  auto& rw = eq.rhs.words;
  if (i < 1 || i + 1 >= lw.size() || j < 1 || j + 1 >= rw.size())
    throw std::logic_error("split: cut word is not X-flanked");
  if (lw[i].syms != rw[j].syms)
    throw std::logic_error("split: cut points not aligned across sides");

  Equation first, second;
  first.lhs.words.assign(std::make_move_iterator(lw.begin()),
                         std::make_move_iterator(lw.begin() + static_cast<ptrdiff_t>(i)));
  first.rhs.words.assign(std::make_move_iterator(rw.begin()),
                         std::make_move_iterator(rw.begin() + static_cast<ptrdiff_t>(j)));
  second.lhs.words.assign(std::make_move_iterator(lw.begin() + static_cast<ptrdiff_t>(i) + 1),
                          std::make_move_iterator(lw.end()));
  second.rhs.words.assign(std::make_move_iterator(rw.begin() + static_cast<ptrdiff_t>(j) + 1),
                          std::make_move_iterator(rw.end()));

  sys.eqs[eq_index] = std::move(first);
  sys.eqs.insert(sys.eqs.begin() + static_cast<ptrdiff_t>(eq_index) + 1, std::move(second));

  SysState st;
  // canonicalize the second part first so indices stay valid on erase
  CanonOutcome o2 = canonicalize_equation(sys, eq_index + 1);
  CanonOutcome o1 = canonicalize_equation(sys, eq_index);
  for (CanonOutcome* o : {&o1, &o2}) {
    if (o->kind == CanonOutcome::Kind::NoSolution) {
      st.kind = SysState::Kind::NoSolution;
      return st;
    }
    if (o->kind == CanonOutcome::Kind::UniqueExplicit) {
      st.kind = SysState::Kind::Unique;
      for (auto& w : o->unique_words) st.unique_words.push_back(std::move(w));
    }
  }
  return st;
}

std::vector<std::string> check_form(const EqSystem& sys) {
  std::vector<std::string> bad;
  auto note = [&](size_t i, const std::string& msg) {
    bad.push_back(msg + " @eq" + std::to_string(i));
  };
  for (size_t i = 0; i < sys.eqs.size(); ++i) {
    const Equation& eq = sys.eqs[i];
    if (eq.lhs.empty() || eq.rhs.empty()) {
      note(i, "empty side");
      continue;
    }
    bool lx = eq.lhs.starts_with_x(), rx = eq.rhs.starts_with_x();
    if (lx == rx) note(i, lx ? "both sides start with X" : "no side starts with X");
    if (!lx || !rx) {
      if (eq.first_word().empty()) note(i, "A0 empty");
    }
    bool lex = eq.lhs.ends_with_x(), rex = eq.rhs.ends_with_x();
    if (lex == rex)
      note(i, lex ? "both terminal words empty" : "both terminal words nonempty");
  }
  return bad;
}

void compact_words(EqSystem& sys) {
  for (auto& eq : sys.eqs)
    for (auto* side : {&eq.lhs, &eq.rhs})
      for (auto& w : side->words)
        std::erase(w.syms, kTombstone);
}

}  // namespace wordeq
