#ifndef WLAB_FORMULA_HPP
#define WLAB_FORMULA_HPP

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wlab/errors.hpp"
#include "wlab/lattice.hpp"

namespace wlab {

// Immutable propositional formula over ~ & | ->, with ~a kept as a -> bot.
class Formula {
 public:
  enum class Kind { kVar, kBot, kTop, kAnd, kOr, kImp };

  static Formula var(int index) {
    if (index < 0) throw PreconditionError("variable index must be >= 0");
    return Formula(std::make_shared<Node>(Node{Kind::kVar, index, nullptr, nullptr}));
  }
  static Formula bot() { return Formula(std::make_shared<Node>(Node{Kind::kBot, -1, nullptr, nullptr})); }
  static Formula top() { return Formula(std::make_shared<Node>(Node{Kind::kTop, -1, nullptr, nullptr})); }
  static Formula conj(Formula a, Formula b) { return binary(Kind::kAnd, std::move(a), std::move(b)); }
  static Formula disj(Formula a, Formula b) { return binary(Kind::kOr, std::move(a), std::move(b)); }
  static Formula imp(Formula a, Formula b) { return binary(Kind::kImp, std::move(a), std::move(b)); }
  static Formula neg(Formula a) { return imp(std::move(a), bot()); }

  Kind kind() const { return node_->kind; }
  int var_index() const { return node_->var; }
  Formula left() const { return Formula(node_->lhs); }
  Formula right() const { return Formula(node_->rhs); }

  // Highest variable index used, -1 for a closed formula.
  int max_var() const {
    switch (kind()) {
      case Kind::kVar:
        return var_index();
      case Kind::kBot:
      case Kind::kTop:
        return -1;
      default:
        return std::max(left().max_var(), right().max_var());
    }
  }

  friend bool operator==(const Formula& a, const Formula& b) {
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
      case Kind::kVar:
        return a.var_index() == b.var_index();
      case Kind::kBot:
      case Kind::kTop:
        return true;
      default:
        return a.left() == b.left() && a.right() == b.right();
    }
  }
  friend bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }

  bool is_negation() const { return kind() == Kind::kImp && right().kind() == Kind::kBot; }

  std::string to_string() const { return print(kLevelImp); }

 private:
  struct Node;
  using NodePtr = std::shared_ptr<const Node>;
  struct Node {
    Kind kind;
    int var;
    NodePtr lhs;
    NodePtr rhs;
  };

  explicit Formula(NodePtr node) : node_(std::move(node)) {}

  static Formula binary(Kind k, Formula a, Formula b) {
    return Formula(std::make_shared<Node>(Node{k, -1, std::move(a.node_), std::move(b.node_)}));
  }

  // Precedence levels, loosest first; a subterm is parenthesized when its own
  // level is below what its context requires.
  static constexpr int kLevelImp = 0;
  static constexpr int kLevelOr = 1;
  static constexpr int kLevelAnd = 2;
  static constexpr int kLevelUnary = 3;

  int level() const {
    if (is_negation()) return kLevelUnary;
    switch (kind()) {
      case Kind::kImp:
        return kLevelImp;
      case Kind::kOr:
        return kLevelOr;
      case Kind::kAnd:
        return kLevelAnd;
      default:
        return kLevelUnary;
    }
  }

  std::string print(int required) const {
    std::string s;
    if (is_negation()) {
      s = "~" + left().print(kLevelUnary);
    } else {
      switch (kind()) {
        case Kind::kVar:
          s = "p" + std::to_string(var_index());
          break;
        case Kind::kBot:
          s = "bot";
          break;
        case Kind::kTop:
          s = "top";
          break;
        case Kind::kAnd:
          s = left().print(kLevelAnd) + " & " + right().print(kLevelUnary);
          break;
        case Kind::kOr:
          s = left().print(kLevelOr) + " | " + right().print(kLevelAnd);
          break;
        case Kind::kImp:
          s = left().print(kLevelOr) + " -> " + right().print(kLevelImp);
          break;
      }
    }
    if (level() < required) return "(" + s + ")";
    return s;
  }

  NodePtr node_;
};

namespace detail {

class FormulaParser {
 public:
  explicit FormulaParser(std::string_view text) : text_(text) {}

  Formula parse() {
    Formula f = parse_imp();
    skip_ws();
    if (pos_ < text_.size()) fail("unexpected trailing input", pos_);
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& what, std::size_t at) const {
    throw ParseError(what, static_cast<long long>(at) + 1);
  }

  void skip_ws() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
  }

  bool eat(std::string_view token) {
    skip_ws();
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  Formula parse_imp() {
    Formula lhs = parse_or();
    if (eat("->")) return Formula::imp(std::move(lhs), parse_imp());
    return lhs;
  }

  Formula parse_or() {
    Formula f = parse_and();
    while (eat("|")) f = Formula::disj(std::move(f), parse_and());
    return f;
  }

  Formula parse_and() {
    Formula f = parse_unary();
    while (eat("&")) f = Formula::conj(std::move(f), parse_unary());
    return f;
  }

  Formula parse_unary() {
    if (eat("~")) return Formula::neg(parse_unary());
    return parse_atom();
  }

  Formula parse_atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input", text_.size());
    std::size_t start = pos_;
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Formula f = parse_imp();
      skip_ws();
      if (pos_ >= text_.size() || text_[pos_] != ')') fail("expected ')'", pos_);
      ++pos_;
      return f;
    }
    if (c == 'p' && pos_ + 1 < text_.size() && is_digit(text_[pos_ + 1])) {
      ++pos_;
      long long index = 0;
      while (pos_ < text_.size() && is_digit(text_[pos_])) {
        index = index * 10 + (text_[pos_] - '0');
        if (index > 1'000'000) fail("variable index too large", start);
        ++pos_;
      }
      return Formula::var(static_cast<int>(index));
    }
    if (is_word_char(c)) {
      std::size_t end = pos_;
      while (end < text_.size() && is_word_char(text_[end])) ++end;
      std::string_view word = text_.substr(pos_, end - pos_);
      if (word == "bot") {
        pos_ = end;
        return Formula::bot();
      }
      if (word == "top") {
        pos_ = end;
        return Formula::top();
      }
      fail("unknown token", start);
    }
    fail("unexpected character", start);
  }

  static bool is_digit(char c) { return c >= '0' && c <= '9'; }
  static bool is_word_char(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Formula parse_formula(std::string_view text) { return detail::FormulaParser(text).parse(); }

namespace detail {

inline int eval_node(const FiniteLattice& L, const std::vector<std::vector<int>>& imp,
                     const Formula& f, const std::vector<int>& assignment) {
  switch (f.kind()) {
    case Formula::Kind::kVar: {
      int v = f.var_index();
      if (v >= static_cast<int>(assignment.size()))
        throw UnassignedVariable("p" + std::to_string(v) + " has no value");
      int e = assignment[v];
      if (e < 0 || e >= L.size) throw PreconditionError("assignment must map into the lattice");
      return e;
    }
    case Formula::Kind::kBot:
      return L.bottom;
    case Formula::Kind::kTop:
      return L.top;
    case Formula::Kind::kAnd:
      return L.meet(eval_node(L, imp, f.left(), assignment), eval_node(L, imp, f.right(), assignment));
    case Formula::Kind::kOr:
      return L.join(eval_node(L, imp, f.left(), assignment), eval_node(L, imp, f.right(), assignment));
    case Formula::Kind::kImp:
      return imp[eval_node(L, imp, f.left(), assignment)][eval_node(L, imp, f.right(), assignment)];
  }
  throw PreconditionError("malformed formula node");
}

inline std::vector<std::vector<int>> require_heyting(const FiniteLattice& L) {
  ResidualTable t = heyting_table(L);
  if (!t.ok()) throw MissingStructure("lattice admits no implication table");
  return std::move(t.table);
}

}  // namespace detail

inline int eval_formula(const FiniteLattice& L, const Formula& f, const std::vector<int>& assignment) {
  return detail::eval_node(L, detail::require_heyting(L), f, assignment);
}

inline bool is_valid(const FiniteLattice& L, const Formula& f) {
  auto imp = detail::require_heyting(L);
  int vars = f.max_var() + 1;
  std::vector<int> assignment(static_cast<std::size_t>(vars), 0);
  while (true) {
    if (detail::eval_node(L, imp, f, assignment) != L.top) return false;
    int i = vars - 1;
    while (i >= 0 && assignment[i] == L.size - 1) assignment[i--] = 0;
    if (i < 0) return true;
    ++assignment[i];
  }
}

inline bool jankov_valid(const FiniteLattice& L) {
  Formula weak_em = Formula::disj(Formula::neg(Formula::var(0)), Formula::neg(Formula::neg(Formula::var(0))));
  return is_valid(L, weak_em);
}

// Biconditional: weak excluded middle is valid exactly when bottom is
// meet-irreducible. Only stated for lattices whose top is join-irreducible;
// others are excluded, not judged.
inline bool check_jankov_iff(const FiniteLattice& L) {
  detail::require_heyting(L);
  IrreducibleSets irr = irreducibles(L);
  if (!irr.join_irreducible[L.top]) throw HypothesisError("top is join-reducible");
  bool valid = jankov_valid(L);
  bool irreducible_bottom = irr.meet_irreducible[L.bottom];
  if (valid != irreducible_bottom)
    throw WitnessError("weak excluded middle disagrees with bottom irreducibility");
  return valid;
}

// With an embedding of L1 into L2, validity transfers from the codomain to
// the domain; sampled rather than decided.
inline bool theory_containment_sample(const FiniteLattice& L1, const FiniteLattice& L2,
                                      const std::vector<int>& m, const std::vector<Formula>& formulas) {
  if (!hom_check(HomKind::kHeytingEmbedding, m, L1, L2))
    throw PreconditionError("map is not a structure embedding");
  for (const Formula& f : formulas)
    if (is_valid(L2, f) && !is_valid(L1, f)) return false;
  return true;
}

}  // namespace wlab

#endif
