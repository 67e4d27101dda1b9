#include "boolsemi/formula.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

namespace boolsemi {

struct Formula::Node {
  Kind kind;
  bool value = false;
  std::string name;
  std::vector<Formula> children;
};

Formula Formula::constant(bool value) {
  return Formula(std::make_shared<const Node>(Node{Kind::constant, value, {}, {}}));
}

Formula Formula::atom(std::string name) {
  return Formula(std::make_shared<const Node>(Node{Kind::atom, false, std::move(name), {}}));
}

Formula Formula::negation(Formula operand) {
  return Formula(std::make_shared<const Node>(Node{Kind::negation, false, {}, {std::move(operand)}}));
}

namespace {

template <class Node, class Kind, class F>
std::shared_ptr<const Node> binary(Kind kind, F lhs, F rhs) {
  return std::make_shared<const Node>(Node{kind, false, {}, {std::move(lhs), std::move(rhs)}});
}

}  // namespace

Formula Formula::conjunction(Formula lhs, Formula rhs) {
  return Formula(binary<Node>(Kind::conjunction, std::move(lhs), std::move(rhs)));
}
Formula Formula::disjunction(Formula lhs, Formula rhs) {
  return Formula(binary<Node>(Kind::disjunction, std::move(lhs), std::move(rhs)));
}
Formula Formula::implication(Formula lhs, Formula rhs) {
  return Formula(binary<Node>(Kind::implication, std::move(lhs), std::move(rhs)));
}
Formula Formula::equivalence(Formula lhs, Formula rhs) {
  return Formula(binary<Node>(Kind::equivalence, std::move(lhs), std::move(rhs)));
}

Formula::Kind Formula::kind() const noexcept { return node_->kind; }

bool Formula::value() const {
  if (node_->kind != Kind::constant) throw DomainError("value() on a non-constant formula");
  return node_->value;
}

const std::string& Formula::name() const {
  if (node_->kind != Kind::atom) throw DomainError("name() on a non-atom formula");
  return node_->name;
}

std::size_t Formula::arity() const noexcept { return node_->children.size(); }

const Formula& Formula::operand(std::size_t i) const { return node_->children.at(i); }

bool operator==(const Formula& lhs, const Formula& rhs) {
  if (lhs.node_ == rhs.node_) return true;
  const auto& a = *lhs.node_;
  const auto& b = *rhs.node_;
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Formula::Kind::constant:
      return a.value == b.value;
    case Formula::Kind::atom:
      return a.name == b.name;
    default:
      return a.children == b.children;
  }
}

// ---------------------------------------------------------------------------
// Lexer

namespace {

enum class Tok { lparen, rparen, bang, amp, bar, arrow, dbl_arrow, zero, one, ident, end };

struct Token {
  Tok type;
  std::size_t pos;
  std::string text;
};

const char* describe(Tok t) {
  switch (t) {
    case Tok::lparen: return "'('";
    case Tok::rparen: return "')'";
    case Tok::bang: return "'!'";
    case Tok::amp: return "'&'";
    case Tok::bar: return "'|'";
    case Tok::arrow: return "'->'";
    case Tok::dbl_arrow: return "'<->'";
    case Tok::zero: return "'0'";
    case Tok::one: return "'1'";
    case Tok::ident: return "identifier";
    case Tok::end: return "end of input";
  }
  return "?";
}

struct Alias {
  std::string_view utf8;
  Tok type;
};

constexpr Alias kAliases[] = {
    {"\xC2\xAC", Tok::bang},           // ¬
    {"\xE2\x88\xA7", Tok::amp},        // ∧
    {"\xE2\x88\xA8", Tok::bar},        // ∨
    {"\xE2\x86\x92", Tok::arrow},      // →
    {"\xE2\x86\x94", Tok::dbl_arrow},  // ↔
    {"\xE2\x8A\xA4", Tok::one},        // ⊤
    {"\xE2\x8A\xA5", Tok::zero},       // ⊥
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto ident_char = [](char c) {
    auto u = static_cast<unsigned char>(c);
    return std::isalnum(u) || c == '_';
  };
  while (i < s.size()) {
    const char c = s[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      ++i;
      continue;
    }
    const std::size_t start = i;
    auto single = [&](Tok t) {
      out.push_back({t, start, std::string(1, c)});
      ++i;
    };
    switch (c) {
      case '(': single(Tok::lparen); continue;
      case ')': single(Tok::rparen); continue;
      case '!': single(Tok::bang); continue;
      case '&': single(Tok::amp); continue;
      case '|': single(Tok::bar); continue;
      default: break;
    }
    if (s.substr(i, 2) == "->") {
      out.push_back({Tok::arrow, start, "->"});
      i += 2;
      continue;
    }
    if (s.substr(i, 3) == "<->") {
      out.push_back({Tok::dbl_arrow, start, "<->"});
      i += 3;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (i < s.size() && ident_char(s[i])) ++i;
      out.push_back({Tok::ident, start, std::string(s.substr(start, i - start))});
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      const auto digits = s.substr(start, i - start);
      if (digits == "0") {
        out.push_back({Tok::zero, start, "0"});
      } else if (digits == "1") {
        out.push_back({Tok::one, start, "1"});
      } else {
        throw ParseError(ParseError::Kind::lexical, start,
                         "invalid constant '" + std::string(digits) + "'");
      }
      continue;
    }
    bool matched = false;
    for (const auto& alias : kAliases) {
      if (s.substr(i, alias.utf8.size()) == alias.utf8) {
        out.push_back({alias.type, start, std::string(alias.utf8)});
        i += alias.utf8.size();
        matched = true;
        break;
      }
    }
    if (matched) continue;
    throw ParseError(ParseError::Kind::lexical, start,
                     "unexpected character '" + std::string(1, c) + "'");
  }
  out.push_back({Tok::end, s.size(), {}});
  return out;
}

// ---------------------------------------------------------------------------
// Recursive descent over the grammar
//   formula := iff
//   iff     := imp ("<->" imp)*
//   imp     := or ("->" imp)?
//   or      := and ("|" and)*
//   and     := not ("&" not)*
//   not     := "!" not | primary
//   primary := "0" | "1" | ident | "(" formula ")"

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  Formula parse_all() {
    Formula f = iff();
    if (peek().type != Tok::end) unexpected();
    return f;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  bool accept(Tok t) {
    if (peek().type != t) return false;
    ++pos_;
    return true;
  }
  [[noreturn]] void unexpected() const {
    const auto& t = peek();
    std::string what = t.type == Tok::end ? "end of input" : "'" + t.text + "'";
    throw ParseError(ParseError::Kind::syntax, t.pos, "unexpected " + what);
  }

  Formula iff() {
    Formula lhs = imp();
    while (accept(Tok::dbl_arrow)) lhs = Formula::equivalence(lhs, imp());
    return lhs;
  }
  Formula imp() {
    Formula lhs = disj();
    if (accept(Tok::arrow)) return Formula::implication(lhs, imp());
    return lhs;
  }
  Formula disj() {
    Formula lhs = conj();
    while (accept(Tok::bar)) lhs = Formula::disjunction(lhs, conj());
    return lhs;
  }
  Formula conj() {
    Formula lhs = neg();
    while (accept(Tok::amp)) lhs = Formula::conjunction(lhs, neg());
    return lhs;
  }
  Formula neg() {
    if (accept(Tok::bang)) return Formula::negation(neg());
    return primary();
  }
  Formula primary() {
    const Token t = peek();
    switch (t.type) {
      case Tok::zero: ++pos_; return Formula::constant(false);
      case Tok::one: ++pos_; return Formula::constant(true);
      case Tok::ident: ++pos_; return Formula::atom(t.text);
      case Tok::lparen: {
        ++pos_;
        Formula inner = iff();
        if (!accept(Tok::rparen)) {
          const auto& here = peek();
          throw ParseError(ParseError::Kind::syntax, here.pos,
                           std::string("expected ')' but found ") + describe(here.type));
        }
        return inner;
      }
      default:
        unexpected();
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

// Binding strength used by the printer; higher binds tighter.
int level(Formula::Kind k) {
  switch (k) {
    case Formula::Kind::equivalence: return 1;
    case Formula::Kind::implication: return 2;
    case Formula::Kind::disjunction: return 3;
    case Formula::Kind::conjunction: return 4;
    case Formula::Kind::negation: return 5;
    default: return 6;
  }
}

void print_into(const Formula& f, int min_level, std::string& out) {
  const int lv = level(f.kind());
  const bool parens = lv < min_level;
  if (parens) out += '(';
  switch (f.kind()) {
    case Formula::Kind::constant:
      out += f.value() ? '1' : '0';
      break;
    case Formula::Kind::atom:
      out += f.name();
      break;
    case Formula::Kind::negation:
      out += '!';
      print_into(f.operand(0), lv, out);
      break;
    default: {
      const char* op = f.kind() == Formula::Kind::conjunction   ? " & "
                       : f.kind() == Formula::Kind::disjunction ? " | "
                       : f.kind() == Formula::Kind::implication ? " -> "
                                                                : " <-> ";
      // Implication groups to the right, everything else to the left.
      const bool right_assoc = f.kind() == Formula::Kind::implication;
      print_into(f.operand(0), right_assoc ? lv + 1 : lv, out);
      out += op;
      print_into(f.operand(1), right_assoc ? lv : lv + 1, out);
    }
  }
  if (parens) out += ')';
}

ElementId eval_bits(const Formula& f, const Algebra& algebra, const AtomBinding& binding) {
  switch (f.kind()) {
    case Formula::Kind::constant:
      return f.value() ? algebra.top_id() : algebra.bot_id();
    case Formula::Kind::atom: {
      auto it = binding.find(f.name());
      if (it == binding.end()) throw NameError("unbound atom '" + f.name() + "'");
      if (it->second >= algebra.atom_count()) {
        throw NameError("atom '" + f.name() + "' bound to index " + std::to_string(it->second) +
                        " but the algebra has " + std::to_string(algebra.atom_count()) +
                        " atoms");
      }
      ElementId bits = 0;
      for (std::size_t k = 0; k < algebra.row_count(); ++k) {
        if ((k >> it->second) & 1U) bits |= ElementId{1} << k;
      }
      return bits;
    }
    case Formula::Kind::negation:
      return algebra.complement_id(eval_bits(f.operand(0), algebra, binding));
    case Formula::Kind::conjunction:
      return algebra.add_id(eval_bits(f.operand(0), algebra, binding),
                            eval_bits(f.operand(1), algebra, binding));
    case Formula::Kind::disjunction:
      return algebra.mul_id(eval_bits(f.operand(0), algebra, binding),
                            eval_bits(f.operand(1), algebra, binding));
    case Formula::Kind::implication:
      return algebra.mul_id(algebra.complement_id(eval_bits(f.operand(0), algebra, binding)),
                            eval_bits(f.operand(1), algebra, binding));
    case Formula::Kind::equivalence: {
      const auto x = eval_bits(f.operand(0), algebra, binding);
      const auto y = eval_bits(f.operand(1), algebra, binding);
      return algebra.add_id(algebra.mul_id(algebra.complement_id(x), y),
                            algebra.mul_id(algebra.complement_id(y), x));
    }
  }
  return 0;
}

void collect_atoms(const Formula& f, std::vector<std::string>& out) {
  if (f.kind() == Formula::Kind::atom) {
    if (std::find(out.begin(), out.end(), f.name()) == out.end()) out.push_back(f.name());
    return;
  }
  for (std::size_t i = 0; i < f.arity(); ++i) collect_atoms(f.operand(i), out);
}

}  // namespace

Formula parse(std::string_view text) { return Parser(tokenize(text)).parse_all(); }

std::string print(const Formula& f) {
  std::string out;
  print_into(f, 0, out);
  return out;
}

Element evaluate(const Formula& f, const Algebra& algebra, const AtomBinding& binding) {
  if (!algebra.is_free()) {
    throw UnsupportedError("formulas evaluate only in free Boolean algebras");
  }
  return algebra.element(eval_bits(f, algebra, binding));
}

Element evaluate(const Formula& f, const Algebra& algebra) {
  AtomBinding binding;
  const auto& names = algebra.atom_names();
  for (unsigned i = 0; i < names.size(); ++i) binding.emplace(names[i], i);
  return evaluate(f, algebra, binding);
}

std::vector<std::string> atoms_of(const Formula& f) {
  std::vector<std::string> out;
  collect_atoms(f, out);
  return out;
}

ElementId resolve_element(const Algebra& algebra, std::string_view text) {
  if (algebra.is_free()) {
    // Display names of free elements are formulas, so parsing covers them.
    try {
      return evaluate(parse(text), algebra).id;
    } catch (const ParseError&) {
    } catch (const NameError&) {
    }
  } else if (auto id = algebra.find(text)) {
    return *id;
  }
  throw DomainError("unknown element '" + std::string(text) + "' in algebra '" +
                    algebra.name() + "'");
}

}  // namespace boolsemi
