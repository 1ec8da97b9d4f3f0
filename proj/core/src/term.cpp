#include "orthokit/term.hpp"

#include <cctype>
#include <utility>

namespace orthokit {

namespace {

TermPtr make(TermKind kind, int index, std::string name, TermPtr left, TermPtr right) {
  auto t = std::make_shared<Term>();
  t->kind = kind;
  t->index = index;
  t->name = std::move(name);
  t->left = std::move(left);
  t->right = std::move(right);
  return t;
}

void check_index(int index) {
  if (index < 0 || index > 5)
    throw std::invalid_argument("connective index must be in 0..5, got " +
                                std::to_string(index));
}

}  // namespace

TermPtr Term::var(std::string name) { return make(TermKind::Var, -1, std::move(name), nullptr, nullptr); }
TermPtr Term::zero() { return make(TermKind::Zero, -1, {}, nullptr, nullptr); }
TermPtr Term::one() { return make(TermKind::One, -1, {}, nullptr, nullptr); }
TermPtr Term::comp(TermPtr child) { return make(TermKind::Comp, -1, {}, std::move(child), nullptr); }
TermPtr Term::join(TermPtr l, TermPtr r) { return make(TermKind::Join, -1, {}, std::move(l), std::move(r)); }
TermPtr Term::meet(TermPtr l, TermPtr r) { return make(TermKind::Meet, -1, {}, std::move(l), std::move(r)); }
TermPtr Term::impl(int index, TermPtr l, TermPtr r) {
  check_index(index);
  return make(TermKind::Impl, index, {}, std::move(l), std::move(r));
}
TermPtr Term::biimpl(int index, TermPtr l, TermPtr r) {
  check_index(index);
  return make(TermKind::BiImpl, index, {}, std::move(l), std::move(r));
}
TermPtr Term::ident(int index, TermPtr l, TermPtr r) {
  check_index(index);
  return make(TermKind::Ident, index, {}, std::move(l), std::move(r));
}

bool term_equal(const Term& a, const Term& b) {
  if (a.kind != b.kind || a.index != b.index || a.name != b.name) return false;
  if ((a.left == nullptr) != (b.left == nullptr)) return false;
  if (a.left && !term_equal(*a.left, *b.left)) return false;
  if ((a.right == nullptr) != (b.right == nullptr)) return false;
  if (a.right && !term_equal(*a.right, *b.right)) return false;
  return true;
}

namespace {
void collect_vars(const Term& t, std::set<std::string>& out) {
  if (t.kind == TermKind::Var) out.insert(t.name);
  if (t.left) collect_vars(*t.left, out);
  if (t.right) collect_vars(*t.right, out);
}
}  // namespace

std::set<std::string> variables(const Term& t) {
  std::set<std::string> out;
  collect_vars(t, out);
  return out;
}

std::set<std::string> variables(const Equation& e) {
  std::set<std::string> out;
  collect_vars(*e.lhs, out);
  collect_vars(*e.rhs, out);
  return out;
}

std::set<std::string> variables(const QuasiEquation& q) {
  std::set<std::string> out;
  for (const auto& h : q.hypotheses) {
    collect_vars(*h.lhs, out);
    collect_vars(*h.rhs, out);
  }
  collect_vars(*q.conclusion.lhs, out);
  collect_vars(*q.conclusion.rhs, out);
  return out;
}

// ── lexer ────────────────────────────────────────────────────────────────

namespace {

enum class Tok : std::uint8_t {
  Ident, Zero, One, LParen, RParen, Prime, Amp, Pipe,
  Arrow, BiArrow, IdentOp,  // carry an index
  Eq, Comma, Implies,       // equation / quasi-equation level
  End
};

struct Token {
  Tok kind;
  std::string text;
  int index = -1;
  std::size_t pos = 0;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> toks;
  std::size_t i = 0;
  auto read_index = [&](std::size_t at) -> int {
    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
      throw ParseError("connective needs an index digit 0..5", at);
    char c = text[i++];
    if (c > '5') throw ParseError(std::string("unknown connective index ") + c, i - 1);
    return c - '0';
  };
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) { ++i; continue; }
    std::size_t at = i;
    if (c == '0') { toks.push_back({Tok::Zero, "0", -1, at}); ++i; continue; }
    if (c == '1') { toks.push_back({Tok::One, "1", -1, at}); ++i; continue; }
    if (ident_start(c)) {
      std::size_t j = i;
      while (j < text.size() && ident_char(text[j])) ++j;
      toks.push_back({Tok::Ident, std::string(text.substr(i, j - i)), -1, at});
      i = j;
      continue;
    }
    switch (c) {
      case '(': toks.push_back({Tok::LParen, "(", -1, at}); ++i; continue;
      case ')': toks.push_back({Tok::RParen, ")", -1, at}); ++i; continue;
      case '\'': toks.push_back({Tok::Prime, "'", -1, at}); ++i; continue;
      case '&': toks.push_back({Tok::Amp, "&", -1, at}); ++i; continue;
      case '|': toks.push_back({Tok::Pipe, "|", -1, at}); ++i; continue;
      case ',': toks.push_back({Tok::Comma, ",", -1, at}); ++i; continue;
      default: break;
    }
    if (text.compare(i, 2, "->") == 0) {
      i += 2;
      toks.push_back({Tok::Arrow, "->", read_index(at), at});
      continue;
    }
    if (text.compare(i, 3, "<->") == 0) {
      i += 3;
      toks.push_back({Tok::BiArrow, "<->", read_index(at), at});
      continue;
    }
    if (text.compare(i, 2, "==") == 0) {
      i += 2;
      toks.push_back({Tok::IdentOp, "==", read_index(at), at});
      continue;
    }
    if (text.compare(i, 2, "=>") == 0) {
      i += 2;
      toks.push_back({Tok::Implies, "=>", -1, at});
      continue;
    }
    if (c == '=') { toks.push_back({Tok::Eq, "=", -1, at}); ++i; continue; }
    throw ParseError(std::string("unexpected character '") + c + "'", at);
  }
  toks.push_back({Tok::End, "", -1, text.size()});
  return toks;
}

class TermParser {
 public:
  explicit TermParser(std::string_view text) : toks_(lex(text)) {}

  TermPtr parse_full_term() {
    TermPtr t = parse_term_level();
    expect_end();
    return t;
  }

  Equation parse_full_equation() {
    Equation e = parse_equation_level();
    expect_end();
    return e;
  }

  QuasiEquation parse_full_quasi() {
    QuasiEquation q;
    std::vector<Equation> eqs;
    eqs.push_back(parse_equation_level());
    while (peek().kind == Tok::Comma) {
      next();
      eqs.push_back(parse_equation_level());
    }
    if (peek().kind == Tok::Implies) {
      next();
      q.hypotheses = std::move(eqs);
      q.conclusion = parse_equation_level();
    } else {
      if (eqs.size() != 1)
        throw ParseError("expected => after hypothesis list", peek().pos);
      q.conclusion = eqs.front();
    }
    expect_end();
    return q;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }

  void expect_end() {
    if (peek().kind != Tok::End)
      throw ParseError("unexpected trailing input '" + peek().text + "'", peek().pos);
  }

  Equation parse_equation_level() {
    TermPtr lhs = parse_term_level();
    if (peek().kind == Tok::Eq) {
      next();
      TermPtr rhs = parse_term_level();
      return Equation{lhs, rhs, false};
    }
    return Equation{lhs, Term::one(), true};
  }

  TermPtr parse_term_level() {  // ==i, loosest
    TermPtr t = parse_impl();
    while (peek().kind == Tok::IdentOp) {
      const Token& op = next();
      t = Term::ident(op.index, t, parse_impl());
    }
    return t;
  }

  TermPtr parse_impl() {
    TermPtr t = parse_join();
    while (peek().kind == Tok::Arrow || peek().kind == Tok::BiArrow) {
      const Token& op = next();
      TermPtr r = parse_join();
      t = op.kind == Tok::Arrow ? Term::impl(op.index, t, r)
                                : Term::biimpl(op.index, t, r);
    }
    return t;
  }

  TermPtr parse_join() {
    TermPtr t = parse_meet();
    while (peek().kind == Tok::Pipe) {
      next();
      t = Term::join(t, parse_meet());
    }
    return t;
  }

  TermPtr parse_meet() {
    TermPtr t = parse_atom();
    while (peek().kind == Tok::Amp) {
      next();
      t = Term::meet(t, parse_atom());
    }
    return t;
  }

  TermPtr parse_atom() {
    const Token& tok = next();
    TermPtr t;
    switch (tok.kind) {
      case Tok::Ident: t = Term::var(tok.text); break;
      case Tok::Zero: t = Term::zero(); break;
      case Tok::One: t = Term::one(); break;
      case Tok::LParen: {
        t = parse_term_level();
        if (peek().kind != Tok::RParen)
          throw ParseError("expected ')'", peek().pos);
        next();
        break;
      }
      default:
        throw ParseError("expected a variable, constant or '('", tok.pos);
    }
    while (peek().kind == Tok::Prime) {
      next();
      t = Term::comp(t);
    }
    return t;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

TermPtr parse_term(std::string_view text) { return TermParser(text).parse_full_term(); }
Equation parse_equation(std::string_view text) { return TermParser(text).parse_full_equation(); }
QuasiEquation parse_quasi(std::string_view text) { return TermParser(text).parse_full_quasi(); }

// ── printer ──────────────────────────────────────────────────────────────

namespace {

// Precedence levels, loosest first; atoms and postfix ' sit at kAtomLevel.
constexpr int kIdentLevel = 0;
constexpr int kImplLevel = 1;
constexpr int kJoinLevel = 2;
constexpr int kMeetLevel = 3;
constexpr int kAtomLevel = 4;

int level_of(const Term& t) {
  switch (t.kind) {
    case TermKind::Ident: return kIdentLevel;
    case TermKind::Impl:
    case TermKind::BiImpl: return kImplLevel;
    case TermKind::Join: return kJoinLevel;
    case TermKind::Meet: return kMeetLevel;
    default: return kAtomLevel;
  }
}

void print_rec(const Term& t, int min_level, std::string& out) {
  int lvl = level_of(t);
  bool parens = lvl < min_level;
  if (parens) out += '(';
  switch (t.kind) {
    case TermKind::Var: out += t.name; break;
    case TermKind::Zero: out += '0'; break;
    case TermKind::One: out += '1'; break;
    case TermKind::Comp:
      print_rec(*t.left, kAtomLevel, out);
      out += '\'';
      break;
    case TermKind::Join:
      print_rec(*t.left, kJoinLevel, out);
      out += " | ";
      print_rec(*t.right, kJoinLevel + 1, out);
      break;
    case TermKind::Meet:
      print_rec(*t.left, kMeetLevel, out);
      out += " & ";
      print_rec(*t.right, kMeetLevel + 1, out);
      break;
    case TermKind::Impl:
    case TermKind::BiImpl:
      print_rec(*t.left, kImplLevel, out);
      out += t.kind == TermKind::Impl ? " ->" : " <->";
      out += static_cast<char>('0' + t.index);
      out += ' ';
      print_rec(*t.right, kImplLevel + 1, out);
      break;
    case TermKind::Ident:
      print_rec(*t.left, kIdentLevel, out);
      out += " ==";
      out += static_cast<char>('0' + t.index);
      out += ' ';
      print_rec(*t.right, kIdentLevel + 1, out);
      break;
  }
  if (parens) out += ')';
}

}  // namespace

std::string print_term(const Term& t) {
  std::string out;
  print_rec(t, kIdentLevel, out);
  return out;
}

std::string print_equation(const Equation& e) {
  if (e.unit) return print_term(*e.lhs);
  return print_term(*e.lhs) + " = " + print_term(*e.rhs);
}

std::string print_quasi(const QuasiEquation& q) {
  std::string out;
  for (std::size_t k = 0; k < q.hypotheses.size(); ++k) {
    if (k) out += " , ";
    out += print_equation(q.hypotheses[k]);
  }
  if (!q.hypotheses.empty()) out += " => ";
  out += print_equation(q.conclusion);
  return out;
}

// ── expansion ────────────────────────────────────────────────────────────

namespace {

// The five quantum implications and the classical one, per their definitions.
// ->3 is the Kalmbach implication (a'&b) | (a'&b') | (a & (a'|b)).
TermPtr expand_impl(int index, const TermPtr& a, const TermPtr& b) {
  using T = Term;
  switch (index) {
    case 0: return T::join(T::comp(a), b);
    case 1: return T::join(T::comp(a), T::meet(a, b));
    case 2: return expand_impl(1, T::comp(b), T::comp(a));
    case 3:
      return T::join(T::join(T::meet(T::comp(a), b), T::meet(T::comp(a), T::comp(b))),
                     T::meet(a, T::join(T::comp(a), b)));
    case 4: return expand_impl(3, T::comp(b), T::comp(a));
    default:
      return T::join(T::join(T::meet(a, b), T::meet(T::comp(a), b)),
                     T::meet(T::comp(a), T::comp(b)));
  }
}

TermPtr expand_ident(int index, const TermPtr& a, const TermPtr& b) {
  using T = Term;
  switch (index) {
    case 0: return T::meet(T::join(T::comp(a), b), T::join(T::comp(b), a));
    case 1: return T::meet(T::join(a, T::comp(b)), T::join(T::comp(a), T::meet(a, b)));
    case 2:
      return T::meet(T::join(a, T::comp(b)), T::join(b, T::meet(T::comp(a), T::comp(b))));
    case 3:
      return T::meet(T::join(T::comp(a), b), T::join(a, T::meet(T::comp(a), T::comp(b))));
    case 4: return T::meet(T::join(T::comp(a), b), T::join(T::comp(b), T::meet(a, b)));
    default: return T::join(T::meet(a, b), T::meet(T::comp(a), T::comp(b)));
  }
}

}  // namespace

TermPtr expand(const TermPtr& t) {
  switch (t->kind) {
    case TermKind::Var:
    case TermKind::Zero:
    case TermKind::One:
      return t;
    case TermKind::Comp: {
      TermPtr c = expand(t->left);
      return c == t->left ? t : Term::comp(c);
    }
    case TermKind::Join:
    case TermKind::Meet: {
      TermPtr l = expand(t->left);
      TermPtr r = expand(t->right);
      if (l == t->left && r == t->right) return t;
      return t->kind == TermKind::Join ? Term::join(l, r) : Term::meet(l, r);
    }
    case TermKind::Impl:
      return expand(expand_impl(t->index, t->left, t->right));
    case TermKind::BiImpl:
      return expand(Term::meet(expand_impl(t->index, t->left, t->right),
                               expand_impl(t->index, t->right, t->left)));
    case TermKind::Ident:
      return expand(expand_ident(t->index, t->left, t->right));
  }
  throw std::logic_error("unreachable term kind");
}

TermPtr substitute(const TermPtr& t, const std::map<std::string, TermPtr>& bindings) {
  switch (t->kind) {
    case TermKind::Var: {
      auto it = bindings.find(t->name);
      return it == bindings.end() ? t : it->second;
    }
    case TermKind::Zero:
    case TermKind::One:
      return t;
    case TermKind::Comp:
      return Term::comp(substitute(t->left, bindings));
    default: {
      TermPtr l = substitute(t->left, bindings);
      TermPtr r = substitute(t->right, bindings);
      switch (t->kind) {
        case TermKind::Join: return Term::join(l, r);
        case TermKind::Meet: return Term::meet(l, r);
        case TermKind::Impl: return Term::impl(t->index, l, r);
        case TermKind::BiImpl: return Term::biimpl(t->index, l, r);
        default: return Term::ident(t->index, l, r);
      }
    }
  }
}

}  // namespace orthokit
