#include "catloc/expr.hpp"

#include <cctype>

#include "catloc/modcat.hpp"

namespace catloc {

namespace {

enum class Tok { kLBrack, kRBrack, kComma, kPlus, kMinus, kStar, kDot, kLParen, kRParen, kArrow, kHash, kEquals, kNumber, kWord, kEnd };

struct Token {
  Tok kind;
  std::string text;
  std::size_t column;  // 1-based byte offset
};

bool word_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool word_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '?' || c == '\''; }

std::vector<Token> tokenize(const std::string& s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    const std::size_t col = i + 1;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (s.compare(i, 3, "\xE2\x88\x98") == 0) {
      out.push_back({Tok::kDot, "∘", col});
      i += 3;
      continue;
    }
    if (s.compare(i, 2, "->") == 0) {
      out.push_back({Tok::kArrow, "->", col});
      i += 2;
      continue;
    }
    Tok single = Tok::kEnd;
    switch (c) {
      case '[': single = Tok::kLBrack; break;
      case ']': single = Tok::kRBrack; break;
      case ',': single = Tok::kComma; break;
      case '+': single = Tok::kPlus; break;
      case '-': single = Tok::kMinus; break;
      case '*': single = Tok::kStar; break;
      case '.': single = Tok::kDot; break;
      case '(': single = Tok::kLParen; break;
      case ')': single = Tok::kRParen; break;
      case '#': single = Tok::kHash; break;
      case '=': single = Tok::kEquals; break;
      default: break;
    }
    if (single != Tok::kEnd) {
      out.push_back({single, std::string(1, c), col});
      ++i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      if (j + 1 < s.size() && s[j] == '/' && std::isdigit(static_cast<unsigned char>(s[j + 1]))) {
        ++j;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      }
      out.push_back({Tok::kNumber, s.substr(i, j - i), col});
      i = j;
      continue;
    }
    if (word_start(c)) {
      std::size_t j = i;
      while (j < s.size() && word_char(s[j])) ++j;
      // M[2,3]: a bracket group glued to a name is part of it.
      if (j < s.size() && s[j] == '[') {
        std::size_t k = j + 1;
        while (k < s.size() && (std::isdigit(static_cast<unsigned char>(s[k])) || s[k] == ',')) ++k;
        if (k < s.size() && s[k] == ']' && k > j + 1) j = k + 1;
      }
      out.push_back({Tok::kWord, s.substr(i, j - i), col});
      i = j;
      continue;
    }
    throw ExprError("unexpected character '" + std::string(1, c) + "'", col);
  }
  out.push_back({Tok::kEnd, "", s.size() + 1});
  return out;
}

const char* tok_name(Tok t) {
  switch (t) {
    case Tok::kLBrack: return "'['";
    case Tok::kRBrack: return "']'";
    case Tok::kComma: return "','";
    case Tok::kPlus: return "'+'";
    case Tok::kMinus: return "'-'";
    case Tok::kStar: return "'*'";
    case Tok::kDot: return "'.'";
    case Tok::kLParen: return "'('";
    case Tok::kRParen: return "')'";
    case Tok::kArrow: return "'->'";
    case Tok::kHash: return "'#'";
    case Tok::kEquals: return "'='";
    case Tok::kNumber: return "number";
    case Tok::kWord: return "name";
    case Tok::kEnd: return "end of input";
  }
  return "?";
}

}  // namespace

class ExprParser {
 public:
  using Mor = FractionEvaluator::Mor;
  using Value = FractionEvaluator::Value;

  ExprParser(FractionEvaluator& ev, const std::string& text) : ev_(ev), P_(ev.Q_.presentation), toks_(tokenize(text)) {}

  FractionEvaluator::Result statement() {
    FractionEvaluator::Result res;
    if (peek().kind == Tok::kWord && peek().text == "let") {
      next();
      const Token name = expect(Tok::kWord);
      expect(Tok::kEquals);
      const Token& start = peek();
      Value v;
      if (start.kind == Tok::kLBrack)
        v = frac();
      else
        v = mor();
      expect(Tok::kEnd);
      res.text = name.text + " = " + show(v, start.column);
      ev_.env_[name.text] = v;
      return res;
    }
    const Token head = peek();
    if (head.kind == Tok::kWord) {
      if (head.text == "equal?") {
        next();
        Fraction a = frac(), b = frac();
        expect(Tok::kEnd);
        same_shape(a, b, head.column);
        const bool by_pullback = fractions_equal(P_, a, b);
        res.text = by_pullback ? "true" : "false";
        if (ev_.T_) {
          const bool by_h = h_fraction(ev_.Q_, *ev_.T_, a).matrix == h_fraction(ev_.Q_, *ev_.T_, b).matrix;
          if (by_h != by_pullback) {
            res.deciders_disagree = true;
            res.text = std::string("deciders disagree: pullback ") + (by_pullback ? "true" : "false") + ", H-image " +
                       (by_h ? "true" : "false");
          }
        }
        return res;
      }
      if (head.text == "compose") {
        next();
        Fraction g = frac(), f = frac();
        expect(Tok::kEnd);
        if (!(f.target() == g.source()))
          throw ExprError("compose G F needs target(F) = source(G)", head.column);
        res.text = ev_.format(compose_fractions(P_, g, f));
        return res;
      }
      if (head.text == "invert") {
        next();
        Fraction f = frac();
        expect(Tok::kEnd);
        Fraction inv;
        res.text = fraction_invertible(P_, f, &inv) ? ev_.format(inv) : "not invertible";
        return res;
      }
      if (head.text == "cokernel" || head.text == "kernel") {
        next();
        Fraction f = frac();
        expect(Tok::kEnd);
        if (head.text == "cokernel") {
          auto c = localised_cokernel(P_, f);
          res.text = to_string(P_, c.obj) + " via " + ev_.format(c.map);
        } else {
          auto k = localised_kernel(P_, f);
          res.text = to_string(P_, k.obj) + " via " + ev_.format(k.map);
        }
        return res;
      }
      if (head.text == "regular?") {
        next();
        Mor m = mor();
        expect(Tok::kEnd);
        if (!m.m) throw ExprError("cannot infer the object of 'id'", head.column + 9);
        res.text = is_regular(P_, *m.m) ? "true" : "false";
        return res;
      }
    }
    Value v;
    if (head.kind == Tok::kLBrack)
      v = frac();
    else
      v = mor();
    expect(Tok::kEnd);
    res.text = show(v, head.column);
    return res;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }
  Token expect(Tok kind) {
    const Token& t = peek();
    if (t.kind != kind)
      throw ExprError(std::string("expected ") + tok_name(kind) + ", found " +
                          (t.kind == Tok::kEnd ? "end of input" : "'" + t.text + "'"),
                      t.column);
    return next();
  }

  std::string show(const Value& v, std::size_t column) const {
    if (const auto* f = std::get_if<Fraction>(&v)) return ev_.format(*f);
    const auto& m = std::get<Mor>(v);
    if (!m.m) {
      if (m.coef.is_one()) return "id";
      if (m.coef.is_zero()) return "0";
      return m.coef.to_string() + "*id";
    }
    (void)column;
    return ev_.format(*m.m);
  }

  void same_shape(const Fraction& a, const Fraction& b, std::size_t column) const {
    if (!(a.source() == b.source()) || !(a.target() == b.target()))
      throw ExprError("fractions have different source or target", column);
  }

  Fraction frac() {
    const Token& t = peek();
    if (t.kind == Tok::kWord && t.text != "id") {
      auto it = ev_.env_.find(t.text);
      if (it == ev_.env_.end() || (pos_ + 1 < toks_.size() && toks_[pos_ + 1].kind == Tok::kArrow))
        throw ExprError("expected a fraction, found '" + t.text + "'", t.column);
      next();
      if (const auto* f = std::get_if<Fraction>(&it->second)) return *f;
      const Mor& m = std::get<Mor>(it->second);
      if (!m.m) throw ExprError("cannot infer the object of 'id'", t.column);
      return from_morphism(P_, *m.m);
    }
    expect(Tok::kLBrack);
    const std::size_t rcol = peek().column;
    Mor r = mor();
    expect(Tok::kComma);
    const std::size_t fcol = peek().column;
    Mor f = mor();
    expect(Tok::kRBrack);
    if (!r.m && !f.m) throw ExprError("cannot infer the object of 'id'", rcol);
    if (!r.m) r.m = scale(r.coef, identity(P_, f.m->src));
    if (!f.m) f.m = scale(f.coef, identity(P_, r.m->src));
    if (!(r.m->src == f.m->src)) throw ExprError("fraction arms have different sources", fcol);
    return make_fraction(P_, *r.m, *f.m);
  }

  Mor mor() {
    Mor acc = term();
    while (peek().kind == Tok::kPlus || peek().kind == Tok::kMinus) {
      const Token op = next();
      Mor rhs = term();
      if (op.kind == Tok::kMinus) rhs = scaled(Scalar::from_int(P_.field(), -1), rhs);
      acc = added(acc, rhs, op.column);
    }
    return acc;
  }

  Mor term() {
    Scalar coef = Scalar::from_int(P_.field(), 1);
    if (peek().kind == Tok::kMinus) {
      next();
      coef = Scalar::from_int(P_.field(), -1);
    }
    if (peek().kind == Tok::kNumber) {
      const Token num = next();
      try {
        coef = coef * Scalar::parse(P_.field(), num.text);
      } catch (const std::exception& e) {
        throw ExprError(e.what(), num.column);
      }
      expect(Tok::kStar);
    }
    Mor acc = factor();
    while (peek().kind == Tok::kDot) {
      const Token op = next();
      Mor rhs = factor();
      acc = composed(acc, rhs, op.column);
    }
    return scaled(coef, acc);
  }

  Mor factor() {
    const Token& t = peek();
    if (t.kind == Tok::kLParen) {
      next();
      Mor m = mor();
      expect(Tok::kRParen);
      return m;
    }
    if (t.kind != Tok::kWord)
      throw ExprError(std::string("expected a morphism, found ") +
                          (t.kind == Tok::kEnd ? "end of input" : "'" + t.text + "'"),
                      t.column);
    const Token word = next();
    if (peek().kind == Tok::kArrow) {
      next();
      const Token dst = expect(Tok::kWord);
      expect(Tok::kHash);
      const Token idx = expect(Tok::kNumber);
      auto i = P_.find(word.text);
      if (!i) throw ExprError("unknown object '" + word.text + "'", word.column);
      auto j = P_.find(dst.text);
      if (!j) throw ExprError("unknown object '" + dst.text + "'", dst.column);
      std::size_t b = 0;
      try {
        b = std::stoul(idx.text);
      } catch (const std::exception&) {
        throw ExprError("bad basis index '" + idx.text + "'", idx.column);
      }
      if (b >= P_.hom_dim(*i, *j))
        throw ExprError("Hom(" + word.text + ", " + dst.text + ") has dimension " +
                            std::to_string(P_.hom_dim(*i, *j)) + " in the quotient",
                        idx.column);
      return Mor{basis_morphism(P_, *i, *j, b), Scalar::from_int(P_.field(), 1)};
    }
    if (word.text == "id") return Mor{std::nullopt, Scalar::from_int(P_.field(), 1)};
    auto it = ev_.env_.find(word.text);
    if (it == ev_.env_.end()) throw ExprError("unknown name '" + word.text + "'", word.column);
    if (!std::holds_alternative<Mor>(it->second))
      throw ExprError("'" + word.text + "' is a fraction, not a morphism", word.column);
    return std::get<Mor>(it->second);
  }

  Mor scaled(const Scalar& s, const Mor& m) const {
    if (m.m) return Mor{scale(s, *m.m), m.coef};
    return Mor{std::nullopt, s * m.coef};
  }

  Mor resolve(const Mor& m, const Obj& X) const { return Mor{scale(m.coef, identity(P_, X)), m.coef}; }

  Mor added(const Mor& a, const Mor& b, std::size_t column) const {
    if (!a.m && !b.m) return Mor{std::nullopt, a.coef + b.coef};
    if (!a.m || !b.m) {
      const Morphism& known = a.m ? *a.m : *b.m;
      if (!(known.src == known.dst)) throw ExprError("'id' added to a map that is not an endomorphism", column);
      const Mor other = resolve(a.m ? b : a, known.src);
      return Mor{add(known, *other.m), a.coef};
    }
    if (!(a.m->src == b.m->src) || !(a.m->dst == b.m->dst))
      throw ExprError("summands have different source or target", column);
    return Mor{add(*a.m, *b.m), a.coef};
  }

  Mor composed(const Mor& g, const Mor& f, std::size_t column) const {
    if (!g.m && !f.m) return Mor{std::nullopt, g.coef * f.coef};
    if (!g.m) return Mor{scale(g.coef, *f.m), f.coef};
    if (!f.m) return Mor{scale(f.coef, *g.m), g.coef};
    if (!(g.m->src == f.m->dst)) throw ExprError("maps are not composable", column);
    return Mor{compose(P_, *g.m, *f.m), g.coef};
  }

  FractionEvaluator& ev_;
  const CategoryPresentation& P_;
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

FractionEvaluator::FractionEvaluator(const QuotientCategory& Q, std::optional<Obj> T) : Q_(Q), T_(std::move(T)) {}

FractionEvaluator::Result FractionEvaluator::eval(const std::string& statement) {
  ExprParser p(*this, statement);
  return p.statement();
}

std::string FractionEvaluator::format(const Morphism& f) const {
  const auto& P = Q_.presentation;
  if (f.src == f.dst && f == identity(P, f.src)) return "id";
  return describe(P, f);
}

std::string FractionEvaluator::format(const Fraction& F) const {
  return "[" + format(F.r) + ", " + format(F.f) + "]";
}

}  // namespace catloc
