#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>

#include "catloc/fractions.hpp"
#include "catloc/quotient.hpp"

namespace catloc {

/// Grammar (one statement per call to eval):
///
///   stmt    := 'let' IDENT '=' expr | expr
///   expr    := 'equal?' frac frac | 'compose' frac frac | 'invert' frac
///            | 'cokernel' frac | 'kernel' frac | 'regular?' mor | frac | mor
///   frac    := '[' mor ',' mor ']' | IDENT
///   mor     := term (('+' | '-') term)*
///   term    := ['-'] [SCALAR '*'] factor (('.' | '∘') factor)*
///   factor  := 'id' | NAME '->' NAME '#' INT | IDENT | '(' mor ')'
///
/// Error columns are 1-based byte offsets into the statement.
///
/// [r,f] is the fraction f r^-1 with r regular. compose G F is G after F.
/// Basis indices refer to the hom spaces of the quotient C/X_T. NAME may be any
/// object name or alias; a bracket group written directly after a name, as in
/// M[2,3], belongs to it. 'id' takes its object from context.
class ExprError : public std::runtime_error {
 public:
  ExprError(const std::string& what, std::size_t column)
      : std::runtime_error(what + " at column " + std::to_string(column)), column_(column) {}
  std::size_t column() const { return column_; }

 private:
  std::size_t column_;
};

class FractionEvaluator {
 public:
  /// T, when given, enables the H-image cross-check in 'equal?'.
  FractionEvaluator(const QuotientCategory& Q, std::optional<Obj> T = std::nullopt);

  struct Result {
    std::string text;
    /// Set when both equality deciders ran and disagreed.
    bool deciders_disagree = false;
  };

  /// Throws ExprError (syntax, typing), NotRegular, NoKernel or NoCokernel.
  Result eval(const std::string& statement);

  std::string format(const Morphism& f) const;
  std::string format(const Fraction& F) const;

 private:
  struct Mor {
    std::optional<Morphism> m;  // empty: coef * id of an object fixed by context
    Scalar coef;
  };
  using Value = std::variant<Mor, Fraction>;

  const QuotientCategory& Q_;
  std::optional<Obj> T_;
  std::map<std::string, Value> env_;

  friend class ExprParser;
};

}  // namespace catloc
