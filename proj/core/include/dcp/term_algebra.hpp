#pragma once

// Exact function space of the model: finite sums of
//
//     coeff * x1^a * x2^eps * r^c * exp(-s r),   r^2 = x1^2 + x2^2,
//
// with rational coeff and s. The relation x2^2 = r^2 - x1^2 is applied
// until eps is 0 or 1. In polar form a term is r^(a+eps+c) cos^a sin^eps,
// so distinct keys are linearly independent and "is zero" is syntactic.

#include <compare>
#include <initializer_list>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "dcp/rational.hpp"

namespace dcp {

struct TermKey {
  int a = 0;    // exponent of x1, >= 0
  int eps = 0;  // exponent of x2, 0 or 1
  int c = 0;    // exponent of r, any sign
  Rational s;   // exponential rate, >= 0

  friend bool operator==(const TermKey&, const TermKey&) = default;
};

/// Fixed total order: by rate, then a, eps, c.
struct TermKeyLess {
  bool operator()(const TermKey& lhs, const TermKey& rhs) const;
};

/// One summand before canonicalization; `b` may be any nonnegative power of x2.
struct RawTerm {
  Rational coeff;
  int a = 0;
  int b = 0;
  int c = 0;
  Rational s;
};

class FunctionExpr {
 public:
  using TermMap = std::map<TermKey, Rational, TermKeyLess>;

  FunctionExpr() = default;

  static FunctionExpr constant(const Rational& value);
  static FunctionExpr monomial(const Rational& coeff, int a, int b, int c,
                               const Rational& s = Rational(0));

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Largest |coeff|; zero for the zero function.
  Rational max_abs_coeff() const;

  friend bool operator==(const FunctionExpr&, const FunctionExpr&) = default;

 private:
  friend class ExprBuilder;
  explicit FunctionExpr(TermMap terms) : terms_(std::move(terms)) {}

  TermMap terms_;
};

/// Accumulates terms and produces a canonical FunctionExpr.
class ExprBuilder {
 public:
  void add(const Rational& coeff, int a, int b, int c, const Rational& s);
  void add(const Rational& scale, const FunctionExpr& f);
  FunctionExpr build() &&;

 private:
  void add_canonical(const Rational& coeff, int a, int eps, int c, const Rational& s);

  FunctionExpr::TermMap terms_;
};

FunctionExpr normalize(std::span<const RawTerm> raw);
FunctionExpr normalize(std::initializer_list<RawTerm> raw);

FunctionExpr linear_combine(std::span<const std::pair<Rational, FunctionExpr>> pairs);

FunctionExpr operator+(const FunctionExpr& f, const FunctionExpr& g);
FunctionExpr operator-(const FunctionExpr& f, const FunctionExpr& g);
FunctionExpr operator-(const FunctionExpr& f);
FunctionExpr operator*(const Rational& k, const FunctionExpr& f);

/// Pointwise product.
FunctionExpr multiply(const FunctionExpr& f, const FunctionExpr& g);

/// Double-precision value at (x1, x2). Throws std::domain_error at the
/// origin when some term carries a negative power of r.
double evaluate(const FunctionExpr& f, double x1, double x2);

/// Same as evaluate() but with every exp(-s r) factor dropped.
double evaluate_prefactor(const FunctionExpr& f, double x1, double x2);

/// f(lambda x1, lambda x2); lambda > 0.
FunctionExpr dilate(const FunctionExpr& f, const Rational& lambda);

/// R_axis f, axis in {1, 2}.
FunctionExpr reflect(const FunctionExpr& f, int axis);

void to_json(nlohmann::json& j, const FunctionExpr& f);
void from_json(const nlohmann::json& j, FunctionExpr& f);

}  // namespace dcp
