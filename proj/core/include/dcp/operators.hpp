#pragma once

#include <memory>
#include <string_view>
#include <vector>

#include "dcp/rational.hpp"
#include "dcp/term_algebra.hpp"

namespace dcp {

struct ModelParams {
  Rational mu1;
  Rational mu2;
  Rational alpha{-1};

  /// mu1, mu2 >= 0 and alpha != 0; throws std::invalid_argument.
  void validate() const;
  /// validate() plus alpha < 0, needed for decaying bound states.
  void require_bound_state() const;

  Rational mu() const { return mu1 + mu2; }
};

enum class Primitive {
  identity,
  partial_x1,
  partial_x2,
  mul_x1,
  mul_x2,
  mul_r_pow,
  refl1,
  refl2,
  // (1/x_i)(1 - R_i): zero on terms even in x_i, 2 x_i^{-1} * term on odd ones.
  reflection_quotient1,
  reflection_quotient2,
};

/// Immutable composition tree over the primitives. Compose(A, B) applies B first.
class Operator {
 public:
  /// Identity.
  Operator();

  static Operator primitive(Primitive tag);
  static Operator mul_r_pow(int c);
  static Operator scalar(const Rational& k);

  FunctionExpr apply(const FunctionExpr& f) const;
  FunctionExpr operator()(const FunctionExpr& f) const { return apply(f); }

  /// Number of tree nodes.
  std::size_t node_count() const;

  friend Operator operator+(const Operator& x, const Operator& y);
  friend Operator operator-(const Operator& x, const Operator& y);
  friend Operator operator-(const Operator& x);
  friend Operator operator*(const Rational& k, const Operator& x);
  /// Composition: (x * y) f = x(y(f)).
  friend Operator operator*(const Operator& x, const Operator& y);

  struct Node;

 private:
  friend struct OperatorAccess;

  explicit Operator(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

Operator operator+(const Operator& x, const Rational& k);
Operator operator-(const Operator& x, const Rational& k);

Operator commutator(const Operator& x, const Operator& y);
Operator anticommutator(const Operator& x, const Operator& y);

/// Dunkl derivative D_i = d/dx_i + mu_i (1/x_i)(1 - R_i).
Operator dunkl_derivative(int i, const ModelParams& params);

/// Every operator of the model for one parameter set. Operators carrying
/// 1/alpha are well defined for any alpha != 0.
struct DunklCoulombOperators {
  explicit DunklCoulombOperators(const ModelParams& params);

  ModelParams params;
  Operator R1, R2;
  Operator D1, D2;
  Operator laplacian;     // D1^2 + D2^2
  Operator hamiltonian;   // -laplacian/2 + alpha/r
  Operator dilation;      // x.grad + mu1 + mu2 + 1/2
  Operator L0, Lplus, Lminus;
  Operator casimir_so21;  // L0^2 - (L+L- + L-L+)/2
  Operator Jcal;          // x1 D2 - x2 D1 (= i J3)
  Operator A1, A2;        // deformed Runge-Lenz components
  Operator Q;             // Casimir of the invariance algebra
};

/// Stable catalogue names used by the CLI.
const std::vector<std::string_view>& operator_names();

/// Throws std::invalid_argument for a name outside operator_names().
Operator named_operator(std::string_view name, const ModelParams& params);

}  // namespace dcp
