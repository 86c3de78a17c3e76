#include "dcp/operators.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace dcp {

void ModelParams::validate() const {
  if (mu1 < 0 || mu2 < 0) throw std::invalid_argument("mu1 and mu2 must be nonnegative");
  if (alpha == 0) throw std::invalid_argument("alpha must be nonzero");
}

void ModelParams::require_bound_state() const {
  validate();
  if (alpha >= 0) throw std::invalid_argument("bound states require alpha < 0");
}

struct Operator::Node {
  enum class Kind { primitive, scale, sum, compose };

  Kind kind = Kind::primitive;
  Primitive tag = Primitive::identity;
  int power = 0;             // mul_r_pow exponent
  Rational factor{1};        // scale
  std::vector<Operator> children;
};

namespace {

using Node = Operator::Node;

void apply_primitive(const Node& node, const FunctionExpr& f, const Rational& k, ExprBuilder& out) {
  for (const auto& [key, coeff0] : f.terms()) {
    const Rational coeff = k * coeff0;
    const int a = key.a, eps = key.eps, c = key.c;
    const Rational& s = key.s;
    switch (node.tag) {
      case Primitive::identity:
        out.add(coeff, a, eps, c, s);
        break;
      case Primitive::partial_x1:
        // d/dx1 r = x1/r
        if (a > 0) out.add(coeff * a, a - 1, eps, c, s);
        if (c != 0) out.add(coeff * c, a + 1, eps, c - 2, s);
        if (s != 0) out.add(-coeff * s, a + 1, eps, c - 1, s);
        break;
      case Primitive::partial_x2:
        if (eps > 0) out.add(coeff, a, 0, c, s);
        if (c != 0) out.add(coeff * c, a, eps + 1, c - 2, s);
        if (s != 0) out.add(-coeff * s, a, eps + 1, c - 1, s);
        break;
      case Primitive::mul_x1:
        out.add(coeff, a + 1, eps, c, s);
        break;
      case Primitive::mul_x2:
        out.add(coeff, a, eps + 1, c, s);
        break;
      case Primitive::mul_r_pow:
        out.add(coeff, a, eps, c + node.power, s);
        break;
      case Primitive::refl1:
        out.add(a % 2 == 0 ? coeff : Rational(-coeff), a, eps, c, s);
        break;
      case Primitive::refl2:
        out.add(eps == 0 ? coeff : Rational(-coeff), a, eps, c, s);
        break;
      case Primitive::reflection_quotient1:
        if (a % 2 == 1) out.add(2 * coeff, a - 1, eps, c, s);
        break;
      case Primitive::reflection_quotient2:
        if (eps == 1) out.add(2 * coeff, a, 0, c, s);
        break;
    }
  }
}

}  // namespace

struct OperatorAccess {
  static const Operator::Node& node(const Operator& op) { return *op.node_; }
};

namespace {

// Accumulates k * (node f) into out.
void apply_into(const Node& node, const FunctionExpr& f, const Rational& k, ExprBuilder& out) {
  switch (node.kind) {
    case Node::Kind::primitive:
      apply_primitive(node, f, k, out);
      break;
    case Node::Kind::scale:
      apply_into(OperatorAccess::node(node.children.front()), f, k * node.factor, out);
      break;
    case Node::Kind::sum:
      for (const auto& child : node.children) apply_into(OperatorAccess::node(child), f, k, out);
      break;
    case Node::Kind::compose: {
      // children = {outer, inner}
      const FunctionExpr inner = node.children[1].apply(f);
      apply_into(OperatorAccess::node(node.children[0]), inner, k, out);
      break;
    }
  }
}

std::shared_ptr<const Node> make_primitive(Primitive tag, int power = 0) {
  auto node = std::make_shared<Node>();
  node->kind = Node::Kind::primitive;
  node->tag = tag;
  node->power = power;
  return node;
}

}  // namespace

Operator::Operator() : node_(make_primitive(Primitive::identity)) {}

Operator Operator::primitive(Primitive tag) {
  if (tag == Primitive::mul_r_pow) throw std::invalid_argument("use Operator::mul_r_pow");
  return Operator(make_primitive(tag));
}

Operator Operator::mul_r_pow(int c) {
  if (c == 0) return Operator();
  return Operator(make_primitive(Primitive::mul_r_pow, c));
}

Operator Operator::scalar(const Rational& k) { return k * Operator(); }

FunctionExpr Operator::apply(const FunctionExpr& f) const {
  ExprBuilder out;
  apply_into(*node_, f, Rational(1), out);
  return std::move(out).build();
}

std::size_t Operator::node_count() const {
  std::size_t n = 1;
  for (const auto& child : node_->children) n += child.node_count();
  return n;
}

Operator operator+(const Operator& x, const Operator& y) {
  auto node = std::make_shared<Node>();
  node->kind = Node::Kind::sum;
  for (const Operator* part : {&x, &y}) {
    if (part->node_->kind == Node::Kind::sum) {
      node->children.insert(node->children.end(), part->node_->children.begin(),
                            part->node_->children.end());
    } else {
      node->children.push_back(*part);
    }
  }
  return Operator(std::move(node));
}

Operator operator*(const Rational& k, const Operator& x) {
  auto node = std::make_shared<Node>();
  node->kind = Node::Kind::scale;
  if (x.node_->kind == Node::Kind::scale) {
    node->factor = k * x.node_->factor;
    node->children = x.node_->children;
  } else {
    node->factor = k;
    node->children.push_back(x);
  }
  return Operator(std::move(node));
}

Operator operator-(const Operator& x) { return Rational(-1) * x; }

Operator operator-(const Operator& x, const Operator& y) { return x + (-y); }

Operator operator*(const Operator& x, const Operator& y) {
  auto node = std::make_shared<Node>();
  node->kind = Node::Kind::compose;
  node->children = {x, y};
  return Operator(std::move(node));
}

Operator operator+(const Operator& x, const Rational& k) { return x + Operator::scalar(k); }
Operator operator-(const Operator& x, const Rational& k) { return x + Operator::scalar(-k); }

Operator commutator(const Operator& x, const Operator& y) { return x * y - y * x; }
Operator anticommutator(const Operator& x, const Operator& y) { return x * y + y * x; }

Operator dunkl_derivative(int i, const ModelParams& params) {
  if (i == 1) {
    return Operator::primitive(Primitive::partial_x1) +
           params.mu1 * Operator::primitive(Primitive::reflection_quotient1);
  }
  if (i == 2) {
    return Operator::primitive(Primitive::partial_x2) +
           params.mu2 * Operator::primitive(Primitive::reflection_quotient2);
  }
  throw std::invalid_argument("Dunkl derivative index must be 1 or 2");
}

DunklCoulombOperators::DunklCoulombOperators(const ModelParams& p)
    : params(p),
      R1(Operator::primitive(Primitive::refl1)),
      R2(Operator::primitive(Primitive::refl2)),
      D1(dunkl_derivative(1, p)),
      D2(dunkl_derivative(2, p)) {
  params.validate();
  const Operator x1 = Operator::primitive(Primitive::mul_x1);
  const Operator x2 = Operator::primitive(Primitive::mul_x2);
  const Operator r = Operator::mul_r_pow(1);
  const Operator inv_r = Operator::mul_r_pow(-1);
  const Rational half(1, 2);
  const Rational quarter(1, 4);
  const Rational& alpha = p.alpha;
  const Rational inv_alpha = Rational(1) / alpha;
  const Rational two_over_alpha_sq = Rational(2) / (alpha * alpha);

  laplacian = D1 * D1 + D2 * D2;
  hamiltonian = Rational(-1, 2) * laplacian + alpha * inv_r;
  dilation = x1 * Operator::primitive(Primitive::partial_x1) +
             x2 * Operator::primitive(Primitive::partial_x2) + (p.mu() + half);

  const Operator r_lap = -(r * laplacian);
  L0 = r_lap + quarter * r;
  Lplus = r_lap - quarter * r + dilation;
  Lminus = r_lap - quarter * r - dilation;
  casimir_so21 = L0 * L0 - half * (Lplus * Lminus + Lminus * Lplus);

  Jcal = x1 * D2 - x2 * D1;

  A1 = inv_r * x1 - (p.mu1 * inv_alpha) * (D1 * R1) - (half * inv_alpha) * anticommutator(Jcal, D2);
  A2 = inv_r * x2 - (p.mu2 * inv_alpha) * (D2 * R2) + (half * inv_alpha) * anticommutator(Jcal, D1);

  const Operator reflection_mix =
      p.mu1 * R1 + p.mu2 * R2 + (2 * p.mu1 * p.mu2) * (R1 * R2);
  Q = A1 * A1 + A2 * A2 + two_over_alpha_sq * (hamiltonian * Jcal * Jcal) -
      two_over_alpha_sq * (hamiltonian * reflection_mix);
}

const std::vector<std::string_view>& operator_names() {
  static const std::vector<std::string_view> names = {
      "laplacian", "hamiltonian", "dilation", "L0", "Lplus", "Lminus", "casimir_so21",
      "Jcal",      "A1",          "A2",       "Q",  "Refl1", "Refl2"};
  return names;
}

Operator named_operator(std::string_view name, const ModelParams& params) {
  const DunklCoulombOperators ops(params);
  if (name == "laplacian") return ops.laplacian;
  if (name == "hamiltonian") return ops.hamiltonian;
  if (name == "dilation") return ops.dilation;
  if (name == "L0") return ops.L0;
  if (name == "Lplus") return ops.Lplus;
  if (name == "Lminus") return ops.Lminus;
  if (name == "casimir_so21") return ops.casimir_so21;
  if (name == "Jcal") return ops.Jcal;
  if (name == "A1") return ops.A1;
  if (name == "A2") return ops.A2;
  if (name == "Q") return ops.Q;
  if (name == "Refl1") return ops.R1;
  if (name == "Refl2") return ops.R2;
  throw std::invalid_argument("unknown operator: '" + std::string(name) + "'");
}

}  // namespace dcp
