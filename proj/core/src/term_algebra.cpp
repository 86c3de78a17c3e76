#include "dcp/term_algebra.hpp"

#include <cmath>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace dcp {

bool TermKeyLess::operator()(const TermKey& lhs, const TermKey& rhs) const {
  if (const int sc = cmp(lhs.s, rhs.s); sc != 0) return sc < 0;
  if (lhs.a != rhs.a) return lhs.a < rhs.a;
  if (lhs.eps != rhs.eps) return lhs.eps < rhs.eps;
  return lhs.c < rhs.c;
}

FunctionExpr FunctionExpr::constant(const Rational& value) {
  ExprBuilder b;
  b.add(value, 0, 0, 0, Rational(0));
  return std::move(b).build();
}

FunctionExpr FunctionExpr::monomial(const Rational& coeff, int a, int b, int c, const Rational& s) {
  ExprBuilder builder;
  builder.add(coeff, a, b, c, s);
  return std::move(builder).build();
}

Rational FunctionExpr::max_abs_coeff() const {
  Rational best(0);
  for (const auto& [key, coeff] : terms_) {
    if (abs(coeff) > best) best = abs(coeff);
  }
  return best;
}

void ExprBuilder::add_canonical(const Rational& coeff, int a, int eps, int c, const Rational& s) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(TermKey{a, eps, c, s}, coeff);
  if (!inserted) it->second += coeff;
}

void ExprBuilder::add(const Rational& coeff, int a, int b, int c, const Rational& s) {
  if (a < 0 || b < 0) throw std::invalid_argument("negative x-exponent in term");
  if (s < 0) throw std::invalid_argument("negative exponential rate in term");
  if (coeff == 0) return;
  // x2^(2q+eps) = x2^eps (r^2 - x1^2)^q
  const int q = b / 2;
  const int eps = b % 2;
  mpz_class binom = 1;
  for (int j = 0; j <= q; ++j) {
    const Rational term = (j % 2 == 0 ? coeff : Rational(-coeff)) * binom;
    add_canonical(term, a + 2 * j, eps, c + 2 * (q - j), s);
    binom = binom * (q - j) / (j + 1);
  }
}

void ExprBuilder::add(const Rational& scale, const FunctionExpr& f) {
  if (scale == 0) return;
  for (const auto& [key, coeff] : f.terms()) add_canonical(scale * coeff, key.a, key.eps, key.c, key.s);
}

FunctionExpr ExprBuilder::build() && {
  std::erase_if(terms_, [](const auto& kv) { return kv.second == 0; });
  return FunctionExpr(std::move(terms_));
}

FunctionExpr normalize(std::span<const RawTerm> raw) {
  ExprBuilder b;
  for (const auto& t : raw) b.add(t.coeff, t.a, t.b, t.c, t.s);
  return std::move(b).build();
}

FunctionExpr normalize(std::initializer_list<RawTerm> raw) {
  return normalize(std::span<const RawTerm>(raw.begin(), raw.size()));
}

FunctionExpr linear_combine(std::span<const std::pair<Rational, FunctionExpr>> pairs) {
  ExprBuilder b;
  for (const auto& [k, f] : pairs) b.add(k, f);
  return std::move(b).build();
}

FunctionExpr operator+(const FunctionExpr& f, const FunctionExpr& g) {
  ExprBuilder b;
  b.add(Rational(1), f);
  b.add(Rational(1), g);
  return std::move(b).build();
}

FunctionExpr operator-(const FunctionExpr& f, const FunctionExpr& g) {
  ExprBuilder b;
  b.add(Rational(1), f);
  b.add(Rational(-1), g);
  return std::move(b).build();
}

FunctionExpr operator-(const FunctionExpr& f) { return Rational(-1) * f; }

FunctionExpr operator*(const Rational& k, const FunctionExpr& f) {
  ExprBuilder b;
  b.add(k, f);
  return std::move(b).build();
}

FunctionExpr multiply(const FunctionExpr& f, const FunctionExpr& g) {
  ExprBuilder b;
  for (const auto& [kf, cf] : f.terms()) {
    for (const auto& [kg, cg] : g.terms()) {
      b.add(cf * cg, kf.a + kg.a, kf.eps + kg.eps, kf.c + kg.c, kf.s + kg.s);
    }
  }
  return std::move(b).build();
}

namespace {

double evaluate_impl(const FunctionExpr& f, double x1, double x2, bool with_exp) {
  const double r = std::hypot(x1, x2);
  double sum = 0.0;
  for (const auto& [key, coeff] : f.terms()) {
    if (r == 0.0 && key.c < 0) {
      throw std::domain_error("negative power of r evaluated at the origin");
    }
    double v = to_double(coeff) * std::pow(x1, key.a) * (key.eps == 1 ? x2 : 1.0);
    if (key.c != 0) v *= std::pow(r, key.c);
    if (with_exp && key.s != 0) v *= std::exp(-to_double(key.s) * r);
    sum += v;
  }
  return sum;
}

}  // namespace

double evaluate(const FunctionExpr& f, double x1, double x2) { return evaluate_impl(f, x1, x2, true); }

double evaluate_prefactor(const FunctionExpr& f, double x1, double x2) {
  return evaluate_impl(f, x1, x2, false);
}

FunctionExpr dilate(const FunctionExpr& f, const Rational& lambda) {
  if (lambda <= 0) throw std::invalid_argument("dilation factor must be positive");
  ExprBuilder b;
  for (const auto& [key, coeff] : f.terms()) {
    b.add(coeff * pow(lambda, key.a + key.eps + key.c), key.a, key.eps, key.c, lambda * key.s);
  }
  return std::move(b).build();
}

FunctionExpr reflect(const FunctionExpr& f, int axis) {
  if (axis != 1 && axis != 2) throw std::invalid_argument("reflection axis must be 1 or 2");
  ExprBuilder b;
  for (const auto& [key, coeff] : f.terms()) {
    const int parity = axis == 1 ? key.a % 2 : key.eps;
    b.add(parity == 0 ? coeff : Rational(-coeff), key.a, key.eps, key.c, key.s);
  }
  return std::move(b).build();
}

void to_json(nlohmann::json& j, const FunctionExpr& f) {
  auto terms = nlohmann::json::array();
  for (const auto& [key, coeff] : f.terms()) {
    terms.push_back({{"coeff", to_string(coeff)},
                     {"a", key.a},
                     {"eps", key.eps},
                     {"c", key.c},
                     {"s", to_string(key.s)}});
  }
  j = nlohmann::json{{"terms", std::move(terms)}};
}

void from_json(const nlohmann::json& j, FunctionExpr& f) {
  ExprBuilder b;
  for (const auto& t : j.at("terms")) {
    const int eps = t.at("eps").get<int>();
    if (eps != 0 && eps != 1) throw std::invalid_argument("eps must be 0 or 1");
    b.add(parse_rational(t.at("coeff").get<std::string>()), t.at("a").get<int>(), eps,
          t.at("c").get<int>(), parse_rational(t.at("s").get<std::string>()));
  }
  f = std::move(b).build();
}

}  // namespace dcp
