#include "nullpol/factorize.hpp"

#include <algorithm>
#include <array>

#include "nullpol/errors.hpp"

namespace nullpol {
namespace {

constexpr std::size_t probes_per_level = 4;
constexpr std::size_t detour_probes = 12;
constexpr std::size_t node_limit = 4000;

bool parallel(const Multivector& a, const Multivector& b) { return outer_product(a, b).is_zero(); }

class Descent {
 public:
  Descent(AlgebraPtr alg, std::optional<std::size_t> budget) : alg_(std::move(alg)), budget_(budget) {
    for (std::size_t i = 0; i < alg_->dim(); ++i) basis_.push_back(Multivector::blade(alg_, BladeMask{1} << i));
  }

  // Extracted vectors in extraction order, remainder last.
  std::optional<std::vector<Multivector>> run(const Multivector& g, std::size_t used) {
    const int m = g.max_grade();
    if (m <= 1) {
      std::vector<Multivector> tail;
      if (m == 1) tail.push_back(g);
      if (over(used + tail.size())) return std::nullopt;
      return tail;
    }
    if (over(used + m) || ++nodes_ > node_limit || used > 3 * alg_->dim()) return std::nullopt;

    const Multivector top = grade_project(g, m);
    const auto space = opns(Blade(top));
    for (const auto& v : nonnull_candidates(space, probes_per_level)) {
      const Multivector next = g * v;
      if (next.max_grade() >= m) continue;
      if (auto tail = run(next, used + 1)) {
        tail->insert(tail->begin(), v);
        return tail;
      }
    }

    // Totally isotropic OPNS (or dead ends below): spend two vectors.
    if (over(used + m + 2)) return std::nullopt;
    for (const auto& w : nonnull_candidates(basis_, detour_probes)) {
      if (outer_product(w, top).is_zero()) continue;
      const Multivector raised = g * w;
      const auto space2 = opns(Blade(grade_project(raised, raised.max_grade())));
      std::size_t tried = 0;
      for (const auto& v : nonnull_candidates(space2, 2 * probes_per_level)) {
        if (parallel(v, w)) continue;
        const Multivector next = raised * v;
        if (next.max_grade() > m) continue;
        if (++tried > probes_per_level) break;
        if (auto tail = run(next, used + 2)) {
          tail->insert(tail->begin(), v);
          tail->insert(tail->begin(), w);
          return tail;
        }
      }
    }
    return std::nullopt;
  }

 private:
  bool over(std::size_t n) const { return budget_ && n > *budget_; }

  AlgebraPtr alg_;
  std::optional<std::size_t> budget_;
  std::vector<Multivector> basis_;
  std::size_t nodes_ = 0;
};

}  // namespace

std::vector<Multivector> nonnull_candidates(std::span<const Multivector> space, std::size_t limit) {
  std::vector<Multivector> out;
  const auto push = [&](const Multivector& v) {
    if (out.size() < limit && !v.is_zero() && !quadratic(v).is_zero()) out.push_back(v);
    return out.size() >= limit;
  };
  const std::size_t n = space.size();
  for (std::size_t i = 0; i < n; ++i)
    if (push(space[i])) return out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (push(space[i] + space[j])) return out;
  static const std::array<Scalar, 3> coeffs{1, -1, 2};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        for (const auto& a : coeffs)
          for (const auto& b : coeffs)
            for (const auto& c : coeffs)
              if (push(a * space[i] + b * space[j] + c * space[k])) return out;
  return out;
}

Multivector choose_nonnull_vector(std::span<const Multivector> space) {
  const auto c = nonnull_candidates(space, 1);
  if (c.empty()) throw NoNonNullVector("span is totally isotropic");
  return c.front();
}

std::vector<Multivector> factorize_versor(const Versor& g) {
  const Multivector& value = g.value();
  if (value.is_zero()) throw NullVersor("zero is not a versor");
  if (norm(g).is_zero()) throw NullVersor("N(g) = 0; the descent is undefined for null versors");
  if (value.max_grade() == 0) return {};

  const auto& alg = value.algebra();
  auto tail = Descent(alg, alg->dim()).run(value, 0);
  if (!tail) tail = Descent(alg, std::nullopt).run(value, 0);
  if (!tail) throw NoNonNullVector("grade descent found no admissible vector for " + value.str());
  std::reverse(tail->begin(), tail->end());
  return *tail;
}

}  // namespace nullpol

namespace nullpol::klein {

std::vector<NullPolarity> polarity_chain(std::span<const Multivector> factors, Action innermost) {
  std::vector<NullPolarity> out;
  const std::size_t n = factors.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Action a = (n - 1 - i) % 2 == 0 ? innermost : opposite(innermost);
    out.push_back(vector_to_null_polarity(factors[i], a));
  }
  return out;
}

Matrix chain_product(std::span<const NullPolarity> chain) {
  Matrix p = Matrix::identity(4);
  for (const auto& np : chain) p = p * np.matrix;
  return p;
}

FactorizationResult factorize_matrix(const ProjTransform4& t, ScalarMode mode) {
  const Versor v = proj_to_versor(t, mode);
  FactorizationResult r;
  r.factors = factorize_versor(v);
  r.polarities = polarity_chain(r.factors, t.action);
  verify_factorization(r, t);
  return r;
}

bool verify_factorization(FactorizationResult& r, const ProjTransform4& t) {
  r.verified = false;
  r.scale = 0;
  r.residual = Matrix();
  if (t.matrix.rows() != 4 || t.matrix.cols() != 4) return false;
  const std::size_t n = r.polarities.size();
  for (const auto& np : r.polarities)
    if (np.matrix.rows() != 4 || np.matrix.cols() != 4) return false;

  const Matrix product = chain_product(r.polarities);
  const auto idx = first_nonzero(t.matrix.entries());
  if (!idx) return false;
  r.scale = product.entries()[*idx] / t.matrix.entries()[*idx];
  r.residual = product - r.scale * t.matrix;
  if (r.scale.is_zero() || !r.residual.is_zero()) return false;

  if (n > 6) return false;
  if ((n % 2 == 0) != (t.kind == TransformKind::collineation)) return false;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& np = r.polarities[i];
    if (!np.matrix.is_skew_symmetric()) return false;
    const Action expected = (n - 1 - i) % 2 == 0 ? t.action : opposite(t.action);
    if (np.action != expected) return false;
  }
  if (!r.factors.empty()) {
    if (r.factors.size() != n) return false;
    for (std::size_t i = 0; i < n; ++i) {
      const auto& f = r.factors[i];
      if (!f.algebra()->same_as(*algebra()) || f.homogeneous_grade() != 1) return false;
      if (!proportionality(vector_to_null_polarity(f, r.polarities[i].action).matrix, r.polarities[i].matrix))
        return false;
    }
  }
  r.verified = true;
  return true;
}

bool verify_factorization(const FactorizationResult& r, const ProjTransform4& t) {
  FactorizationResult copy = r;
  return verify_factorization(copy, t);
}

}  // namespace nullpol::klein
