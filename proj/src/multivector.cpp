#include "nullpol/multivector.hpp"

#include <algorithm>

#include "nullpol/errors.hpp"

namespace nullpol {
namespace {

constexpr std::size_t dense_accumulator_limit = 8;

// Collects terms of a product; dense for small algebras.
class Accumulator {
 public:
  explicit Accumulator(const Algebra& alg) : dense_(alg.dim() <= dense_accumulator_limit) {
    if (dense_) values_.resize(alg.blade_count());
  }

  void add(BladeMask m, const Scalar& c) {
    if (dense_) {
      values_[m] += c;
      return;
    }
    auto [it, inserted] = sparse_.try_emplace(m, c);
    if (!inserted) it->second += c;
  }

  Multivector::Terms take() {
    Multivector::Terms out;
    if (dense_) {
      for (std::size_t m = 0; m < values_.size(); ++m)
        if (!values_[m].is_zero()) out.emplace_hint(out.end(), static_cast<BladeMask>(m), std::move(values_[m]));
      return out;
    }
    for (auto& [m, c] : sparse_)
      if (!c.is_zero()) out.emplace_hint(out.end(), m, std::move(c));
    return out;
  }

 private:
  bool dense_;
  std::vector<Scalar> values_;
  std::map<BladeMask, Scalar> sparse_;
};

std::vector<std::size_t> indices(BladeMask m) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; m != 0; ++i, m >>= 1)
    if (m & 1u) out.push_back(i);
  return out;
}

bool display_less(BladeMask a, BladeMask b) {
  if (grade_of(a) != grade_of(b)) return grade_of(a) < grade_of(b);
  return indices(a) < indices(b);
}

// Sign of the reversal of a grade-k blade, (-1)^{k(k-1)/2}.
int reversal_sign(int k) { return ((k * (k - 1) / 2) & 1) ? -1 : 1; }

}  // namespace

Multivector::Multivector(AlgebraPtr algebra) : algebra_(std::move(algebra)) {
  if (!algebra_) throw std::invalid_argument("null algebra");
}

Multivector::Multivector(AlgebraPtr algebra, Terms terms) : Multivector(std::move(algebra)) {
  for (auto& [m, c] : terms) {
    if (m > algebra_->full_mask()) throw GradeOutOfRange("blade mask outside the algebra");
    if (!c.is_zero()) terms_.emplace_hint(terms_.end(), m, std::move(c));
  }
}

Multivector Multivector::scalar(AlgebraPtr algebra, const Scalar& s) { return blade(std::move(algebra), 0, s); }

Multivector Multivector::blade(AlgebraPtr algebra, BladeMask mask, const Scalar& coeff) {
  Terms t;
  t.emplace(mask, coeff);
  return Multivector(std::move(algebra), std::move(t));
}

Multivector Multivector::vector(AlgebraPtr algebra, std::span<const Scalar> coords) {
  if (coords.size() != algebra->dim()) throw DimensionMismatch("vector length differs from algebra dimension");
  Terms t;
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (!coords[i].is_zero()) t.emplace(BladeMask{1} << i, coords[i]);
  return Multivector(std::move(algebra), std::move(t));
}

Scalar Multivector::coeff(BladeMask m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? Scalar(0) : it->second;
}

bool Multivector::is_scalar() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0); }

bool Multivector::is_real() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.is_real(); });
}

int Multivector::max_grade() const {
  int g = -1;
  for (const auto& [m, c] : terms_) g = std::max(g, grade_of(m));
  return g;
}

std::optional<int> Multivector::homogeneous_grade() const {
  if (terms_.empty()) return std::nullopt;
  const int g = grade_of(terms_.begin()->first);
  for (const auto& [m, c] : terms_)
    if (grade_of(m) != g) return std::nullopt;
  return g;
}

std::vector<Scalar> Multivector::vector_coords() const {
  std::vector<Scalar> out(algebra_->dim());
  for (const auto& [m, c] : terms_) {
    if (grade_of(m) != 1) throw GradeOutOfRange("expected a grade-1 element, got " + str());
    out[static_cast<std::size_t>(__builtin_ctz(m))] = c;
  }
  return out;
}

void Multivector::check_same(const Multivector& o) const {
  if (!algebra_->same_as(*o.algebra_)) throw AlgebraMismatch();
}

Multivector& Multivector::operator+=(const Multivector& o) {
  check_same(o);
  for (const auto& [m, c] : o.terms_) {
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

Multivector& Multivector::operator-=(const Multivector& o) { return *this += -o; }

Multivector& Multivector::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

bool operator==(const Multivector& a, const Multivector& b) {
  return a.algebra_->same_as(*b.algebra_) && a.terms_ == b.terms_;
}

std::string Multivector::str() const {
  if (terms_.empty()) return "0";
  std::vector<BladeMask> order;
  for (const auto& [m, c] : terms_) order.push_back(m);
  std::sort(order.begin(), order.end(), display_less);

  std::string out;
  bool first = true;
  for (BladeMask m : order) {
    const Scalar& c = terms_.at(m);
    std::string body;
    bool negative = false;
    if (c.is_real()) {
      negative = sgn(c.real()) < 0;
      const mpq_class mag = abs(c.real());
      if (m == 0)
        body = mag.get_str();
      else
        body = (mag == 1 ? "" : mag.get_str() + "*") + algebra_->blade_name(m);
    } else {
      body = "(" + c.str() + ")" + (m == 0 ? "" : "*" + algebra_->blade_name(m));
    }
    if (first)
      out += negative ? "-" + body : body;
    else
      out += (negative ? " - " : " + ") + body;
    first = false;
  }
  return out;
}

Multivector geometric_product(const Multivector& a, const Multivector& b) {
  if (!a.algebra()->same_as(*b.algebra())) throw AlgebraMismatch();
  const Algebra& alg = *a.algebra();
  Accumulator acc(alg);
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      const Scalar cab = ca * cb;
      alg.for_each_product_term(ma, mb, [&](BladeMask m, const Scalar& c) { acc.add(m, cab * c); });
    }
  return Multivector(a.algebra(), acc.take());
}

Multivector outer_product(const Multivector& a, const Multivector& b) {
  if (!a.algebra()->same_as(*b.algebra())) throw AlgebraMismatch();
  // The top-grade part of e_A e_B in the wedge basis is e_A ^ e_B.
  Accumulator acc(*a.algebra());
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms())
      if (const int s = wedge_sign(ma, mb); s != 0) acc.add(ma | mb, s == 1 ? ca * cb : -(ca * cb));
  return Multivector(a.algebra(), acc.take());
}

Multivector inner_product(const Multivector& a, const Multivector& b) {
  if (!a.algebra()->same_as(*b.algebra())) throw AlgebraMismatch();
  const Algebra& alg = *a.algebra();
  Accumulator acc(alg);
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      const int target = std::abs(grade_of(ma) - grade_of(mb));
      const Scalar cab = ca * cb;
      alg.for_each_product_term(ma, mb, [&](BladeMask m, const Scalar& c) {
        if (grade_of(m) == target) acc.add(m, cab * c);
      });
    }
  return Multivector(a.algebra(), acc.take());
}

Multivector grade_project(const Multivector& a, int k) {
  if (k < 0 || static_cast<std::size_t>(k) > a.algebra()->dim())
    throw GradeOutOfRange("grade " + std::to_string(k) + " outside 0.." + std::to_string(a.algebra()->dim()));
  Multivector::Terms t;
  for (const auto& [m, c] : a.terms())
    if (grade_of(m) == k) t.emplace_hint(t.end(), m, c);
  return Multivector(a.algebra(), std::move(t));
}

Multivector conjugate(const Multivector& a) {
  Multivector::Terms t;
  for (const auto& [m, c] : a.terms()) {
    const int k = grade_of(m);
    const int s = ((k & 1) ? -1 : 1) * reversal_sign(k);
    t.emplace_hint(t.end(), m, s == 1 ? c : -c);
  }
  return Multivector(a.algebra(), std::move(t));
}

Multivector main_involution(const Multivector& a) {
  Multivector::Terms t;
  for (const auto& [m, c] : a.terms()) t.emplace_hint(t.end(), m, (grade_of(m) & 1) ? -c : c);
  return Multivector(a.algebra(), std::move(t));
}

Scalar bilinear(const Multivector& a, const Multivector& c) {
  if (!a.algebra()->same_as(*c.algebra())) throw AlgebraMismatch();
  const auto x = a.vector_coords();
  const auto y = c.vector_coords();
  const Matrix& form = a.algebra()->form();
  Scalar s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < y.size(); ++j)
      if (!y[j].is_zero() && !form(i, j).is_zero()) s += x[i] * form(i, j) * y[j];
  }
  return s;
}

Multivector pseudoscalar(const AlgebraPtr& algebra) {
  if (algebra->is_degenerate())
    throw DegenerateForm("pseudoscalar duality is undefined for a degenerate form");
  return Multivector::blade(algebra, algebra->full_mask());
}

Multivector dual(const Multivector& a) { return a * pseudoscalar(a.algebra()); }

std::vector<Multivector> center_basis(const AlgebraPtr& algebra, bool even_only) {
  if (algebra->is_degenerate()) throw DegenerateForm("center classification assumes a non-degenerate form");
  std::vector<Multivector> out{Multivector::scalar(algebra, 1)};
  const bool n_odd = (algebra->dim() & 1) != 0;
  // Full algebra: J is central iff n is odd. Even part: J is central iff n is even.
  if (n_odd != even_only && algebra->dim() > 0) out.push_back(pseudoscalar(algebra));
  return out;
}

namespace {

Parity parity_of(const Multivector& v) {
  if (v.is_zero()) throw NotAVersor("zero is not a versor");
  const int p = grade_of(v.terms().begin()->first) & 1;
  for (const auto& [m, c] : v.terms())
    if ((grade_of(m) & 1) != p) throw NotAVersor("mixed parity element " + v.str());
  return p ? Parity::odd : Parity::even;
}

}  // namespace

Versor::Versor(Multivector value) : value_(std::move(value)), parity_(parity_of(value_)) {}

Versor::Versor(Multivector value, std::vector<Multivector> witness)
    : value_(std::move(value)), parity_(parity_of(value_)), witness_(std::move(witness)) {
  for (const auto& w : *witness_)
    if (w.homogeneous_grade() != 1) throw NotAVersor("witness entries must be nonzero vectors");
  if ((witness_->size() & 1) != (parity_ == Parity::odd ? 1u : 0u))
    throw NotAVersor("witness length parity differs from versor parity");
}

Versor Versor::from_vectors(const AlgebraPtr& algebra, std::span<const Multivector> vectors) {
  return Versor(product_of(algebra, vectors), std::vector<Multivector>(vectors.begin(), vectors.end()));
}

Scalar norm(const Versor& v) {
  const Multivector n = v.value() * conjugate(v.value());
  if (!n.is_scalar()) throw NotAVersor("v v* is not a scalar for " + v.value().str());
  return n.scalar_part();
}

Versor versor_inverse(const Versor& v) {
  const Scalar n = norm(v);
  if (n.is_zero()) throw NullVersor("N(v) = 0 for " + v.value().str());
  return Versor(conjugate(v.value()) * n.inverse());
}

Multivector sandwich(const Multivector& g, const Multivector& x) {
  return main_involution(g) * x * conjugate(g);
}

bool is_versor(const Multivector& g) {
  if (g.is_zero()) return false;
  try {
    const Versor v(g);
    if (norm(v).is_zero()) return false;
  } catch (const NotAVersor&) {
    return false;
  }
  const auto& alg = g.algebra();
  for (std::size_t i = 0; i < alg->dim(); ++i) {
    const Multivector image = sandwich(g, Multivector::blade(alg, BladeMask{1} << i));
    if (!image.is_zero() && image.homogeneous_grade() != 1) return false;
  }
  return true;
}

Multivector product_of(const AlgebraPtr& algebra, std::span<const Multivector> factors) {
  Multivector acc = Multivector::scalar(algebra, 1);
  for (const auto& f : factors) acc = acc * f;
  return acc;
}

}  // namespace nullpol
