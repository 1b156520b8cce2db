#include "nullpol/algebra.hpp"

#include <map>

#include "nullpol/errors.hpp"

namespace nullpol {
namespace {

constexpr std::size_t table_dim_limit = 8;

void add_term(std::map<BladeMask, Scalar>& acc, BladeMask m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = acc.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) acc.erase(it);
  }
}

std::vector<BladeTerm> to_terms(const std::map<BladeMask, Scalar>& acc) {
  std::vector<BladeTerm> out;
  out.reserve(acc.size());
  for (const auto& [m, c] : acc) out.push_back({m, c});
  return out;
}


}  // namespace

Signature inertia(const Matrix& form) {
  // Symmetric Gaussian elimination (congruence) over Q; a zero pivot with a
  // nonzero off-diagonal entry is fixed by adding the partner row/column.
  Matrix a = form;
  const std::size_t n = a.rows();
  Signature sig;
  for (std::size_t k = 0; k < n; ++k) {
    if (a(k, k).is_zero()) {
      std::size_t j = k + 1;
      while (j < n && a(k, j).is_zero()) ++j;
      if (j < n) {
        // Replace e_k by e_k + s e_j with s chosen so the new square is nonzero.
        const Scalar s = (a(j, j) + 2 * a(k, j)).is_zero() ? Scalar(-1) : Scalar(1);
        for (std::size_t c = 0; c < n; ++c) a(k, c) += s * a(j, c);
        for (std::size_t r = 0; r < n; ++r) a(r, k) += s * a(r, j);
      }
    }
    if (a(k, k).is_zero()) {
      ++sig.r;
      continue;
    }
    (a(k, k).sign() > 0 ? sig.p : sig.q) += 1;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k).is_zero()) continue;
      const Scalar f = a(i, k) / a(k, k);
      for (std::size_t c = k; c < n; ++c) a(i, c) -= f * a(k, c);
      for (std::size_t r = k; r < n; ++r) a(r, i) -= f * a(r, k);
    }
  }
  return sig;
}

int wedge_sign(BladeMask a, BladeMask b) noexcept {
  if ((a & b) != 0) return 0;
  // Count pairs (i in a, j in b) with i > j.
  int swaps = 0;
  for (BladeMask t = a >> 1; t != 0; t >>= 1) swaps += __builtin_popcount(t & b);
  return (swaps & 1) ? -1 : 1;
}

AlgebraPtr Algebra::create(Matrix form) {
  if (!form.is_square()) throw DimensionMismatch("bilinear form must be square");
  if (form.rows() > max_dim)
    throw DimensionMismatch("algebra dimension " + std::to_string(form.rows()) + " exceeds " +
                            std::to_string(max_dim));
  if (!form.is_real()) throw DimensionMismatch("bilinear form must be real");
  if (!form.is_symmetric()) throw DimensionMismatch("bilinear form must be symmetric");
  return AlgebraPtr(new Algebra(std::move(form)));
}

AlgebraPtr Algebra::diagonal(int p, int q, int r) {
  const int n = p + q + r;
  Matrix form(n, n);
  for (int i = 0; i < n; ++i) form(i, i) = i < p ? 1 : (i < p + q ? -1 : 0);
  return create(std::move(form));
}

Algebra::Algebra(Matrix form) : dim_(form.rows()), form_(std::move(form)) {
  diagonal_ = true;
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      if (i != j && !form_(i, j).is_zero()) diagonal_ = false;
  signature_ = inertia(form_);
  if (!diagonal_ && dim_ <= table_dim_limit) build_table();
}

Scalar Algebra::diagonal_product_coeff(BladeMask a, BladeMask b) const {
  // Reorder e_a e_b, then each shared generator contributes its square.
  int swaps = 0;
  for (BladeMask t = a >> 1; t != 0; t >>= 1) swaps += __builtin_popcount(t & b);
  Scalar c = (swaps & 1) ? -1 : 1;
  for (BladeMask common = a & b; common != 0; common &= common - 1) {
    const auto i = static_cast<std::size_t>(__builtin_ctz(common));
    if (form_(i, i).is_zero()) return 0;
    c *= form_(i, i);
  }
  return c;
}

// e_i -| e_m : sum over j in m of (-1)^pos b(e_i, e_j) e_{m \ j}.
std::vector<BladeTerm> Algebra::contract_vector(std::size_t i, BladeMask m) const {
  std::vector<BladeTerm> out;
  int pos = 0;
  for (std::size_t j = 0; j < dim_; ++j) {
    if (!(m >> j & 1u)) continue;
    if (!form_(i, j).is_zero()) out.push_back({m & ~(BladeMask{1} << j), (pos & 1) ? -form_(i, j) : form_(i, j)});
    ++pos;
  }
  return out;
}

std::vector<BladeTerm> Algebra::vector_times_blade(std::size_t i, BladeMask m) const {
  std::vector<BladeTerm> out = contract_vector(i, m);
  const BladeMask gen = BladeMask{1} << i;
  if (const int s = wedge_sign(gen, m); s != 0) out.push_back({gen | m, s});
  return out;
}

// With i the lowest generator of a: e_a = e_i ^ e_rest = e_i e_rest - e_i -| e_rest,
// hence e_a e_b = e_i (e_rest e_b) - (e_i -| e_rest) e_b.
std::vector<BladeTerm> Algebra::compute_product(BladeMask a, BladeMask b) const {
  if (a == 0) return {{b, 1}};
  if (!table_.empty()) return table_[(std::size_t{a} << dim_) | b];
  const auto i = static_cast<std::size_t>(__builtin_ctz(a));
  const BladeMask rest = a & (a - 1);
  std::map<BladeMask, Scalar> acc;
  for (const auto& t : compute_product(rest, b))
    for (const auto& u : vector_times_blade(i, t.mask)) add_term(acc, u.mask, t.coeff * u.coeff);
  for (const auto& t : contract_vector(i, rest))
    for (const auto& u : compute_product(t.mask, b)) add_term(acc, u.mask, -(t.coeff * u.coeff));
  return to_terms(acc);
}

void Algebra::build_table() {
  const std::size_t n = blade_count();
  std::vector<std::vector<BladeTerm>> table(n * n);
  // Masks referenced on the right-hand side are strictly smaller than a.
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (a == 0) {
        table[b] = {{static_cast<BladeMask>(b), 1}};
        continue;
      }
      const auto i = static_cast<std::size_t>(__builtin_ctz(static_cast<unsigned>(a)));
      const std::size_t rest = a & (a - 1);
      std::map<BladeMask, Scalar> acc;
      for (const auto& t : table[(rest << dim_) | b])
        for (const auto& u : vector_times_blade(i, t.mask)) add_term(acc, u.mask, t.coeff * u.coeff);
      for (const auto& t : contract_vector(i, static_cast<BladeMask>(rest)))
        for (const auto& u : table[(std::size_t{t.mask} << dim_) | b])
          add_term(acc, u.mask, -(t.coeff * u.coeff));
      table[(a << dim_) | b] = to_terms(acc);
    }
  }
  table_ = std::move(table);
}

std::vector<BladeTerm> Algebra::blade_product(BladeMask a, BladeMask b) const {
  if (diagonal_) {
    const Scalar c = diagonal_product_coeff(a, b);
    if (c.is_zero()) return {};
    return {{a ^ b, c}};
  }
  return compute_product(a, b);
}

std::string Algebra::blade_name(BladeMask m) const {
  if (m == 0) return "1";
  std::string out = "e";
  bool first = true;
  for (std::size_t i = 0; i < dim_; ++i) {
    if (!(m >> i & 1u)) continue;
    if (dim_ > 9 && !first) out += '_';
    out += std::to_string(i + 1);
    first = false;
  }
  return out;
}

}  // namespace nullpol
