#include "nullpol/klein.hpp"

#include <algorithm>
#include <utility>

#include "nullpol/errors.hpp"
#include "nullpol/factorize.hpp"

namespace nullpol::klein {
namespace {

// Plucker index pairs in coordinate order.
constexpr std::array<std::pair<int, int>, 6> pairs{{{0, 1}, {0, 2}, {0, 3}, {2, 3}, {3, 1}, {1, 2}}};

BladeMask mask_of(const char* digits) {
  BladeMask m = 0;
  for (const char* c = digits; *c; ++c) m |= BladeMask{1} << (*c - '1');
  return m;
}

std::array<BladeMask, 32> make_layout(std::initializer_list<const char*> names) {
  std::array<BladeMask, 32> out{};
  std::size_t i = 0;
  for (const char* n : names) out[i++] = mask_of(n);
  return out;
}

Matrix swap_halves() {
  Matrix s(6, 6);
  for (std::size_t i = 0; i < 6; ++i) s(i, (i + 3) % 6) = 1;
  return s;
}

// 2^-floor(k/2) for grade k.
Scalar table_scale(BladeMask m) { return Scalar::fraction(1, 1L << (grade_of(m) / 2)); }

Column plucker_column(std::span<const Scalar> p, std::span<const Scalar> q) {
  Column out(6);
  for (std::size_t k = 0; k < 6; ++k) {
    const auto [i, j] = pairs[k];
    out[k] = p[i] * q[j] - p[j] * q[i];
  }
  return out;
}

Matrix skew_from(const std::array<Scalar, 6>& c) {
  // c = (m01, m02, m03, m12, m13, m23)
  Matrix m(4, 4);
  const std::array<std::pair<int, int>, 6> idx{{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
  for (std::size_t k = 0; k < 6; ++k) {
    m(idx[k].first, idx[k].second) = c[k];
    m(idx[k].second, idx[k].first) = -c[k];
  }
  return m;
}

// Common kernel of stacked 4x4 matrices.
std::vector<Column> common_kernel(std::span<const Matrix> ms) {
  Matrix stacked(4 * ms.size(), 4);
  for (std::size_t k = 0; k < ms.size(); ++k)
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = 0; c < 4; ++c) stacked(4 * k + r, c) = ms[k](r, c);
  return nullspace(stacked);
}

Matrix gram(std::span<const Multivector> basis) {
  Matrix g(basis.size(), basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) g(i, j) = bilinear(basis[i], basis[j]);
  return g;
}

std::string column_str(const Column& c) {
  std::string s = "(";
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? ", " : "") + c[i].str();
  return s + ")";
}

std::string line_str(const PluckerLine& l) {
  return column_str(Column(l.coords.begin(), l.coords.end()));
}

// Real null directions of the binary form on span{x, y}.
struct PairSection {
  int kind;  // -1 complex pair, 0 one line, 1 two real lines, 2 all lines
  std::vector<PluckerLine> lines;
};

PairSection section_of_span(const Multivector& x, const Multivector& y) {
  const Scalar qx = quadratic(x), qy = quadratic(y), bxy = bilinear(x, y);
  PairSection out;
  if (qx.is_zero() && qy.is_zero() && bxy.is_zero()) {
    out.kind = 2;
    return out;
  }
  const Scalar d = bxy * bxy - qx * qy;
  const int sign = d.sign();
  if (sign < 0) {
    out.kind = -1;
    return out;
  }
  if (sign == 0) {
    out.kind = 0;
    out.lines.push_back(PluckerLine::from_vector(qx.is_zero() ? x : -bxy * x + qx * y));
    return out;
  }
  out.kind = 1;
  if (qx.is_zero()) {
    out.lines.push_back(PluckerLine::from_vector(x));
    out.lines.push_back(PluckerLine::from_vector(-qy * x + Scalar(2) * bxy * y));
  } else if (const auto root = rational_sqrt(d.real())) {
    out.lines.push_back(PluckerLine::from_vector((-bxy + Scalar(*root)) * x + qx * y));
    out.lines.push_back(PluckerLine::from_vector((-bxy - Scalar(*root)) * x + qx * y));
  }
  return out;
}

ManifoldClass classify_two(const std::vector<Multivector>& u) {
  const PairSection s = section_of_span(u[0], u[1]);
  ManifoldClass out{ManifoldTag::line_pair, "", s.lines, std::nullopt};
  switch (s.kind) {
    case 2: {
      out.tag = ManifoldTag::pencil;
      const std::array<Matrix, 2> pts{point_incidence_matrix(PluckerLine::from_vector(u[0])),
                                      point_incidence_matrix(PluckerLine::from_vector(u[1]))};
      const auto p = common_kernel(pts);
      if (!p.empty()) out.incidence = p.front();
      out.witness = "pencil of lines" + (p.empty() ? std::string() : " through point " + column_str(p.front()));
      break;
    }
    case 0:
      out.tag = ManifoldTag::single_line;
      out.witness = "tangent section: single line " + line_str(s.lines.front());
      break;
    case 1:
      out.witness = s.lines.empty() ? "two real lines (irrational Plucker coordinates)"
                                    : "two real lines " + line_str(s.lines[0]) + " and " + line_str(s.lines[1]);
      break;
    default:
      out.witness = "two complex conjugate lines";
  }
  return out;
}

ManifoldClass classify_three(const std::vector<Multivector>& u) {
  const Matrix g = gram(u);
  const std::size_t r = rank(g);
  ManifoldClass out{ManifoldTag::empty_or_degenerate, "", {}, std::nullopt};
  if (r == 0) {
    std::vector<Matrix> pts, pls;
    for (const auto& v : u) {
      const auto l = PluckerLine::from_vector(v);
      pts.push_back(point_incidence_matrix(l));
      pls.push_back(plane_incidence_matrix(l));
    }
    if (const auto p = common_kernel(pts); !p.empty()) {
      out.tag = ManifoldTag::bundle;
      out.incidence = p.front();
      out.witness = "bundle of lines through point " + column_str(p.front());
    } else {
      const auto e = common_kernel(pls);
      out.tag = ManifoldTag::field;
      if (!e.empty()) out.incidence = e.front();
      out.witness = "field of lines in plane " + (e.empty() ? std::string("?") : column_str(e.front()));
    }
    return out;
  }
  const Signature s = inertia(g);
  if (r == 3) {
    if (s.p > 0 && s.q > 0) {
      out.tag = ManifoldTag::regulus;
      out.witness = "regulus (non-degenerate conic section)";
    } else {
      out.witness = "empty: definite section, no real lines";
    }
  } else if (r == 2) {
    if (s.p > 0 && s.q > 0) {
      out.witness = "two pencils sharing a line";
    } else {
      out.tag = ManifoldTag::single_line;
      out.witness = "definite cone: single line";
    }
  } else {
    out.tag = ManifoldTag::pencil;
    out.witness = "pencil of lines (double-line section)";
  }
  return out;
}

ManifoldClass classify_four(const Blade& b) {
  const auto w = ipns(b);
  ManifoldClass out{ManifoldTag::linear_congruence, "", {}, std::nullopt};
  if (w.size() != 2) {
    out.witness = "linear congruence";
    return out;
  }
  const PairSection s = section_of_span(w[0], w[1]);
  out.lines = s.lines;
  switch (s.kind) {
    case 2: out.witness = "degenerate linear congruence (isotropic polar)"; break;
    case 1: out.witness = "hyperbolic linear congruence (two real axes)"; break;
    case 0: out.witness = "parabolic linear congruence (one axis)"; break;
    default: out.witness = "elliptic linear congruence (complex axes)";
  }
  return out;
}

ManifoldClass classify_five(const Blade& b) {
  const auto w = ipns(b);
  ManifoldClass out{ManifoldTag::linear_complex, "", {}, std::nullopt};
  if (w.size() == 1 && quadratic(w[0]).is_zero()) {
    // The polar of a null vector: all lines meeting the axis.
    out.lines.push_back(PluckerLine::from_vector(w[0]));
    out.witness = "special linear complex: lines meeting axis " + line_str(out.lines.front());
  } else {
    out.witness = "regular linear complex (null polarity)";
  }
  return out;
}

Matrix compound(const Matrix& t) {
  std::vector<Column> cols;
  for (const auto& [a, b] : pairs) {
    const Column ca = t.column(a), cb = t.column(b);
    cols.push_back(plucker_column(ca, cb));
  }
  return Matrix::from_columns(cols, 6);
}

// x -> x - 2 b(x,a)/q(a) a.
Matrix reflection(const Column& a) {
  const Matrix& q = quadric_form();
  const Column qa = mat_vec(q, a);
  Scalar qaa = 0;
  for (std::size_t i = 0; i < 6; ++i) qaa += a[i] * qa[i];
  const Scalar f = Scalar(-2) / qaa;
  Matrix r = Matrix::identity(6);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) r(i, j) += f * a[i] * qa[j];
  return r;
}

Scalar q_of(const Column& a) {
  const Column qa = mat_vec(quadric_form(), a);
  Scalar s = 0;
  for (std::size_t i = 0; i < 6; ++i) s += a[i] * qa[i];
  return s;
}

std::vector<Column> probe_points() {
  std::vector<Column> out;
  for (std::size_t i = 0; i < 6; ++i) {
    Column x(6);
    x[i] = 1;
    out.push_back(x);
  }
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = i + 1; j < 6; ++j) {
      Column x(6);
      x[i] = 1;
      x[j] = 1;
      out.push_back(x);
    }
  return out;
}

// Non-null a = sigma x - x for some probe x.
std::optional<Column> reflection_vector(const Matrix& sigma) {
  for (const auto& x : probe_points()) {
    Column a = mat_vec(sigma, x);
    for (std::size_t i = 0; i < 6; ++i) a[i] -= x[i];
    if (!q_of(a).is_zero()) return a;
  }
  return std::nullopt;
}

// Versor g of the given parity with alpha(g) x = sigma(x) g for all vectors
// x, i.e. whose twisted adjoint action is sigma. Linear in g.
Multivector twisted_adjoint_preimage(const Matrix& sigma, Parity parity) {
  const auto& lay = layout(parity);
  const AlgebraPtr& alg = algebra();
  const std::size_t blades = alg->blade_count();
  Matrix system(6 * blades, 32);
  std::vector<Multivector> gens;
  for (std::size_t i = 0; i < 6; ++i) gens.push_back(Multivector::blade(alg, BladeMask{1} << i));
  for (std::size_t k = 0; k < 32; ++k) {
    const Multivector b = Multivector::blade(alg, lay[k]);
    const Multivector ab = main_involution(b);
    for (std::size_t i = 0; i < 6; ++i) {
      Multivector image(alg);
      for (std::size_t j = 0; j < 6; ++j)
        if (!sigma(j, i).is_zero()) image += sigma(j, i) * gens[j];
      const Multivector eq = ab * gens[i] - image * b;
      for (const auto& [m, c] : eq.terms()) system(i * blades + m, k) = c;
    }
  }
  const auto sol = nullspace(system);
  if (sol.empty()) throw Error("no versor realizes the orthogonal map");
  Multivector::Terms t;
  for (std::size_t k = 0; k < 32; ++k)
    if (!sol.front()[k].is_zero()) t.emplace(lay[k], sol.front()[k]);
  return Multivector(alg, std::move(t));
}

// Cartan-Dieudonne with left reflections while im(sigma - 1) is not totally
// isotropic; an isotropic remainder is lifted by the linear solve above.
Versor lift_orthogonal(Matrix sigma) {
  const Matrix id = Matrix::identity(6);
  std::vector<Multivector> left;
  while (!(sigma == id) && left.size() < 6) {
    auto a = reflection_vector(sigma);
    if (!a) break;
    sigma = reflection(*a) * sigma;
    left.push_back(Multivector::vector(algebra(), *a));
  }
  if (sigma == id) return Versor::from_vectors(algebra(), left);
  const Parity rest = determinant(sigma) == Scalar(1) ? Parity::even : Parity::odd;
  return Versor(product_of(algebra(), left) * twisted_adjoint_preimage(sigma, rest));
}

}  // namespace

const AlgebraPtr& algebra() {
  static const AlgebraPtr alg = [] {
    Matrix form(6, 6);
    for (std::size_t i = 0; i < 3; ++i) form(i, i + 3) = form(i + 3, i) = Scalar::fraction(1, 2);
    return Algebra::create(form);
  }();
  return alg;
}

const Matrix& quadric_form() { return algebra()->form(); }

Multivector PluckerLine::to_vector() const { return Multivector::vector(algebra(), coords); }

PluckerLine PluckerLine::from_vector(const Multivector& v) {
  const auto c = v.vector_coords();
  if (c.size() != 6) throw DimensionMismatch("Plucker lines have six coordinates");
  PluckerLine l;
  std::copy(c.begin(), c.end(), l.coords.begin());
  return l;
}

PluckerLine plucker_from_points(std::span<const Scalar> p, std::span<const Scalar> q) {
  if (p.size() != 4 || q.size() != 4) throw DimensionMismatch("points of P3 have four coordinates");
  const Column c = plucker_column(p, q);
  if (!first_nonzero(c)) throw DependentPoints("points are linearly dependent");
  PluckerLine l;
  std::copy(c.begin(), c.end(), l.coords.begin());
  return l;
}

PluckerLine plucker_from_planes(std::span<const Scalar> u, std::span<const Scalar> v) {
  if (u.size() != 4 || v.size() != 4) throw DimensionMismatch("planes of P3 have four coordinates");
  const Column c = plucker_column(u, v);
  if (!first_nonzero(c)) throw DependentPoints("planes are linearly dependent");
  // Axis coordinates are the ray coordinates with the halves swapped.
  PluckerLine l;
  for (std::size_t i = 0; i < 6; ++i) l.coords[i] = c[(i + 3) % 6];
  return l;
}

bool on_quadric(const PluckerLine& l) {
  return (l.coords[0] * l.coords[3] + l.coords[1] * l.coords[4] + l.coords[2] * l.coords[5]).is_zero();
}

Matrix plane_incidence_matrix(const PluckerLine& l) {
  const auto& c = l.coords;
  // L = p q^T - q p^T has entries l_ij; L u = 0 for planes u through the line.
  return skew_from({c[0], c[1], c[2], c[5], -c[4], c[3]});
}

Matrix point_incidence_matrix(const PluckerLine& l) {
  const auto& c = l.coords;
  // Dual matrix with entries (l23, l31, l12, l01, l02, l03) at (01, 02, 03, 23, 31, 12).
  return skew_from({c[3], c[4], c[5], c[2], -c[1], c[0]});
}

std::string to_string(TransformKind k) { return k == TransformKind::collineation ? "collineation" : "correlation"; }
std::string to_string(Action a) { return a == Action::points ? "points" : "planes"; }

TransformKind parse_kind(const std::string& s) {
  if (s == "collineation") return TransformKind::collineation;
  if (s == "correlation") return TransformKind::correlation;
  throw ParseError("unknown transform kind '" + s + "'");
}

Action parse_action(const std::string& s) {
  if (s == "points") return Action::points;
  if (s == "planes") return Action::planes;
  throw ParseError("unknown action '" + s + "'");
}

void ProjTransform4::validate() const {
  if (matrix.rows() != 4 || matrix.cols() != 4) throw DimensionMismatch("projective transforms of P3 are 4x4");
  if (determinant(matrix).is_zero()) throw SingularTransform("transform matrix is singular");
}

std::string to_string(ManifoldTag t) {
  switch (t) {
    case ManifoldTag::single_line: return "single-line";
    case ManifoldTag::line_pair: return "line-pair";
    case ManifoldTag::pencil: return "pencil-of-lines";
    case ManifoldTag::bundle: return "bundle";
    case ManifoldTag::field: return "field";
    case ManifoldTag::regulus: return "regulus";
    case ManifoldTag::linear_congruence: return "linear-congruence";
    case ManifoldTag::linear_complex: return "linear-complex";
    case ManifoldTag::empty_or_degenerate: return "empty/degenerate";
  }
  return "?";
}

ManifoldClass classify_blade(const Blade& b) {
  if (!b.value().algebra()->same_as(*algebra())) throw AlgebraMismatch();
  switch (b.grade()) {
    case 2: return classify_two(opns(b));
    case 3: return classify_three(opns(b));
    case 4: return classify_four(b);
    case 5: return classify_five(b);
    default: throw GradeOutOfRange("line manifolds come from blades of grade 2..5");
  }
}

Sandwich6 vector_sandwich_matrix(const Multivector& a) {
  const auto c = a.vector_coords();
  if (c.size() != 6) throw AlgebraMismatch();
  const Scalar q = c[0] * c[3] + c[1] * c[4] + c[2] * c[5];
  Matrix m(6, 6);
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = 0; j < 6; ++j) m(i, j) = c[i] * c[(j + 3) % 6];
    m(i, i) -= q;
  }
  return {m};
}

const std::array<BladeMask, 32>& layout(Parity parity) {
  static const auto even = make_layout({"", "12", "13", "14", "15", "16", "23", "24", "25", "26", "34",
                                        "35", "36", "45", "46", "56", "1234", "1235", "1236", "1245", "1246",
                                        "1256", "1345", "1346", "1356", "1456", "2345", "2346", "2356", "2456",
                                        "3456", "123456"});
  static const auto odd = make_layout({"1", "2", "3", "4", "5", "6", "123", "124", "125", "126", "134",
                                       "135", "136", "145", "146", "156", "234", "235", "236", "245", "246",
                                       "256", "345", "346", "356", "456", "12345", "12346", "12356", "12456",
                                       "13456", "23456"});
  return parity == Parity::even ? even : odd;
}

TableCoords table_coordinates(const Multivector& g, Parity parity) {
  TableCoords c;
  const auto& lay = layout(parity);
  for (std::size_t i = 0; i < 32; ++i) c[i + 1] = g.coeff(lay[i]) * table_scale(lay[i]);
  return c;
}

Multivector from_table_coordinates(const TableCoords& c, Parity parity) {
  Multivector::Terms t;
  const auto& lay = layout(parity);
  for (std::size_t i = 0; i < 32; ++i)
    if (!c[i + 1].is_zero()) t.emplace(lay[i], c[i + 1] / table_scale(lay[i]));
  return Multivector(algebra(), std::move(t));
}

Matrix collineation_on_points(const TableCoords& g, M23Entry m23) {
  Matrix m(4, 4);
  const Scalar two = 2;
  m(0, 0) = g[1] - g[20] - g[24] - g[32] - g[29] + g[9] + g[4] + g[13];
  m(1, 1) = g[24] - g[9] + g[20] - g[13] - g[32] + g[1] + g[4] - g[29];
  m(2, 2) = g[1] - g[13] - g[32] - g[4] + g[29] + g[9] - g[24] + g[20];
  m(3, 3) = g[24] + g[13] + g[29] + g[1] - g[4] - g[9] - g[20] - g[32];
  m(0, 1) = two * (g[7] + g[17]);
  m(0, 2) = two * (g[18] - g[3]);
  m(0, 3) = two * (g[19] + g[2]);
  m(1, 0) = -two * (g[26] + g[16]);
  m(1, 2) = two * (g[5] + g[25]);
  m(1, 3) = two * (g[6] - g[22]);
  m(2, 0) = two * (g[15] - g[30]);
  m(2, 1) = two * (g[8] + g[28]);
  m(2, 3) = two * (g[21] + (m23 == M23Entry::printed ? two : Scalar(1)) * g[10]);
  m(3, 0) = -two * (g[31] + g[14]);
  m(3, 1) = two * (g[11] - g[27]);
  m(3, 2) = two * (g[23] + g[12]);
  return m;
}

Matrix collineation_on_planes(const TableCoords& g) {
  Matrix m(4, 4);
  const Scalar two = 2;
  m(0, 0) = g[32] - g[20] - g[13] - g[29] - g[9] - g[24] + g[1] - g[4];
  m(1, 1) = g[1] + g[9] + g[20] + g[24] + g[13] - g[29] + g[32] - g[4];
  m(2, 2) = g[20] + g[29] + g[4] + g[13] - g[9] - g[24] + g[1] + g[32];
  m(3, 3) = g[9] + g[24] + g[29] - g[13] + g[1] + g[4] - g[20] + g[32];
  m(0, 1) = two * (g[16] - g[26]);
  m(0, 2) = -two * (g[15] + g[30]);
  m(0, 3) = two * (g[14] - g[31]);
  m(1, 0) = two * (g[17] - g[7]);
  m(1, 2) = two * (g[28] - g[8]);
  m(1, 3) = -two * (g[27] + g[11]);
  m(2, 0) = two * (g[3] + g[18]);
  m(2, 1) = two * (g[25] - g[5]);
  m(2, 3) = two * (g[23] - g[12]);
  m(3, 0) = two * (g[19] - g[2]);
  m(3, 1) = -two * (g[22] + g[6]);
  m(3, 2) = two * (g[21] - g[10]);
  return m;
}

Matrix correlation_on_planes(const TableCoords& h) {
  Matrix m(4, 4);
  const Scalar two = 2;
  m(0, 0) = -two * h[7];
  m(1, 1) = -two * h[16];
  m(2, 2) = two * h[21];
  m(3, 3) = -two * h[23];
  m(0, 1) = h[9] + h[13] - h[29] + h[1];
  m(0, 2) = h[2] - h[8] + h[28] + h[19];
  m(0, 3) = h[3] - h[27] - h[18] - h[11];
  m(1, 0) = h[29] + h[13] + h[9] - h[1];
  m(1, 2) = h[6] - h[22] + h[15] + h[30];
  m(1, 3) = h[31] - h[25] - h[5] - h[14];
  m(2, 0) = h[19] - h[8] - h[2] - h[28];
  m(2, 1) = h[15] - h[30] - h[6] - h[22];
  m(2, 3) = h[4] - h[20] + h[32] + h[24];
  m(3, 0) = h[27] - h[11] - h[18] - h[3];
  m(3, 1) = h[5] - h[31] - h[25] - h[14];
  m(3, 2) = h[24] - h[4] - h[32] - h[20];
  return m;
}

Matrix correlation_on_points(const TableCoords& h) {
  Matrix m(4, 4);
  const Scalar two = 2;
  m(0, 0) = two * h[26];
  m(1, 1) = two * h[17];
  m(2, 2) = -two * h[12];
  m(3, 3) = two * h[10];
  m(0, 1) = h[32] - h[4] - h[20] - h[24];
  m(0, 2) = h[14] - h[31] - h[25] - h[5];
  m(0, 3) = h[30] + h[15] + h[22] - h[6];
  m(1, 0) = h[4] - h[32] - h[24] - h[20];
  m(1, 2) = h[18] - h[27] - h[3] - h[11];
  m(1, 3) = h[2] + h[8] + h[19] - h[28];
  m(2, 0) = h[31] + h[14] - h[25] + h[5];
  m(2, 1) = h[3] - h[11] + h[27] + h[18];
  m(2, 3) = h[9] - h[13] - h[1] - h[29];
  m(3, 0) = h[15] - h[30] + h[6] + h[22];
  m(3, 1) = h[8] - h[2] + h[28] + h[19];
  m(3, 2) = h[1] - h[13] + h[29] + h[9];
  return m;
}

NullPolarity vector_to_null_polarity(const Multivector& a, Action action) {
  if (!a.algebra()->same_as(*algebra())) throw AlgebraMismatch();
  if (a.max_grade() > 1 || !a.coeff(0).is_zero()) throw GradeOutOfRange("null polarities come from vectors");
  const TableCoords h = table_coordinates(a, Parity::odd);
  NullPolarity np;
  np.action = action;
  np.matrix = action == Action::points ? correlation_on_points(h) : correlation_on_planes(h);
  np.singular = determinant(np.matrix).is_zero();
  return np;
}

Multivector null_polarity_to_vector(const NullPolarity& np) {
  const Matrix& m = np.matrix;
  if (m.rows() != 4 || m.cols() != 4) throw DimensionMismatch("null polarities are 4x4");
  if (!m.is_skew_symmetric()) throw NotSkewSymmetric("null polarity matrix is not skew-symmetric");
  if (m.is_zero()) throw SingularTransform("zero matrix is not a polarity");
  std::array<Scalar, 6> h;
  if (np.action == Action::points) {
    h = {-m(2, 3), m(1, 3), -m(1, 2), -m(0, 1), -m(0, 2), -m(0, 3)};
  } else {
    h = {m(0, 1), m(0, 2), m(0, 3), m(2, 3), -m(1, 3), m(1, 2)};
  }
  return Multivector::vector(algebra(), h);
}

ProjTransform4 versor_to_proj(const Versor& g, Action action) {
  if (!g.value().algebra()->same_as(*algebra())) throw AlgebraMismatch();
  const TableCoords c = table_coordinates(g.value(), g.parity());
  ProjTransform4 t;
  t.action = action;
  if (g.parity() == Parity::even) {
    t.kind = TransformKind::collineation;
    t.matrix = action == Action::points ? collineation_on_points(c) : collineation_on_planes(c);
  } else {
    t.kind = TransformKind::correlation;
    t.matrix = action == Action::points ? correlation_on_points(c) : correlation_on_planes(c);
  }
  if (t.matrix.is_zero()) throw NotAVersor("coefficient table gives the zero matrix for " + g.value().str());
  return t;
}

Sandwich6 induced_line_map(const ProjTransform4& t) {
  t.validate();
  static const Matrix s = swap_halves();
  const Matrix c = compound(t.matrix);
  if (t.kind == TransformKind::collineation)
    return {t.action == Action::points ? c : s * c * s};
  return {t.action == Action::points ? s * c : c * s};
}

std::optional<Scalar> similitude_factor(const Matrix& g) {
  if (g.rows() != 6 || g.cols() != 6) throw DimensionMismatch("similitudes of the Klein form are 6x6");
  return proportionality(g.transpose() * quadric_form() * g, quadric_form());
}

Versor proj_to_versor(const ProjTransform4& t, ScalarMode mode) {
  t.validate();
  const Matrix g = induced_line_map(t).matrix;
  const auto lambda = similitude_factor(g);
  if (!lambda || lambda->is_zero()) throw Error("induced map is not a similitude");
  const auto mu = exact_sqrt(*lambda, mode);
  if (!mu) {
    const std::string det = determinant(t.matrix).str();
    if (mode == ScalarMode::rational && lambda->is_real() && lambda->sign() < 0 && rational_sqrt(-lambda->real()))
      throw ComplexRequired("det " + det + " is negative; the versor lives over Q(i)", det);
    throw NotLiftable("det " + det + " is not a square in " +
                          std::string(mode == ScalarMode::rational ? "Q" : "Q(i)"),
                      det);
  }

  std::optional<Versor> best;
  for (const Scalar& m : {*mu, -*mu}) {
    Versor cand = lift_orthogonal(g * m.inverse());
    if (!best || cand.value().max_grade() < best->value().max_grade()) best.emplace(std::move(cand));
  }
  Versor v = *best;
  if (!v.witness()) v = Versor(v.value(), factorize_versor(v));

  const ProjTransform4 back = versor_to_proj(v, t.action);
  if (back.kind != t.kind || !proportionality(back.matrix, t.matrix))
    throw Error("lifted versor does not reproduce the transform");
  return v;
}

}  // namespace nullpol::klein
