#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nullpol/blade.hpp"

// Cl(3,3) model of line space. Generators e1..e6 carry the Plucker
// coordinates (l01, l02, l03, l23, l31, l12); b(e_i, e_{i+3}) = 1/2 so that a
// vector squares to x1 x4 + x2 x5 + x3 x6.
namespace nullpol::klein {

const AlgebraPtr& algebra();
/// The 6x6 Gram matrix of the Klein form.
const Matrix& quadric_form();

struct PluckerLine {
  std::array<Scalar, 6> coords;

  Multivector to_vector() const;
  static PluckerLine from_vector(const Multivector& v);
};

/// Line joining two points. Throws DependentPoints.
PluckerLine plucker_from_points(std::span<const Scalar> p, std::span<const Scalar> q);
/// Line where two planes meet. Throws DependentPoints.
PluckerLine plucker_from_planes(std::span<const Scalar> u, std::span<const Scalar> v);
bool on_quadric(const PluckerLine& l);

/// 4x4 matrix whose kernel holds the points of a line (rank 2 for a line).
Matrix point_incidence_matrix(const PluckerLine& l);
/// 4x4 matrix whose kernel holds the planes through a line.
Matrix plane_incidence_matrix(const PluckerLine& l);

enum class TransformKind { collineation, correlation };
enum class Action { points, planes };

inline Action opposite(Action a) { return a == Action::points ? Action::planes : Action::points; }
std::string to_string(TransformKind k);
std::string to_string(Action a);
TransformKind parse_kind(const std::string& s);
Action parse_action(const std::string& s);

struct ProjTransform4 {
  Matrix matrix;
  TransformKind kind = TransformKind::collineation;
  Action action = Action::points;

  /// Throws DimensionMismatch unless 4x4, SingularTransform if det = 0.
  void validate() const;
};

struct NullPolarity {
  Matrix matrix;
  Action action = Action::points;
  bool singular = false;
};

struct Sandwich6 {
  Matrix matrix;
};

enum class ManifoldTag {
  single_line,
  line_pair,
  pencil,
  bundle,
  field,
  regulus,
  linear_congruence,
  linear_complex,
  empty_or_degenerate,
};
std::string to_string(ManifoldTag t);

struct ManifoldClass {
  ManifoldTag tag;
  /// Human-readable description of the intersection with the quadric.
  std::string witness;
  /// Real lines found exactly (line pairs with a rational discriminant, the
  /// tangent line, the axis of a special complex).
  std::vector<PluckerLine> lines;
  /// Common point of a bundle or common plane of a field.
  std::optional<Column> incidence;
};

/// Intersection of the span of opns(b) with Klein's quadric, grades 2..5.
ManifoldClass classify_blade(const Blade& b);

/// Matrix of x -> alpha(a) x a* = 2 b(x,a) a - b(a,a) x.
Sandwich6 vector_sandwich_matrix(const Multivector& a);

/// Coefficients in the table convention, 1-based (index 0 unused): entry i is
/// the coefficient of the i-th monomial of the even (g1..g32) or odd
/// (h1..h32) layout, rescaled to the doubled form B = [[O,I],[I,O]] in which
/// the coefficient tables are written. Grade k picks up 2^-floor(k/2).
using TableCoords = std::array<Scalar, 33>;
TableCoords table_coordinates(const Multivector& g, Parity parity);
Multivector from_table_coordinates(const TableCoords& c, Parity parity);
/// The monomials of a layout in listing order, as masks.
const std::array<BladeMask, 32>& layout(Parity parity);

/// The collineation-on-points entry m23 as printed reads 2(g21 + 2 g10); the
/// sibling entries suggest 2(g21 + g10). Only the latter reproduces K from g+.
enum class M23Entry { corrected, printed };
#ifdef NULLPOL_M23_PRINTED
inline constexpr M23Entry default_m23 = M23Entry::printed;
#else
inline constexpr M23Entry default_m23 = M23Entry::corrected;
#endif

Matrix collineation_on_points(const TableCoords& g, M23Entry m23 = default_m23);
Matrix collineation_on_planes(const TableCoords& g);
Matrix correlation_on_points(const TableCoords& h);
Matrix correlation_on_planes(const TableCoords& h);

NullPolarity vector_to_null_polarity(const Multivector& a, Action action);
/// Throws NotSkewSymmetric, or SingularTransform for the zero matrix.
Multivector null_polarity_to_vector(const NullPolarity& np);

/// Even versors give collineations, odd ones correlations. Throws NotAVersor
/// when the table yields the zero matrix.
ProjTransform4 versor_to_proj(const Versor& g, Action action);

/// 6x6 map of Plucker coordinates induced by t.
Sandwich6 induced_line_map(const ProjTransform4& t);
/// lambda with G^T Q G = lambda Q, if G is a similitude.
std::optional<Scalar> similitude_factor(const Matrix& g);

/// Versor inducing t up to scale, with a witness of at most six vectors.
/// Throws SingularTransform, ComplexRequired (rational mode, det t < 0 with
/// -det t a square) or NotLiftable (|det t| not a rational square).
Versor proj_to_versor(const ProjTransform4& t, ScalarMode mode = ScalarMode::rational);

}  // namespace nullpol::klein
