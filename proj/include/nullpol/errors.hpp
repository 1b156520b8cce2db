#pragma once

#include <stdexcept>
#include <string>

namespace nullpol {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class AlgebraMismatch : public Error {
 public:
  AlgebraMismatch() : Error("operands belong to different algebras") {}
};

class DegenerateForm : public Error {
 public:
  using Error::Error;
};

class GradeOutOfRange : public Error {
 public:
  using Error::Error;
};

/// N(v) = 0, so the versor has no inverse and the descent cannot run.
class NullVersor : public Error {
 public:
  using Error::Error;
};

class NotAVersor : public Error {
 public:
  using Error::Error;
};

class NotABlade : public Error {
 public:
  using Error::Error;
};

class NoNonNullVector : public Error {
 public:
  using Error::Error;
};

class SingularTransform : public Error {
 public:
  using Error::Error;
};

class NotSkewSymmetric : public Error {
 public:
  using Error::Error;
};

class DependentPoints : public Error {
 public:
  using Error::Error;
};

class OffQuadric : public Error {
 public:
  using Error::Error;
};

/// Raised in rational mode when a real operation would need an imaginary
/// intermediate.
class ComplexScalar : public Error {
 public:
  using Error::Error;
};

/// The lift of a real transform exists only over Q(i).
class ComplexRequired : public Error {
 public:
  ComplexRequired(std::string diagnosis, std::string determinant)
      : Error("complex versor required: " + diagnosis),
        diagnosis_(std::move(diagnosis)),
        determinant_(std::move(determinant)) {}

  const std::string& diagnosis() const noexcept { return diagnosis_; }
  const std::string& determinant() const noexcept { return determinant_; }

 private:
  std::string diagnosis_;
  std::string determinant_;
};

/// The lift needs a square root outside the active scalar field, e.g. when
/// det(T) = 2 the versor lives over Q(sqrt 2).
class NotLiftable : public Error {
 public:
  NotLiftable(std::string diagnosis, std::string determinant)
      : Error("no versor over the scalar field: " + diagnosis),
        diagnosis_(std::move(diagnosis)),
        determinant_(std::move(determinant)) {}

  const std::string& diagnosis() const noexcept { return diagnosis_; }
  const std::string& determinant() const noexcept { return determinant_; }

 private:
  std::string diagnosis_;
  std::string determinant_;
};

}  // namespace nullpol
