#pragma once

#include <memory>
#include <string>
#include <vector>

#include "pjl/qpoly.hpp"

namespace pjl {

class NumberField;
using FieldPtr = std::shared_ptr<const NumberField>;

/// One adjunction in the history of a field: a generator and its minimal
/// polynomial over the previous level, printed with the previous primitive
/// element as `prev`.
struct TowerStep {
  std::string generator;
  std::string minpoly;
};

/// Q(w) for a monic irreducible minimal polynomial of w. The rationals use
/// the polynomial "x" (w = 0). Fields are immutable once built.
class NumberField {
 public:
  static FieldPtr rationals();
  static FieldPtr make(QPoly minpoly, std::vector<TowerStep> steps);

  const QPoly& minpoly() const { return minpoly_; }
  int degree() const { return static_cast<int>(minpoly_.degree()); }
  bool is_rationals() const { return degree() == 1; }
  const std::vector<TowerStep>& steps() const { return steps_; }

  /// Product of two reduced representatives, reduced.
  QPoly multiply(const QPoly& a, const QPoly& b) const;

 private:
  NumberField(QPoly minpoly, std::vector<TowerStep> steps);
  QPoly minpoly_;
  std::vector<TowerStep> steps_;
  // minpoly = w^n + sum (tail_[i] / tail_den_) w^i
  std::vector<Integer> tail_;
  Integer tail_den_ = 1;
};

/// Element of a number field, stored as a polynomial in the primitive
/// element reduced modulo its minimal polynomial.
class FieldElement {
 public:
  FieldElement() : FieldElement(NumberField::rationals(), QPoly()) {}
  FieldElement(FieldPtr field, const QPoly& rep);
  FieldElement(FieldPtr field, const Rational& c);
  static FieldElement generator(const FieldPtr& field);

  const FieldPtr& field() const { return field_; }
  const QPoly& rep() const { return rep_; }
  bool is_zero() const { return rep_.is_zero(); }
  bool is_rational() const { return rep_.degree() <= 0; }
  /// Requires is_rational().
  Rational rational() const;

  FieldElement operator-() const;
  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  FieldElement& operator+=(const FieldElement& b) { return *this = *this + b; }
  FieldElement& operator-=(const FieldElement& b) { return *this = *this - b; }
  FieldElement& operator*=(const FieldElement& b) { return *this = *this * b; }
  friend bool operator==(const FieldElement& a, const FieldElement& b);
  FieldElement inverse() const;
  FieldElement pow(unsigned e) const;

  std::string to_string(const std::string& gen = "w") const { return rep_.to_string(gen); }

 private:
  FieldElement(FieldPtr field, QPoly rep, bool reduced);
  static const FieldPtr& common(const FieldElement& a, const FieldElement& b);
  FieldPtr field_;
  QPoly rep_;
};

/// Field homomorphism determined by the image of the source generator.
struct Embedding {
  FieldPtr from;
  FieldPtr to;
  FieldElement generator_image;

  FieldElement apply(const FieldElement& a) const;
  static Embedding identity(const FieldPtr& k);
};

}  // namespace pjl
