#pragma once

#include <optional>
#include <ostream>

#include "isr1/int.hpp"

namespace isr1 {

/// Integer column/row pair.
struct Vec2 {
    Int a{0};
    Int b{0};

    friend bool operator==(const Vec2&, const Vec2&) = default;
};

/// 2x2 matrix with exact integer entries, row-major.
struct Mat2 {
    Int a11{0}, a12{0}, a21{0}, a22{0};

    Mat2() = default;
    Mat2(Int m11, Int m12, Int m21, Int m22)
        : a11(std::move(m11)), a12(std::move(m12)), a21(std::move(m21)), a22(std::move(m22)) {}

    static Mat2 zero() { return {0, 0, 0, 0}; }
    static Mat2 identity() { return {1, 0, 0, 1}; }
    /// E_ij: single 1 entry at (i,j), 1-based indices.
    static Mat2 unit_entry(int i, int j);
    static Mat2 diag(Int d1, Int d2) { return {std::move(d1), 0, 0, std::move(d2)}; }

    bool is_zero() const { return a11 == 0 && a12 == 0 && a21 == 0 && a22 == 0; }

    friend bool operator==(const Mat2&, const Mat2&) = default;

    Mat2 operator+(const Mat2& o) const { return {a11 + o.a11, a12 + o.a12, a21 + o.a21, a22 + o.a22}; }
    Mat2 operator-(const Mat2& o) const { return {a11 - o.a11, a12 - o.a12, a21 - o.a21, a22 - o.a22}; }
    Mat2 operator-() const { return {-a11, -a12, -a21, -a22}; }
    Mat2 operator*(const Mat2& o) const {
        return {a11 * o.a11 + a12 * o.a21, a11 * o.a12 + a12 * o.a22,
                a21 * o.a11 + a22 * o.a21, a21 * o.a12 + a22 * o.a22};
    }
    Mat2 operator*(const Int& s) const { return {a11 * s, a12 * s, a21 * s, a22 * s}; }

    friend std::ostream& operator<<(std::ostream& os, const Mat2& m);
};

Int det(const Mat2& m);
Int trace(const Mat2& m);

/// adj([[p,q],[r,s]]) = [[s,-q],[-r,p]];  m * adj(m) = det(m) * I.
Mat2 adjugate(const Mat2& m);

/// gcd of the four entries (0 for the zero matrix); content = 1 means the
/// entries are setwise coprime.
Int content(const Mat2& m);

bool is_idempotent(const Mat2& m);
/// m^2 = 0, equivalently trace = 0 and det = 0.
bool is_nilpotent(const Mat2& m);
/// det in {-1, +1}, i.e. invertible over Z.
bool is_unimodular(const Mat2& m);

/// Exact inverse of a unimodular matrix. Throws NotUnimodularError.
Mat2 unimodular_inverse(const Mat2& t);

/// T^-1 * m * T for unimodular T. Throws NotUnimodularError.
Mat2 conjugate(const Mat2& m, const Mat2& t);

/// Unimodular U with U * (u.a, u.b)^T = (1, 0)^T, built from the extended
/// Euclidean identity. Throws NotPrimitiveError unless gcd(u.a, u.b) = 1.
Mat2 unimodular_from_primitive(const Vec2& u);

/// A = c * column * row^T with primitive column and row, c = content(A) > 0,
/// and the first nonzero entry of row positive. Unique under this convention.
struct Rank1Factorization {
    Int c;
    Vec2 column;
    Vec2 row;
};

/// Factor a nonzero det-0 matrix. Throws NotRankOneError otherwise.
Rank1Factorization rank1_factor(const Mat2& m);

/// m = content(t); conjugating by the certificate gives exactly m * E12.
struct NilpotentClass {
    Int multiple;
    /// Unimodular C with conjugate(t, C) = multiple * E12; absent for t = 0.
    std::optional<Mat2> certificate;
};

/// Every nilpotent t is similar to content(t) * E12. Throws NotNilpotentError.
NilpotentClass nilpotent_class(const Mat2& t);

}  // namespace isr1
