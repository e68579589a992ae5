#include "isr1/mat2.hpp"

#include <sstream>

#include "isr1/bezout.hpp"
#include "isr1/errors.hpp"

namespace isr1 {

Mat2 Mat2::unit_entry(int i, int j) {
    Mat2 m;
    (i == 1 ? (j == 1 ? m.a11 : m.a12) : (j == 1 ? m.a21 : m.a22)) = 1;
    return m;
}

std::ostream& operator<<(std::ostream& os, const Mat2& m) {
    return os << "[[" << m.a11 << ", " << m.a12 << "], [" << m.a21 << ", " << m.a22 << "]]";
}

Int det(const Mat2& m) { return m.a11 * m.a22 - m.a12 * m.a21; }

Int trace(const Mat2& m) { return m.a11 + m.a22; }

Mat2 adjugate(const Mat2& m) { return {m.a22, -m.a12, -m.a21, m.a11}; }

Int content(const Mat2& m) {
    return gcd_int(gcd_int(m.a11, m.a12), gcd_int(m.a21, m.a22));
}

bool is_idempotent(const Mat2& m) { return m * m == m; }

bool is_nilpotent(const Mat2& m) { return trace(m) == 0 && det(m) == 0; }

bool is_unimodular(const Mat2& m) {
    const Int d = det(m);
    return d == 1 || d == -1;
}

Mat2 unimodular_inverse(const Mat2& t) {
    const Int d = det(t);
    if (d != 1 && d != -1) {
        std::ostringstream msg;
        msg << "matrix is not unimodular: det = " << d;
        throw NotUnimodularError(msg.str());
    }
    // det = +-1, so 1/det = det and the inverse is det * adj.
    return adjugate(t) * d;
}

Mat2 conjugate(const Mat2& m, const Mat2& t) {
    return unimodular_inverse(t) * m * t;
}

Mat2 unimodular_from_primitive(const Vec2& u) {
    if (gcd_int(u.a, u.b) != 1) {
        std::ostringstream msg;
        msg << "vector (" << u.a << ", " << u.b << ") is not primitive";
        throw NotPrimitiveError(msg.str());
    }
    const BezoutFamily f = ext_gcd(u.a, u.b);
    // f.x0 * u.a + f.z0 * u.b = 1, so det = 1 and U * u = (1, 0)^T.
    return {f.x0, f.z0, -u.b, u.a};
}

Rank1Factorization rank1_factor(const Mat2& m) {
    if (m.is_zero() || det(m) != 0) {
        throw NotRankOneError("rank1_factor needs a nonzero matrix with det = 0");
    }
    const Int c = content(m);
    const Mat2 b{m.a11 / c, m.a12 / c, m.a21 / c, m.a22 / c};

    // Primitive row direction from the first nonzero row of b.
    Vec2 row;
    if (b.a11 != 0 || b.a12 != 0) {
        const Int g = gcd_int(b.a11, b.a12);
        row = {b.a11 / g, b.a12 / g};
    } else {
        const Int g = gcd_int(b.a21, b.a22);
        row = {b.a21 / g, b.a22 / g};
    }
    if ((row.a != 0 ? row.a : row.b) < 0) {
        row = {-row.a, -row.b};
    }

    // Each row of b is an integer multiple of the primitive direction:
    // with s*row.a + t*row.b = 1 the multiplier is s*r1 + t*r2.
    const BezoutFamily f = ext_gcd(row.a, row.b);
    Vec2 col{f.x0 * b.a11 + f.z0 * b.a12, f.x0 * b.a21 + f.z0 * b.a22};
    return {c, col, row};
}

NilpotentClass nilpotent_class(const Mat2& t) {
    if (!is_nilpotent(t)) {
        throw NotNilpotentError("nilpotent_class needs trace = 0 and det = 0");
    }
    if (t.is_zero()) {
        return {0, std::nullopt};
    }
    const Rank1Factorization f = rank1_factor(t);
    const Mat2 u = unimodular_from_primitive(f.column);
    const Mat2 cert = unimodular_inverse(u);
    Mat2 reduced = conjugate(t, cert);  // = U t U^-1 = +-c E12
    if (reduced.a12 == f.c) {
        return {f.c, cert};
    }
    // Fix the sign by a further diag(1,-1) conjugation.
    const Mat2 flip = Mat2::diag(1, -1);
    Mat2 cert2 = cert * flip;
    if (conjugate(t, cert2).a12 != f.c) {
        throw VerificationFailedError("nilpotent similarity certificate check failed");
    }
    return {f.c, cert2};
}

}  // namespace isr1
