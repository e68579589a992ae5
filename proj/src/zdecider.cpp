#include "isr1/zdecider.hpp"

#include <sstream>

#include "isr1/bezout.hpp"
#include "isr1/errors.hpp"

namespace isr1 {

namespace {

[[noreturn]] void fail_verification(const std::string& what, const Witness& w) {
    std::ostringstream msg;
    msg << what << " (matrix " << w.matrix << ", E " << w.E << ", sign " << w.sign << ")";
    throw VerificationFailedError(msg.str());
}

Mat2 zero_second_row(const Int& a, const Int& b) { return {a, b, 0, 0}; }

/// Deterministic X matrices used for the internal re-verification of every
/// witness decide_isr1 hands out.
const std::vector<Mat2>& builtin_x_samples() {
    static const std::vector<Mat2> samples = {
        Mat2::zero(),           Mat2::identity(),        Mat2::unit_entry(1, 1),
        Mat2::unit_entry(1, 2), Mat2::unit_entry(2, 1),  Mat2::unit_entry(2, 2),
        Mat2{2, -3, 5, 7},      Mat2{-9, 4, 11, -6},     Mat2{1, 1, 1, 1},
        Mat2{100, -57, 33, 8},
    };
    return samples;
}

}  // namespace

void Witness::check() const {
    if (!is_idempotent(E)) fail_verification("witness E is not idempotent", *this);
    if (E.is_zero() || E == Mat2::identity()) fail_verification("witness E is trivial", *this);
    if (trace(E) != 1) fail_verification("witness E has trace != 1", *this);
    if (det(E) != 0) fail_verification("witness E has det != 0", *this);
    if (Y != adjugate(E)) fail_verification("witness Y is not adj(E)", *this);
    if (!is_idempotent(Y)) fail_verification("witness Y is not idempotent", *this);
    if (sign != 1 && sign != -1) fail_verification("witness sign not in {+1,-1}", *this);
    if (det(matrix) != 0) fail_verification("certified matrix has det != 0", *this);
    if (trace(matrix * E) != sign) fail_verification("trace(A*E) != sign", *this);
}

Mat2 apply_step(const Mat2& m, const ReductionStep& step) {
    return std::visit(
        [&](const auto& s) -> Mat2 {
            using S = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<S, ConjugateStep>) {
                return conjugate(m, s.t);
            } else if constexpr (std::is_same_v<S, ShiftStep>) {
                return {m.a11, m.a12 - s.q * m.a11, m.a21, m.a22};
            } else if constexpr (std::is_same_v<S, FlipSecondEntryStep>) {
                return conjugate(m, Mat2::diag(1, -1));
            } else {
                static_assert(std::is_same_v<S, NegateStep>);
                return -m;
            }
        },
        step);
}

std::string to_string(DecisionStatus s) {
    switch (s) {
        case DecisionStatus::Unit: return "unit";
        case DecisionStatus::Isr1: return "isr1";
        case DecisionStatus::NotSr1: return "not_sr1";
        case DecisionStatus::NotIsr1: return "not_isr1";
    }
    return "unknown";
}

std::string to_string(NotIsr1Reason r) {
    switch (r) {
        case NotIsr1Reason::ContentNotOne: return "content_not_one";
        case NotIsr1Reason::CleanCriterionFails: return "clean_criterion_fails";
    }
    return "unknown";
}

EuclideanResult euclidean_criterion(const Int& a_in, const Int& b_in) {
    if (a_in < 1 || b_in < 0) {
        std::ostringstream msg;
        msg << "euclidean_criterion needs a >= 1, b >= 0, got (" << a_in << ", " << b_in << ")";
        throw std::invalid_argument(msg.str());
    }
    if (gcd_int(a_in, b_in) != 1) {
        std::ostringstream msg;
        msg << "euclidean_criterion: gcd(" << a_in << ", " << b_in << ") != 1";
        throw NotCoprimeError(msg.str());
    }
    EuclideanResult r;
    const Int& a = a_in;
    Int b = b_in;
    while (b >= 1 && a < 2 * b) {
        if (a <= b) {
            const Int q = b / a;
            r.trace.push_back(ShiftStep{q});
            b -= q * a;
        } else {
            // b < a < 2b: shift by one, then flip the sign back.
            r.trace.push_back(ShiftStep{1});
            r.trace.push_back(FlipSecondEntryStep{});
            b = a - b;
        }
    }
    r.terminal_a = a;
    r.terminal_b = b;
    if (b == 0) {
        r.accepted = (a == 1);
    } else {
        const Int m = a % b;
        r.accepted = (m == 1 || m == b - 1);
    }
    return r;
}

Witness construct_witness_terminal(const Int& a, const Int& b, int sign) {
    if (b < 1 || (sign != 1 && sign != -1) || (a - sign) % b != 0) {
        std::ostringstream msg;
        msg << "terminal witness needs b >= 1 and a ≡ sign (mod b), got a = " << a
            << ", b = " << b << ", sign = " << sign;
        throw CriterionFailsError(msg.str());
    }
    const Int z = (sign - a) / b;
    Witness w;
    w.matrix = zero_second_row(a, b);
    w.E = Mat2{1, 0, z, 0};
    w.Y = adjugate(w.E);
    w.sign = sign;
    w.check();
    return w;
}

Witness construct_witness_from_solution(const Int& a, const Int& b,
                                        const Int& x, const Int& z) {
    if (a * x + b * z != 1) {
        std::ostringstream msg;
        msg << "(" << x << ", " << z << ") does not solve " << a << "x + " << b << "z = 1";
        throw std::invalid_argument(msg.str());
    }
    Witness w;
    w.matrix = zero_second_row(a, b);
    if (z != 0 && (x - 1) % z == 0) {
        const Int k = (x - 1) / z;
        w.E = Mat2{x, -k * x, z, -k * z};
        w.sign = +1;
    } else if (z != 0 && (x + 1) % z == 0) {
        const Int k = (x + 1) / z;
        w.E = Mat2{-x, k * x, -z, k * z};
        w.sign = -1;
    } else {
        std::ostringstream msg;
        msg << "z = " << z << " divides neither x-1 nor x+1 for x = " << x;
        throw DivisibilityFailsError(msg.str());
    }
    w.Y = adjugate(w.E);
    w.check();
    return w;
}

Witness shift_witness(const Witness& w, const Int& q) {
    const Int& x = w.E.a11;
    const Int& y = w.E.a12;
    const Int& z = w.E.a21;
    Witness out;
    out.matrix = zero_second_row(w.matrix.a11, w.matrix.a12 - q * w.matrix.a11);
    const Int xs = x + q * z;
    out.E = Mat2{xs, y + q * (1 - 2 * x) - q * q * z, z, 1 - xs};
    out.Y = adjugate(out.E);
    out.sign = w.sign;
    out.check();
    return out;
}

Witness transport_witness(Witness w, std::span<const ReductionStep> steps) {
    for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
        std::visit(
            [&](const auto& s) {
                using S = std::decay_t<decltype(s)>;
                if constexpr (std::is_same_v<S, ConjugateStep>) {
                    // Inverse of M -> T^-1 M T.
                    const Mat2 tinv = unimodular_inverse(s.t);
                    w.matrix = s.t * w.matrix * tinv;
                    w.E = s.t * w.E * tinv;
                    w.Y = adjugate(w.E);
                } else if constexpr (std::is_same_v<S, ShiftStep>) {
                    w = shift_witness(w, -s.q);
                } else if constexpr (std::is_same_v<S, FlipSecondEntryStep>) {
                    const Mat2 d = Mat2::diag(1, -1);
                    w.matrix = d * w.matrix * d;
                    w.E = d * w.E * d;
                    w.Y = adjugate(w.E);
                } else {
                    static_assert(std::is_same_v<S, NegateStep>);
                    w.matrix = -w.matrix;
                    w.sign = -w.sign;
                }
            },
            *it);
    }
    w.check();
    return w;
}

Decision decide_isr1(const Mat2& a) {
    Decision d;
    d.input = a;
    d.det_value = det(a);
    d.content_value = content(a);

    if (d.det_value == 1 || d.det_value == -1) {
        d.status = DecisionStatus::Unit;
        d.trivial_unitizer = Mat2::zero();  // a + 0*(xa-1) is already a unit
        return d;
    }
    if (d.det_value != 0) {
        d.status = DecisionStatus::NotSr1;
        return d;
    }
    if (a.is_zero()) {
        d.status = DecisionStatus::Isr1;
        d.trivial_unitizer = Mat2::identity();  // 0 + I*(X*0 - I) = -I
        return d;
    }
    if (d.content_value != 1) {
        d.status = DecisionStatus::NotIsr1;
        d.reason = NotIsr1Reason::ContentNotOne;
        return d;
    }

    // Reduce to [[p, q],[0,0]] with p = trace(a), then normalize signs.
    const Rank1Factorization f = rank1_factor(a);
    const Mat2 u = unimodular_from_primitive(f.column);
    const Mat2 uinv = unimodular_inverse(u);

    std::vector<ReductionStep> steps;
    Mat2 m = a;
    if (u != Mat2::identity()) {
        steps.push_back(ConjugateStep{uinv});
        m = apply_step(m, steps.back());
    }
    if (m.a11 < 0) {
        steps.push_back(NegateStep{});
        m = apply_step(m, steps.back());
    }
    if (m.a12 < 0) {
        steps.push_back(FlipSecondEntryStep{});
        m = apply_step(m, steps.back());
    }
    const Int p = m.a11;
    const Int q = m.a12;

    Witness reduced;
    if (p == 0) {
        // Content 1 forces q = 1; the reduced matrix is E12.
        reduced.matrix = zero_second_row(0, 1);
        reduced.E = Mat2{0, 0, 1, 1};
        reduced.Y = adjugate(reduced.E);
        reduced.sign = +1;
        reduced.check();
    } else {
        EuclideanResult ec = euclidean_criterion(p, q);
        if (!ec.accepted) {
            d.status = DecisionStatus::NotIsr1;
            d.reason = NotIsr1Reason::CleanCriterionFails;
            d.terminal_pair = std::make_pair(ec.terminal_a, ec.terminal_b);
            return d;
        }
        for (auto& s : ec.trace) steps.push_back(std::move(s));
        if (ec.terminal_b == 0) {
            // Terminal (1, 0): the matrix is E11 and certifies itself.
            reduced.matrix = zero_second_row(1, 0);
            reduced.E = Mat2::unit_entry(1, 1);
            reduced.Y = adjugate(reduced.E);
            reduced.sign = +1;
            reduced.check();
        } else {
            const int sign = (ec.terminal_a - 1) % ec.terminal_b == 0 ? +1 : -1;
            reduced = construct_witness_terminal(ec.terminal_a, ec.terminal_b, sign);
        }
    }

    Witness w = transport_witness(std::move(reduced), steps);
    if (w.matrix != a) fail_verification("transported witness certifies the wrong matrix", w);
    if (VerifyResult v = verify_witness(a, w, builtin_x_samples()); !v) {
        throw VerificationFailedError("witness re-verification failed: " + v.failure);
    }
    d.status = DecisionStatus::Isr1;
    d.witness = std::move(w);
    return d;
}

std::pair<Mat2, Mat2> clean_decompose(const Mat2& a) {
    const Decision d = decide_isr1(a);
    if (d.status != DecisionStatus::Isr1 || !d.witness.has_value()) {
        throw NotApplicableError("clean_decompose needs an isr1 matrix with a nontrivial witness");
    }
    const Mat2& y = d.witness->Y;
    const Mat2 unit = a - y;
    if (det(unit) != -d.witness->sign) {
        throw VerificationFailedError("clean decomposition unit has unexpected determinant");
    }
    return {y, unit};
}

VerifyResult verify_witness(const Mat2& a, const Witness& w,
                            std::span<const Mat2> x_samples) {
    VerifyResult r;
    auto fail = [&](std::string what) {
        r.ok = false;
        r.failure = std::move(what);
        return r;
    };
    if (det(a) != 0) return fail("det(A) != 0");
    if (!is_idempotent(w.E)) return fail("E not idempotent");
    if (w.E.is_zero() || w.E == Mat2::identity()) return fail("E trivial");
    if (trace(w.E) != 1) return fail("trace(E) != 1");
    if (det(w.E) != 0) return fail("det(E) != 0");
    if (w.Y != adjugate(w.E)) return fail("Y != adj(E)");
    if (!is_idempotent(w.Y)) return fail("Y not idempotent");
    if (w.sign != 1 && w.sign != -1) return fail("sign not in {+1,-1}");
    if (trace(a * w.E) != w.sign) return fail("trace(A*E) != sign");
    const Mat2 id = Mat2::identity();
    for (const Mat2& x : x_samples) {
        if (det(a + w.Y * (x * a - id)) != -w.sign) {
            r.ok = false;
            r.failure = "det(A + Y(XA - I)) != -sign";
            r.failing_x = x;
            return r;
        }
    }
    return r;
}

}  // namespace isr1
