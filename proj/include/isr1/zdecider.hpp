#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "isr1/mat2.hpp"

namespace isr1 {

/// Idempotent certificate for a det-0 matrix A: a nontrivial idempotent E
/// with trace(A*E) = sign in {+1,-1}. The unitizer is Y = adjugate(E);
/// A + Y*(X*A - I) has determinant -sign for every integer matrix X.
struct Witness {
    Mat2 matrix;  // the matrix this witness certifies
    Mat2 E;       // nontrivial idempotent, trace 1, det 0
    Mat2 Y;       // adjugate(E), itself idempotent
    int sign{+1};

    /// Re-checks every structural invariant against `matrix`.
    /// Throws VerificationFailedError with the failing check named.
    void check() const;
};

/// One invertible move of the reduction to the zero-second-row normal form.
/// Recorded while reducing; witnesses travel back through the inverses.
struct ConjugateStep {
    Mat2 t;  // unimodular; maps M to T^-1 * M * T
};
struct ShiftStep {
    Int q;  // maps [[a,b],[0,0]] to [[a, b - q*a],[0,0]]
};
struct FlipSecondEntryStep {};  // conjugation by diag(1,-1): b -> -b
struct NegateStep {};           // M -> -M (trace is conjugation-invariant,
                                // so the sign of a cannot be flipped by
                                // similarity alone)

using ReductionStep =
    std::variant<ConjugateStep, ShiftStep, FlipSecondEntryStep, NegateStep>;

/// Applies one recorded step forward (reduction direction).
Mat2 apply_step(const Mat2& m, const ReductionStep& step);

enum class DecisionStatus { Unit, Isr1, NotSr1, NotIsr1 };
enum class NotIsr1Reason { ContentNotOne, CleanCriterionFails };

std::string to_string(DecisionStatus s);
std::string to_string(NotIsr1Reason r);

/// Outcome of decide_isr1, with a re-checkable certificate in every branch:
/// an explicit Witness for nontrivial isr1 matrices, a trivial unitizer
/// marker (E = 0 for units, E = I for the zero matrix), or the terminal
/// reduced pair on which the clean criterion provably fails.
struct Decision {
    DecisionStatus status{DecisionStatus::Unit};
    Mat2 input;
    Int det_value{0};
    Int content_value{0};
    std::optional<Witness> witness;          // Isr1 with nontrivial certificate
    std::optional<Mat2> trivial_unitizer;    // Unit (0) and zero-matrix Isr1 (I)
    std::optional<NotIsr1Reason> reason;     // NotIsr1
    std::optional<std::pair<Int, Int>> terminal_pair;  // CleanCriterionFails
};

/// Euclidean reduction of a coprime pair toward b' = 0 or a' >= 2b', with
/// acceptance a' ≡ ±1 (mod b') at the terminal (b' = 0 accepts only a' = 1).
/// The recorded trace replays the reduction on [[a,b],[0,0]].
struct EuclideanResult {
    bool accepted{false};
    std::vector<ReductionStep> trace;
    Int terminal_a{0};
    Int terminal_b{0};
};

/// Requires a >= 1, b >= 0, gcd(a,b) = 1 (throws NotCoprimeError).
/// Repeatedly: a <= b  ->  b := b mod a (Shift(q), q = floor(b/a));
/// b < a < 2b  ->  b := a - b (Shift(1) then FlipSecondEntry).
/// b strictly decreases, so this terminates.
EuclideanResult euclidean_criterion(const Int& a, const Int& b);

/// Witness at an accepted terminal (a, b) with b >= 1 and a ≡ sign (mod b):
/// E = [[1,0],[z,0]] with z = (sign - a)/b, certifying [[a,b],[0,0]].
/// Throws CriterionFailsError if the congruence fails.
Witness construct_witness_terminal(const Int& a, const Int& b, int sign);

/// Witness from an explicit Bezout solution a*x + b*z = 1 with z != 0 and
/// z | x-1 (E = [[x,-kx],[z,-kz]], sign +1, k = (x-1)/z) or z | x+1
/// (E = [[-x,kx],[-z,kz]], sign -1, k = (x+1)/z), certifying [[a,b],[0,0]].
/// Throws DivisibilityFailsError when neither divisibility holds.
Witness construct_witness_from_solution(const Int& a, const Int& b,
                                        const Int& x, const Int& z);

/// Transports a witness for [[a,b],[0,0]] to one for [[a, b-q*a],[0,0]].
/// The completed entry is y' = y + q*(1-2x) - q^2*z, the form forced by
/// idempotency of the result.
Witness shift_witness(const Witness& w, const Int& q);

/// Applies the inverses of `steps` in reverse order, turning a witness for
/// the reduced matrix into one for the original. The result is re-checked;
/// throws VerificationFailedError if any invariant breaks.
Witness transport_witness(Witness w, std::span<const ReductionStep> steps);

/// Full trichotomy: det in {+-1} -> Unit; |det| >= 2 -> NotSr1; det = 0 ->
/// zero matrix and content != 1 handled directly, everything else reduced
/// to [[a,b],[0,0]] with a >= 0, b >= 0 and decided by the Euclidean
/// criterion, with a transported and re-verified witness on acceptance.
/// Total: never throws on any input.
Decision decide_isr1(const Mat2& a);

/// Clean decomposition A = Ec + U with Ec = Y idempotent and
/// det(U) = -sign in {+-1}. Throws NotApplicableError unless decide_isr1
/// yields Isr1 with a nontrivial witness.
std::pair<Mat2, Mat2> clean_decompose(const Mat2& a);

/// Result of verify_witness; falsy with the first failing check named.
struct VerifyResult {
    bool ok{true};
    std::string failure;
    std::optional<Mat2> failing_x;

    explicit operator bool() const { return ok; }
};

/// Checks all Witness invariants against `a` and, for every sampled X,
/// det(a + Y*(X*a - I)) = -sign exactly.
VerifyResult verify_witness(const Mat2& a, const Witness& w,
                            std::span<const Mat2> x_samples);

}  // namespace isr1
