#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace isr1 {

/// 2x2 matrix over Z/n, entries kept in [0, n). Moduli up to 12 are
/// supported; everything here works by exhaustive enumeration.
struct ModMat {
    int n{2};
    std::array<int, 4> e{0, 0, 0, 0};  // row-major: e11, e12, e21, e22

    ModMat() = default;
    ModMat(int modulus, int m11, int m12, int m21, int m22);

    static ModMat zero(int n) { return ModMat(n, 0, 0, 0, 0); }
    static ModMat identity(int n) { return ModMat(n, 1, 0, 0, 1); }

    /// Lexicographic index in [0, n^4); enumeration order of all matrices.
    long index() const;
    static ModMat from_index(int n, long idx);

    int det() const;
    int trace() const;
    ModMat adjugate() const;
    ModMat scaled(int s) const;

    ModMat operator+(const ModMat& o) const;
    ModMat operator-(const ModMat& o) const;
    ModMat operator*(const ModMat& o) const;
    friend bool operator==(const ModMat&, const ModMat&) = default;

    bool is_unit() const;  // det invertible mod n
    bool is_idempotent() const { return *this * *this == *this; }
};

/// Number of matrices over Z/n, i.e. n^4.
long modmat_count(int n);

/// The two displayed forms of the defining expression; they are not
/// formally interchangeable for idempotent e, so both are first-class.
/// C1: a + e(xa - 1) (the form used in the worked counterexample),
/// C2: a + e(1 - xa) (the substitution form from xa + b = 1).
enum class Convention { C1, C2 };

std::string to_string(Convention c);

/// All E over Z/n with E^2 = E, in enumeration order. 2 <= n <= 12.
std::vector<ModMat> enumerate_idempotents(int n);

/// Quantifier sweep result; falsy carries the first X with no unitizer.
struct SweepResult {
    bool ok{true};
    std::optional<ModMat> failing_x;

    explicit operator bool() const { return ok; }
};

/// For every X there is an idempotent E with A + E(XA - I) a unit (C1),
/// resp. A + E(I - XA) (C2). Early-exits per X on the first working E.
SweepResult is_left_isr1_def(const ModMat& a, Convention conv);

/// Mirror form: A + (AX - I)E (C1), resp. A + (I - AX)E (C2).
SweepResult is_right_isr1_def(const ModMat& a, Convention conv);

/// Stable range one from the definition: the same sweep with the
/// multiplier ranging over all matrices instead of the idempotents.
SweepResult is_sr1_def(const ModMat& a);

/// A = E + U with E idempotent and U a unit.
bool is_clean(const ModMat& a);
/// Clean with E and U commuting.
bool is_strongly_clean(const ModMat& a);

/// det(Y)(det(X)det(A) - Tr(XA) + 1) + det(A(Tr(XY)+1)) - Tr(A adj(Y)),
/// evaluated exactly mod n (result in [0, n)).
int thm1_expression(const ModMat& a, const ModMat& x, const ModMat& y);

/// For every X some Y (resp. some idempotent Y) makes thm1_expression a
/// unit mod n.
SweepResult thm1_sr1_predicate(const ModMat& a);
SweepResult thm1_isr1_predicate(const ModMat& a);

/// One checked structural claim. Informational claims record divergences
/// that the library reports rather than asserts (the Theorem-1 expression
/// is validated extensionally only, and the C1/C2 comparison is empirical);
/// their failure is not an error.
struct ClaimResult {
    std::string id;
    bool holds{true};
    bool informational{false};
    std::string detail;
};

/// Per-matrix results in targeted mode.
struct TargetedRow {
    ModMat matrix;
    bool clean{false};
    bool strongly_clean{false};
    bool left_isr1{false};
    std::optional<ModMat> failing_x;
};

struct OracleCounts {
    long units{0};
    long idempotents{0};
    long clean{0};
    long strongly_clean{0};
    long left_isr1_c1{0};
    long right_isr1_c1{0};
    long left_isr1_c2{0};
    long right_isr1_c2{0};
    long sr1{0};
};

/// Exhaustive classification report. Full mode (n <= 4) classifies every
/// matrix under both conventions and checks the claim list; targeted mode
/// (n <= 12) checks the requested matrices under one convention.
struct OracleReport {
    int n{2};
    std::string mode;  // "full" | "targeted"
    Convention convention{Convention::C1};
    OracleCounts counts;
    std::vector<ClaimResult> claims;
    std::vector<TargetedRow> rows;

    /// True iff some non-informational claim failed.
    bool hard_violation() const;
};

OracleReport oracle_full(int n);
OracleReport oracle_targeted(int n, std::span<const ModMat> targets, Convention conv);

}  // namespace isr1
