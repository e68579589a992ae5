#include "isr1/modring.hpp"

#include <numeric>
#include <sstream>

#include "isr1/errors.hpp"

namespace isr1 {

namespace {

constexpr int kMaxTargetedModulus = 12;
constexpr int kMaxFullModulus = 4;

void require_modulus(int n, int max, const char* what) {
    if (n < 2 || n > max) {
        std::ostringstream msg;
        msg << what << " supports moduli 2.." << max << ", got " << n;
        throw ModulusTooLargeError(msg.str());
    }
}

int mod_reduce(int v, int n) {
    int r = v % n;
    return r < 0 ? r + n : r;
}

std::string mat_text(const ModMat& m) {
    std::ostringstream os;
    os << "[[" << m.e[0] << "," << m.e[1] << "],[" << m.e[2] << "," << m.e[3] << "]]";
    return os.str();
}

}  // namespace

ModMat::ModMat(int modulus, int m11, int m12, int m21, int m22) : n(modulus) {
    e = {mod_reduce(m11, n), mod_reduce(m12, n), mod_reduce(m21, n), mod_reduce(m22, n)};
}

long ModMat::index() const {
    return ((static_cast<long>(e[0]) * n + e[1]) * n + e[2]) * n + e[3];
}

ModMat ModMat::from_index(int n, long idx) {
    ModMat m;
    m.n = n;
    m.e[3] = static_cast<int>(idx % n);
    idx /= n;
    m.e[2] = static_cast<int>(idx % n);
    idx /= n;
    m.e[1] = static_cast<int>(idx % n);
    idx /= n;
    m.e[0] = static_cast<int>(idx % n);
    return m;
}

int ModMat::det() const { return mod_reduce(e[0] * e[3] - e[1] * e[2], n); }

int ModMat::trace() const { return mod_reduce(e[0] + e[3], n); }

ModMat ModMat::adjugate() const { return ModMat(n, e[3], -e[1], -e[2], e[0]); }

ModMat ModMat::scaled(int s) const {
    return ModMat(n, e[0] * s, e[1] * s, e[2] * s, e[3] * s);
}

ModMat ModMat::operator+(const ModMat& o) const {
    return ModMat(n, e[0] + o.e[0], e[1] + o.e[1], e[2] + o.e[2], e[3] + o.e[3]);
}

ModMat ModMat::operator-(const ModMat& o) const {
    return ModMat(n, e[0] - o.e[0], e[1] - o.e[1], e[2] - o.e[2], e[3] - o.e[3]);
}

ModMat ModMat::operator*(const ModMat& o) const {
    return ModMat(n, e[0] * o.e[0] + e[1] * o.e[2], e[0] * o.e[1] + e[1] * o.e[3],
                  e[2] * o.e[0] + e[3] * o.e[2], e[2] * o.e[1] + e[3] * o.e[3]);
}

bool ModMat::is_unit() const { return std::gcd(det(), n) == 1; }

long modmat_count(int n) {
    return static_cast<long>(n) * n * n * n;
}

std::string to_string(Convention c) { return c == Convention::C1 ? "c1" : "c2"; }

std::vector<ModMat> enumerate_idempotents(int n) {
    require_modulus(n, kMaxTargetedModulus, "enumerate_idempotents");
    std::vector<ModMat> out;
    const long count = modmat_count(n);
    for (long idx = 0; idx < count; ++idx) {
        ModMat m = ModMat::from_index(n, idx);
        if (m.is_idempotent()) out.push_back(m);
    }
    return out;
}

namespace {

/// Shared quantifier sweep: for every X, some multiplier R from `pool`
/// makes expr(A, X, R) a unit.
template <typename Expr>
SweepResult sweep_all_x(const ModMat& a, std::span<const ModMat> pool, Expr&& expr) {
    const int n = a.n;
    const long count = modmat_count(n);
    for (long xi = 0; xi < count; ++xi) {
        const ModMat x = ModMat::from_index(n, xi);
        bool found = false;
        for (const ModMat& r : pool) {
            if (expr(a, x, r).is_unit()) {
                found = true;
                break;
            }
        }
        if (!found) return {false, x};
    }
    return {true, std::nullopt};
}

std::vector<ModMat> all_matrices(int n) {
    std::vector<ModMat> out;
    const long count = modmat_count(n);
    out.reserve(static_cast<size_t>(count));
    for (long idx = 0; idx < count; ++idx) out.push_back(ModMat::from_index(n, idx));
    return out;
}

ModMat left_expr(const ModMat& a, const ModMat& x, const ModMat& r, Convention conv) {
    const ModMat id = ModMat::identity(a.n);
    return conv == Convention::C1 ? a + r * (x * a - id) : a + r * (id - x * a);
}

ModMat right_expr(const ModMat& a, const ModMat& x, const ModMat& r, Convention conv) {
    const ModMat id = ModMat::identity(a.n);
    return conv == Convention::C1 ? a + (a * x - id) * r : a + (id - a * x) * r;
}

SweepResult left_isr1_with(const ModMat& a, Convention conv,
                           std::span<const ModMat> idempotents) {
    return sweep_all_x(a, idempotents, [conv](const ModMat& m, const ModMat& x, const ModMat& r) {
        return left_expr(m, x, r, conv);
    });
}

SweepResult right_isr1_with(const ModMat& a, Convention conv,
                            std::span<const ModMat> idempotents) {
    return sweep_all_x(a, idempotents, [conv](const ModMat& m, const ModMat& x, const ModMat& r) {
        return right_expr(m, x, r, conv);
    });
}

bool clean_with(const ModMat& a, std::span<const ModMat> idempotents) {
    for (const ModMat& e : idempotents) {
        if ((a - e).is_unit()) return true;
    }
    return false;
}

bool strongly_clean_with(const ModMat& a, std::span<const ModMat> idempotents) {
    for (const ModMat& e : idempotents) {
        const ModMat u = a - e;
        if (u.is_unit() && e * u == u * e) return true;
    }
    return false;
}

}  // namespace

SweepResult is_left_isr1_def(const ModMat& a, Convention conv) {
    require_modulus(a.n, kMaxTargetedModulus, "is_left_isr1_def");
    return left_isr1_with(a, conv, enumerate_idempotents(a.n));
}

SweepResult is_right_isr1_def(const ModMat& a, Convention conv) {
    require_modulus(a.n, kMaxTargetedModulus, "is_right_isr1_def");
    return right_isr1_with(a, conv, enumerate_idempotents(a.n));
}

SweepResult is_sr1_def(const ModMat& a) {
    require_modulus(a.n, kMaxTargetedModulus, "is_sr1_def");
    return sweep_all_x(a, all_matrices(a.n), [](const ModMat& m, const ModMat& x, const ModMat& r) {
        return left_expr(m, x, r, Convention::C1);
    });
}

bool is_clean(const ModMat& a) {
    require_modulus(a.n, kMaxTargetedModulus, "is_clean");
    return clean_with(a, enumerate_idempotents(a.n));
}

bool is_strongly_clean(const ModMat& a) {
    require_modulus(a.n, kMaxTargetedModulus, "is_strongly_clean");
    return strongly_clean_with(a, enumerate_idempotents(a.n));
}

int thm1_expression(const ModMat& a, const ModMat& x, const ModMat& y) {
    const int n = a.n;
    const int dy = y.det();
    const int first = dy * (x.det() * a.det() - (x * a).trace() + 1);
    const int middle = a.scaled((x * y).trace() + 1).det();
    const int last = (a * y.adjugate()).trace();
    return mod_reduce(first + middle - last, n);
}

SweepResult thm1_sr1_predicate(const ModMat& a) {
    require_modulus(a.n, kMaxTargetedModulus, "thm1_sr1_predicate");
    const int n = a.n;
    return sweep_all_x(a, all_matrices(n), [n](const ModMat& m, const ModMat& x, const ModMat& y) {
        // Wrap the scalar expression as a diagonal matrix so the generic
        // sweep's unit test applies: gcd(expr, n) == 1.
        return ModMat(n, thm1_expression(m, x, y), 0, 0, 1);
    });
}

SweepResult thm1_isr1_predicate(const ModMat& a) {
    require_modulus(a.n, kMaxTargetedModulus, "thm1_isr1_predicate");
    const int n = a.n;
    return sweep_all_x(a, enumerate_idempotents(n),
                       [n](const ModMat& m, const ModMat& x, const ModMat& y) {
                           return ModMat(n, thm1_expression(m, x, y), 0, 0, 1);
                       });
}

bool OracleReport::hard_violation() const {
    for (const ClaimResult& c : claims) {
        if (!c.holds && !c.informational) return true;
    }
    return false;
}

OracleReport oracle_full(int n) {
    require_modulus(n, kMaxFullModulus, "oracle_full");
    OracleReport rep;
    rep.n = n;
    rep.mode = "full";

    const std::vector<ModMat> idems = enumerate_idempotents(n);
    const std::vector<ModMat> all = all_matrices(n);
    const long count = modmat_count(n);

    struct Flags {
        bool unit, idem, clean, strongly, l1, r1, l2, r2, sr1, t_sr1, t_isr1;
    };
    std::vector<Flags> flags(static_cast<size_t>(count));

    for (long i = 0; i < count; ++i) {
        const ModMat a = all[static_cast<size_t>(i)];
        Flags& f = flags[static_cast<size_t>(i)];
        f.unit = a.is_unit();
        f.idem = a.is_idempotent();
        f.clean = clean_with(a, idems);
        f.strongly = strongly_clean_with(a, idems);
        f.l1 = left_isr1_with(a, Convention::C1, idems).ok;
        f.r1 = right_isr1_with(a, Convention::C1, idems).ok;
        f.l2 = left_isr1_with(a, Convention::C2, idems).ok;
        f.r2 = right_isr1_with(a, Convention::C2, idems).ok;
        f.sr1 = is_sr1_def(a).ok;
        f.t_sr1 = thm1_sr1_predicate(a).ok;
        f.t_isr1 = thm1_isr1_predicate(a).ok;

        rep.counts.units += f.unit;
        rep.counts.idempotents += f.idem;
        rep.counts.clean += f.clean;
        rep.counts.strongly_clean += f.strongly;
        rep.counts.left_isr1_c1 += f.l1;
        rep.counts.right_isr1_c1 += f.r1;
        rep.counts.left_isr1_c2 += f.l2;
        rep.counts.right_isr1_c2 += f.r2;
        rep.counts.sr1 += f.sr1;
    }

    auto compare_sets = [&](const std::string& id, bool informational, auto lhs, auto rhs,
                            const std::string& lhs_name, const std::string& rhs_name) {
        ClaimResult c;
        c.id = id;
        c.informational = informational;
        for (long i = 0; i < count; ++i) {
            const Flags& f = flags[static_cast<size_t>(i)];
            if (lhs(f) != rhs(f)) {
                c.holds = false;
                std::ostringstream os;
                os << "first divergence at " << mat_text(all[static_cast<size_t>(i)]) << ": "
                   << lhs_name << " = " << (lhs(f) ? "true" : "false") << ", " << rhs_name
                   << " = " << (rhs(f) ? "true" : "false");
                c.detail = os.str();
                break;
            }
        }
        if (c.holds) {
            c.detail = lhs_name + " and " + rhs_name + " agree on all " +
                       std::to_string(count) + " matrices";
        }
        rep.claims.push_back(std::move(c));
    };

    auto subset_claim = [&](const std::string& id, auto sub, auto super,
                            const std::string& sub_name, const std::string& super_name) {
        ClaimResult c;
        c.id = id;
        for (long i = 0; i < count; ++i) {
            const Flags& f = flags[static_cast<size_t>(i)];
            if (sub(f) && !super(f)) {
                c.holds = false;
                c.detail = "counterexample " + mat_text(all[static_cast<size_t>(i)]) + ": in " +
                           sub_name + " but not in " + super_name;
                break;
            }
        }
        if (c.holds) c.detail = sub_name + " is contained in " + super_name;
        rep.claims.push_back(std::move(c));
    };

    compare_sets("left_right_symmetry_c1", false, [](const Flags& f) { return f.l1; },
                 [](const Flags& f) { return f.r1; }, "left_isr1[c1]", "right_isr1[c1]");
    compare_sets("left_right_symmetry_c2", false, [](const Flags& f) { return f.l2; },
                 [](const Flags& f) { return f.r2; }, "left_isr1[c2]", "right_isr1[c2]");
    subset_claim("units_and_zero_isr1_c1",
                 [](const Flags& f) { return f.unit; }, [](const Flags& f) { return f.l1; },
                 "units", "left_isr1[c1]");
    subset_claim("units_and_zero_isr1_c2",
                 [](const Flags& f) { return f.unit; }, [](const Flags& f) { return f.l2; },
                 "units", "left_isr1[c2]");
    {
        // Zero matrix membership, both conventions.
        ClaimResult c;
        c.id = "zero_isr1";
        const Flags& f0 = flags[0];
        c.holds = f0.l1 && f0.l2;
        c.detail = c.holds ? "the zero matrix is isr1 under both conventions"
                           : "the zero matrix is not isr1 under some convention";
        rep.claims.push_back(std::move(c));
    }
    subset_claim("isr1_subset_clean_c1",
                 [](const Flags& f) { return f.l1; }, [](const Flags& f) { return f.clean; },
                 "left_isr1[c1]", "clean");
    subset_claim("isr1_subset_clean_c2",
                 [](const Flags& f) { return f.l2; }, [](const Flags& f) { return f.clean; },
                 "left_isr1[c2]", "clean");
    compare_sets("sr1_def_equals_thm1", true, [](const Flags& f) { return f.sr1; },
                 [](const Flags& f) { return f.t_sr1; }, "sr1_def", "thm1_sr1");
    compare_sets("isr1_def_equals_thm1_c1", true, [](const Flags& f) { return f.l1; },
                 [](const Flags& f) { return f.t_isr1; }, "left_isr1[c1]", "thm1_isr1");
    compare_sets("c1_equals_c2", true, [](const Flags& f) { return f.l1; },
                 [](const Flags& f) { return f.l2; }, "left_isr1[c1]", "left_isr1[c2]");
    return rep;
}

OracleReport oracle_targeted(int n, std::span<const ModMat> targets, Convention conv) {
    require_modulus(n, kMaxTargetedModulus, "oracle_targeted");
    OracleReport rep;
    rep.n = n;
    rep.mode = "targeted";
    rep.convention = conv;
    const std::vector<ModMat> idems = enumerate_idempotents(n);
    for (const ModMat& t : targets) {
        if (t.n != n) throw std::invalid_argument("target matrix modulus mismatch");
        TargetedRow row;
        row.matrix = t;
        row.clean = clean_with(t, idems);
        row.strongly_clean = strongly_clean_with(t, idems);
        SweepResult sw = left_isr1_with(t, conv, idems);
        row.left_isr1 = sw.ok;
        row.failing_x = sw.failing_x;
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

}  // namespace isr1
