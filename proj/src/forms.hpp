#pragma once
// Positive-definite ternary/quaternary quadratic forms: exact evaluation,
// complete signed representation lists, congruence-constrained least
// representations, and the algebraic identities the decomposition
// constructions rely on.
#include <array>
#include <optional>
#include <vector>

#include "arith.hpp"

namespace prsq {

struct QuadraticForm {
    int arity = 3;                      // 3 or 4 coordinates
    std::array<i64, 4> diag{1, 1, 1, 1};  // diagonal coefficients, all positive
    i64 cross_xy = 0;                   // coefficient of x*y (first two coords)

    static QuadraticForm diagonal3(i64 a, i64 b, i64 c);
    static QuadraticForm diagonal4(i64 a, i64 b, i64 c, i64 d);
    static QuadraticForm cross3(i64 a, i64 b, i64 c, i64 xy);

    i64 evaluate(const std::array<i64, 4>& t) const;  // exact, overflow-checked
    std::string label() const;                        // e.g. "x^2+5y^2+10z^2"
    bool operator==(const QuadraticForm&) const = default;
};

// the named forms used by the constructions
namespace named_forms {
QuadraticForm f_q(i64 d);       // x^2 + q y^2 + 2q z^2 with q = 4d^2+1
QuadraticForm g_5_10();         // x^2 + 5y^2 + 10z^2
QuadraticForm g_2_4();          // x^2 + 2y^2 + 4z^2
QuadraticForm h_3_3();          // x^2 + 3y^2 + 3z^2
QuadraticForm g_10_16();        // x^2 + 10y^2 + 16z^2   (lemma A target)
QuadraticForm g_8_44();         // x^2 + 8y^2 + 44z^2    (lemma B target)
QuadraticForm R_cross();        // 3x^2 + 5y^2 + 14z^2 + 2xy
QuadraticForm h_14_42();        // x^2 + 14y^2 + 42z^2   (= R lifted by 3)
QuadraticForm Rstar_cross();    // 3x^2 + 5y^2 + 7z^2 + 2xy
QuadraticForm l_14_35();        // x^2 + 14y^2 + 35z^2   (= R* lifted by 5)
QuadraticForm q_1112();         // x^2 + y^2 + z^2 + 2w^2
QuadraticForm q_1111();         // x^2 + y^2 + z^2 + w^2
QuadraticForm q_1122();         // x^2 + y^2 + 2z^2 + 2w^2
QuadraticForm q_1113();         // x^2 + y^2 + z^2 + 3w^2
QuadraticForm q_1255();         // x^2 + 2y^2 + 5z^2 + 5w^2
}  // namespace named_forms

// one linear congruence on the coordinates: sum(coeffs[i] * t[i]) == residue (mod modulus)
struct CongruenceClause {
    std::array<i64, 4> coeffs{0, 0, 0, 0};
    i64 modulus = 1;  // >= 1
    i64 residue = 0;
    bool satisfied(const std::array<i64, 4>& t) const;
};

struct CongruenceConstraint {
    std::vector<CongruenceClause> clauses;
    // sign_free[i] == false restricts coordinate i to nonnegative values
    std::array<bool, 4> sign_free{true, true, true, true};
};

// every integer tuple t with f(t) == m, ascending lexicographic order.
// resource_limit for m > 2^48.
std::vector<std::array<i64, 4>> represent_all(const QuadraticForm& f, u64 m);

// lexicographically least representation satisfying all clauses (and the
// sign restrictions), or nullopt
std::optional<std::array<i64, 4>> represent_constrained(const QuadraticForm& f, u64 m,
                                                        const CongruenceConstraint& cc);

// automorphism of x^2+10y^2+16z^2: (x,y,z) -> ((-3x+16z)/5, y, (x+3z)/5).
// domain_error when the divisions are not exact.
std::array<i64, 3> automorphism_g(const std::array<i64, 3>& t);

// lifts: value scales by 3 resp. 5
std::array<i64, 3> lift_R_to_h(const std::array<i64, 3>& t);      // (3x+y, y, z)
std::array<i64, 3> lift_Rstar_to_l(const std::array<i64, 3>& t);  // (x+5y, x, z)

// multiplies x^2+y^2+z^2+2w^2 values by 7
std::array<i64, 4> multiplier7(const std::array<i64, 4>& t);

}  // namespace prsq
