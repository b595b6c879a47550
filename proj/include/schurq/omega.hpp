#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>
#include <vector>

#include "schurq/composition.hpp"
#include "schurq/skew_shape.hpp"

namespace schurq {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// An element of the algebra of Schur Q-functions in the strict q-basis:
/// a finite map from strict partitions (the empty partition indexes the
/// unit) to exact rationals. Zero coefficients are never stored. The ring
/// product straightens repeated parts via q_r^2 = 2 sum_j (-1)^(j-1)
/// q_(r-j) q_(r+j), so results always live in the strict basis.
class OmegaElem {
public:
    using coeff_map = std::map<parts_t, Rational>;

    OmegaElem() = default;  // zero

    static OmegaElem unit();
    /// q_n for n >= 1; q_0 is the unit; negative n gives zero.
    static OmegaElem q(int n);
    static OmegaElem term(const StrictPartition& key, const Rational& c);

    const coeff_map& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_integral() const;

    void add_term(const parts_t& key, const Rational& c);

    OmegaElem& operator+=(const OmegaElem& o);
    OmegaElem& operator-=(const OmegaElem& o);
    OmegaElem& operator*=(const Rational& c);
    friend OmegaElem operator+(OmegaElem a, const OmegaElem& b) { return a += b; }
    friend OmegaElem operator-(OmegaElem a, const OmegaElem& b) { return a -= b; }
    friend OmegaElem operator*(OmegaElem a, const Rational& c) { return a *= c; }
    friend OmegaElem operator*(const Rational& c, OmegaElem a) { return a *= c; }
    OmegaElem operator*(const OmegaElem& o) const;

    friend bool operator==(const OmegaElem&, const OmegaElem&) = default;

    /// "q[2,1] - q[3]", terms in lex-ascending partition order.
    std::string str() const;

private:
    coeff_map coeffs_;
};

/// Expand the q-monomial over an arbitrary multiset of positive parts in the
/// strict basis. Memoized; the result does not depend on rewrite order.
OmegaElem straighten(parts_t parts);

/// Ribbon Schur Q-function: (-1)^len(alpha) * sum over coarsenings beta of
/// (-1)^len(beta) q_sort(beta), fully straightened. Output is integral.
OmegaElem ribbon_q(const Composition& alpha);

/// Ordinary skew Schur Q-function via det(q_(lambda_i - mu_j - i + j)).
/// Output is integral and agrees with ribbon_q on ribbons.
OmegaElem skew_q(const SkewShape& d);

bool equal(const OmegaElem& a, const OmegaElem& b);
std::string canonical_key(const OmegaElem& a);

enum class Relation { EE, EI, T, ET };

/// Checks the named relation family instance inside the algebra:
///   EE: r_2x = r_(2x-1)1 - r_(2x-2)2 + ... + r_1(2x-1)
///   EI: 2 r_2x = r_(2x-1) r_1 - r_(2x-2) r_2 + ... + r_1 r_(2x-1)
///   T : r_x = r_(1^x)          ET: r_2x = r_(1^2x)
bool relation_check(Relation kind, int x);

/// r_alpha r_beta == r_(alpha.beta) + r_(alpha(.)beta)
bool ribbon_mult_check(const Composition& alpha, const Composition& beta);

/// sum_(r+s=n) (-1)^r q_r q_s == 0 after straightening.
bool euler_form_vanishes(int n);

/// Determinant of the transition matrix from {r_lambda : lambda strict of n}
/// to {q_mu : mu strict of n}; +-1 exactly when both are bases.
Rational ribbon_basis_det(int n);

namespace detail {
/// Straightening with a seed-dependent choice of which repeated pair to
/// rewrite at every step; unmemoized. Used to exercise confluence.
OmegaElem straighten_shuffled(parts_t parts, uint64_t seed);
}  // namespace detail

}  // namespace schurq
