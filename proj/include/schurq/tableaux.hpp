#pragma once

#include <map>
#include <string>
#include <vector>

#include "schurq/omega.hpp"
#include "schurq/skew_shape.hpp"

namespace schurq {

/// Polynomial in x1..xk with exact integer coefficients, stored as a finite
/// map from exponent vectors of fixed arity. No zero coefficients.
class SparsePoly {
public:
    using term_map = std::map<std::vector<int>, Int>;

    explicit SparsePoly(int arity = 0) : arity_(arity) {}
    static SparsePoly zero(int arity) { return SparsePoly(arity); }
    static SparsePoly constant(int arity, const Int& c);

    int arity() const { return arity_; }
    const term_map& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int total_degree() const;
    Int coeff(const std::vector<int>& expo) const;

    void add_term(const std::vector<int>& expo, const Int& c);

    SparsePoly& operator+=(const SparsePoly& o);
    SparsePoly& operator-=(const SparsePoly& o);
    SparsePoly& operator*=(const Int& c);
    SparsePoly operator*(const SparsePoly& o) const;
    friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
    friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }

    friend bool operator==(const SparsePoly&, const SparsePoly&) = default;

    /// Graded-lex monomial order, e.g. "2*x1^2 + 2*x1*x2".
    std::string str() const;

private:
    int arity_;
    term_map terms_;
};

/// Sum of x^content over all weakly amenable fillings of the cell set with
/// entries from 1' < 1 < 2' < 2 < ... < k' < k: rows and columns weakly
/// increase, each row holds at most one i', each column at most one i.
SparsePoly amenable_q_poly(const CellSet& cells, int k);
SparsePoly amenable_q_poly(const SkewShape& d, int k);

/// Linear extension of q_lambda -> prod_i amenable_q_poly(row of lambda_i, k).
/// Input with non-integral coefficients is scaled by the common denominator
/// first (the image of d*A for the least d making it integral), which keeps
/// equality comparisons exact.
SparsePoly omega_to_poly(const OmegaElem& a, int k);

/// Coefficient of x1^n in the Q-function of the cell set (k = 1 enumeration).
Int x1_coeff(const SkewShape& d);

/// Classical skew Schur polynomial: rows weakly increase, columns strictly.
SparsePoly ssyt_poly(const SkewShape& d, int k);
SparsePoly h_poly(int n, int k);
SparsePoly e_poly(int n, int k);

/// ssyt_poly(D, k) == det(h_(lambda_i - mu_j - i + j)) over k variables.
bool jt_h_check(const SkewShape& d, int k);
/// ssyt_poly(D^t, k) == det(e_(lambda_i - mu_j - i + j)) over k variables.
bool jt_e_check(const SkewShape& d, int k);

/// Checks the almost-unitriangular determinant identity for a star product
/// of blocks: s over blocks[0] star_1 ... star_(m-1) blocks[m-1] equals the
/// determinant whose strictly-upper entries are s over the same runs with
/// every star flipped, diagonal s_blocks[i], subdiagonal 1.
bool star_determinant_check(const std::vector<SkewShape>& blocks, const StarWord& stars, int k);

/// q_n restricted to k variables in closed form: sum over exponent vectors c
/// with |c| = n of 2^(number of nonzero entries) x^c. Matches the one-row
/// tableau enumeration.
SparsePoly q_row_poly(int n, int k);

/// Polynomial image of ribbon_q(alpha) in k variables, computed directly
/// from the coarsening expansion without forming the q-basis element. Usable
/// far beyond the sizes where the full expansion fits.
SparsePoly ribbon_q_poly(const Composition& alpha, int k);

/// q_0..q_max_degree evaluated at an integer point, from the power series of
/// prod_i (1 + a_i t)/(1 - a_i t).
std::vector<Int> q_values_at(const std::vector<long>& point, int max_degree);

/// ribbon_q_poly(alpha, k) evaluated at the point behind q_at_point.
Int ribbon_q_eval(const Composition& alpha, const std::vector<Int>& q_at_point);

}  // namespace schurq
