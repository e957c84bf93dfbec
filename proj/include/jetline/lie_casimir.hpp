#pragma once

// The Lie algebra of global vector fields on P(V), weight-k Lie derivatives,
// and the Casimir element acting on sections of L^k.

#include <string>
#include <utility>
#include <vector>

#include "jetline/matrix.hpp"
#include "jetline/proj_line.hpp"
#include "jetline/ratfunc.hpp"
#include "jetline/vector_field.hpp"

namespace jetline {

/// q1 q2' - q2 q1'.
VectorField bracket(const VectorField& a, const VectorField& b);

/// Weight-k Lie derivative q f' - (k/2) q' f.
RatFunc lie_derivative(const VectorField& q, const RatFunc& f, int k);

/// Pullback of a vector field by M, i.e. weight_pullback with k = 2.
VectorField transport_field(const Mobius& m, const VectorField& q);

/// Symmetric 2-tensor sum lambda_i A_i (x) A_i on the vector-field algebra.
/// The coefficient matrix in the basis (d, z d, z^2 d) is the canonical
/// representative; decompositions are not.
class SymTensor2 {
 public:
  using Term = std::pair<Rational, VectorField>;

  explicit SymTensor2(std::vector<Term> decomposition);

  const std::vector<Term>& decomposition() const noexcept { return terms_; }
  const Matrix<Rational>& matrix() const noexcept { return matrix_; }

  /// Equality of the underlying tensors.
  friend bool operator==(const SymTensor2& a, const SymTensor2& b) { return a.matrix_ == b.matrix_; }

 private:
  std::vector<Term> terms_;
  Matrix<Rational> matrix_;
};

/// Decomposition via polarization: S_ii e_i(x)e_i plus, for i < j,
/// S_ij [(e_i+e_j)(x)(e_i+e_j) - e_i(x)e_i - e_j(x)e_j].
SymTensor2 polarization_decomposition(const Matrix<Rational>& symmetric);
/// Decomposition via symmetric Gaussian elimination (LDL^T-style).
SymTensor2 diagonal_decomposition(const Matrix<Rational>& symmetric);

/// E (x) F + F (x) E + 1/2 H (x) H with E = d, H = -2z d, F = -z^2 d.
SymTensor2 casimir_tensor();

/// Image of T under the action of M on each tensor factor.
SymTensor2 transport_tensor(const Mobius& m, const SymTensor2& t);

/// Adjoint action of q on T as a 3x3 matrix: ad_q T.
Matrix<Rational> adjoint_action(const VectorField& q, const SymTensor2& t);

/// sum lambda_i L_{A_i}(L_{A_i} f) on weight-k sections.
RatFunc second_order_lie(const SymTensor2& t, const RatFunc& f, int k);

/// mu_k with second_order_lie(casimir_tensor(), f, k) = mu_k f, found from
/// f = 1 and checked on z^0..z^8. Throws NotScalar if proportionality fails.
Rational casimir_scalar(int k);

/// Structure constants of the vector-field bracket in the basis (d, z d, z^2 d):
/// out[i][j] is the coordinate vector of [b_i, b_j].
std::vector<std::vector<std::vector<Rational>>> structure_constants();

/// Casimir computed from the inverse Killing form, in the given basis of a
/// three-dimensional Lie algebra of fields, mapped back to the (d, z d, z^2 d)
/// basis and scaled by `scale`.
Matrix<Rational> killing_casimir(const std::vector<VectorField>& basis, const Rational& scale);

/// The Casimir tensor of S^2(V) assembled from jets: each basis form Q is sent
/// to the vector field x -> truncate(eval_global(Q, x, 2), 0), reconstructed
/// from its values, and the Killing-form Casimir of S^2(V) is pushed along.
Matrix<Rational> casimir_from_jets();

/// The Lie structure on S^2(V) through theta-contraction: Q acts on V as
/// w -> contract_omega(Q, symplectic_dual(w), 1), and the bracket is the
/// commutator of these endomorphisms.
Matrix<Rational> contraction_endomorphism(const BinaryForm& q);
/// The scalar s with contraction bracket = s * (vector-field bracket) on S^2(V);
/// throws NotScalar if no single scalar works.
Rational contraction_bracket_scale();

}  // namespace jetline
