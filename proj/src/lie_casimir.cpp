#include "jetline/lie_casimir.hpp"

#include <optional>

#include "jetline/errors.hpp"
#include "jetline/jets.hpp"

namespace jetline {

namespace {

std::vector<Rational> coords(const VectorField& v) { return {v.coord(0), v.coord(1), v.coord(2)}; }

VectorField from_coords(const std::vector<Rational>& c) { return VectorField(Poly({c[0], c[1], c[2]})); }

VectorField std_basis(int i) { return VectorField(Poly::monomial(Rational(1), i)); }

// Columns hold the standard coordinates of [q, b_j].
Matrix<Rational> ad_matrix(const VectorField& q) {
  Matrix<Rational> m(3, 3);
  for (int j = 0; j < 3; ++j) m.set_column(static_cast<std::size_t>(j), coords(bracket(q, std_basis(j))));
  return m;
}

}  // namespace

VectorField bracket(const VectorField& a, const VectorField& b) {
  const Poly& p = a.coefficient();
  const Poly& q = b.coefficient();
  return VectorField(p * q.derivative() - q * p.derivative());
}

RatFunc lie_derivative(const VectorField& q, const RatFunc& f, int k) {
  const RatFunc qf(q.coefficient());
  const RatFunc dq(q.coefficient().derivative());
  return qf * f.derivative() - RatFunc(Rational(k, 2)) * dq * f;
}

VectorField transport_field(const Mobius& m, const VectorField& q) {
  const RatFunc moved = weight_pullback(m, RatFunc(q.coefficient()), 2);
  if (!moved.is_polynomial()) throw Error(ErrorKind::DegreeTooLarge, "transported field is not global");
  return VectorField(moved.num());
}

SymTensor2::SymTensor2(std::vector<Term> decomposition) : terms_(std::move(decomposition)), matrix_(3, 3) {
  for (const auto& [lambda, field] : terms_) {
    const auto c = coords(field);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) matrix_(i, j) += lambda * c[i] * c[j];
  }
}

SymTensor2 polarization_decomposition(const Matrix<Rational>& s) {
  std::vector<SymTensor2::Term> terms;
  for (int i = 0; i < 3; ++i) {
    Rational diag = s(static_cast<std::size_t>(i), static_cast<std::size_t>(i));
    for (int j = 0; j < 3; ++j)
      if (j != i) diag -= s(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
    if (!diag.is_zero()) terms.emplace_back(diag, std_basis(i));
  }
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      const Rational& sij = s(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
      if (!sij.is_zero()) terms.emplace_back(sij, std_basis(i) + std_basis(j));
    }
  }
  return SymTensor2(std::move(terms));
}

SymTensor2 diagonal_decomposition(const Matrix<Rational>& symmetric) {
  // Repeated rank-one reduction: pick w with alpha = w^T S w != 0 and peel
  // off (S w)(S w)^T / alpha.
  Matrix<Rational> s = symmetric;
  std::vector<SymTensor2::Term> terms;
  for (int round = 0; round < 3 && !s.is_zero(); ++round) {
    std::vector<Rational> w(3);
    bool found = false;
    for (std::size_t i = 0; i < 3 && !found; ++i) {
      if (!s(i, i).is_zero()) {
        w[i] = Rational(1);
        found = true;
      }
    }
    for (std::size_t i = 0; i < 3 && !found; ++i) {
      for (std::size_t j = i + 1; j < 3 && !found; ++j) {
        if (!s(i, j).is_zero()) {
          w[i] = Rational(1);
          w[j] = Rational(1);
          found = true;
        }
      }
    }
    const std::vector<Rational> sw = s.apply(w);
    Rational alpha(0);
    for (std::size_t i = 0; i < 3; ++i) alpha += w[i] * sw[i];
    const Rational inv = Rational(1) / alpha;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) s(i, j) -= sw[i] * sw[j] * inv;
    terms.emplace_back(inv, from_coords(sw));
  }
  return SymTensor2(std::move(terms));
}

SymTensor2 casimir_tensor() {
  const VectorField e = VectorField::e();
  const VectorField h = VectorField::h();
  const VectorField f = VectorField::f();
  return SymTensor2({{Rational(1), e + f}, {Rational(-1), e}, {Rational(-1), f}, {Rational(1, 2), h}});
}

SymTensor2 transport_tensor(const Mobius& m, const SymTensor2& t) {
  std::vector<SymTensor2::Term> terms;
  for (const auto& [lambda, field] : t.decomposition()) terms.emplace_back(lambda, transport_field(m, field));
  return SymTensor2(std::move(terms));
}

Matrix<Rational> adjoint_action(const VectorField& q, const SymTensor2& t) {
  const Matrix<Rational> k = ad_matrix(q);
  return k * t.matrix() + t.matrix() * k.transposed();
}

RatFunc second_order_lie(const SymTensor2& t, const RatFunc& f, int k) {
  RatFunc acc;
  for (const auto& [lambda, field] : t.decomposition()) {
    acc += RatFunc(lambda) * lie_derivative(field, lie_derivative(field, f, k), k);
  }
  return acc;
}

Rational casimir_scalar(int k) {
  const SymTensor2 c = casimir_tensor();
  const RatFunc on_one = second_order_lie(c, RatFunc(1), k);
  if (!on_one.is_constant()) throw Error(ErrorKind::NotScalar, "Casimir image of 1 is " + on_one.to_string());
  const Rational mu = on_one.constant_value();
  for (int m = 0; m <= 8; ++m) {
    const RatFunc zm(Poly::monomial(Rational(1), m));
    const RatFunc image = second_order_lie(c, zm, k);
    if (!(image == RatFunc(mu) * zm)) {
      throw Error(ErrorKind::NotScalar, "Casimir image of z^" + std::to_string(m) + " is " + image.to_string());
    }
  }
  return mu;
}

std::vector<std::vector<std::vector<Rational>>> structure_constants() {
  std::vector<std::vector<std::vector<Rational>>> out(3, std::vector<std::vector<Rational>>(3));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      out[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = coords(bracket(std_basis(i), std_basis(j)));
  return out;
}

Matrix<Rational> killing_casimir(const std::vector<VectorField>& basis, const Rational& scale) {
  if (basis.size() != 3) throw Error(ErrorKind::DimensionMismatch, "expected a basis of three fields");
  Matrix<Rational> p(3, 3);
  for (std::size_t i = 0; i < 3; ++i) p.set_column(i, coords(basis[i]));
  const auto p_inv = p.inverse();
  if (!p_inv) throw Error(ErrorKind::DimensionMismatch, "fields do not form a basis");
  // ad matrices in the given basis.
  std::vector<Matrix<Rational>> ad;
  for (std::size_t i = 0; i < 3; ++i) ad.push_back(*p_inv * ad_matrix(basis[i]) * p);
  Matrix<Rational> killing(3, 3);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      const Matrix<Rational> prod = ad[i] * ad[j];
      killing(i, j) = prod(0, 0) + prod(1, 1) + prod(2, 2);
    }
  }
  const auto k_inv = killing.inverse();
  if (!k_inv) throw Error(ErrorKind::NotScalar, "Killing form is degenerate");
  return (p * *k_inv * p.transposed()).scaled(scale);
}

Matrix<Rational> casimir_from_jets() {
  // Fields of the basis X^2, XY, Y^2 read off through the projection
  // J^2(T) -> T at three points and interpolated.
  const std::vector<Rational> nodes{Rational(0), Rational(1), Rational(2)};
  std::vector<VectorField> fields;
  for (int i = 2; i >= 0; --i) {
    const BinaryForm q = BinaryForm::monomial(2, i);
    Poly interp;
    for (std::size_t a = 0; a < nodes.size(); ++a) {
      const Rational value = truncate(eval_global(q, PointP1::affine(nodes[a]), 2), 0).coeff(0);
      Poly basis(1);
      Rational denom(1);
      for (std::size_t b = 0; b < nodes.size(); ++b) {
        if (a == b) continue;
        basis *= Poly::linear(Rational(1), -nodes[b]);
        denom *= nodes[a] - nodes[b];
      }
      interp += basis * (value / denom);
    }
    fields.emplace_back(interp);
  }
  // The Killing-form Casimir acts by 1 on the adjoint representation
  // (weight 2); the library normalizes that scalar to 4.
  return killing_casimir(fields, Rational(4));
}

Matrix<Rational> contraction_endomorphism(const BinaryForm& q) {
  Matrix<Rational> a(2, 2);
  const std::vector<Vec2> basis{Vec2{Rational(1), Rational(0)}, Vec2{Rational(0), Rational(1)}};
  for (std::size_t c = 0; c < 2; ++c) {
    const BinaryForm image = contract_omega(q, symplectic_dual(basis[c]), 1);
    a(0, c) = image.coeff(1);  // X component
    a(1, c) = image.coeff(0);  // Y component
  }
  return a;
}

Rational contraction_bracket_scale() {
  // Q -> contraction_endomorphism(Q) is a linear bijection onto sl(V); solve
  // for the preimage of each commutator and compare with the field bracket.
  Matrix<Rational> embed(4, 3);
  for (int i = 0; i < 3; ++i) {
    const Matrix<Rational> a = contraction_endomorphism(BinaryForm::monomial(2, i));
    embed(0, static_cast<std::size_t>(i)) = a(0, 0);
    embed(1, static_cast<std::size_t>(i)) = a(0, 1);
    embed(2, static_cast<std::size_t>(i)) = a(1, 0);
    embed(3, static_cast<std::size_t>(i)) = a(1, 1);
  }
  std::optional<Rational> scale;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const BinaryForm qi = BinaryForm::monomial(2, i);
      const BinaryForm qj = BinaryForm::monomial(2, j);
      const Matrix<Rational> ai = contraction_endomorphism(qi);
      const Matrix<Rational> aj = contraction_endomorphism(qj);
      const Matrix<Rational> comm = ai * aj - aj * ai;
      // Least-structure solve: embed * x = vec(comm).
      Matrix<Rational> aug(4, 4);
      for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 3; ++c) aug(r, c) = embed(r, c);
      aug(0, 3) = comm(0, 0);
      aug(1, 3) = comm(0, 1);
      aug(2, 3) = comm(1, 0);
      aug(3, 3) = comm(1, 1);
      auto [rr, pivots] = aug.rref();
      if (!pivots.empty() && pivots.back() == 3) throw Error(ErrorKind::NotScalar, "commutator left sl(V)");
      std::vector<Rational> x(3);
      for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = rr(r, 3);
      const BinaryForm via_contraction(2, {x[0], x[1], x[2]});
      const BinaryForm via_fields = sl2_to_s2(bracket(s2_to_sl2(qi), s2_to_sl2(qj)));
      for (int c = 0; c <= 2; ++c) {
        const Rational& lhs = via_contraction.coeff(c);
        const Rational& rhs = via_fields.coeff(c);
        if (rhs.is_zero()) {
          if (!lhs.is_zero()) throw Error(ErrorKind::NotScalar, "brackets are not proportional");
          continue;
        }
        const Rational ratio = lhs / rhs;
        if (scale && *scale != ratio) throw Error(ErrorKind::NotScalar, "brackets are not proportional");
        scale = ratio;
      }
    }
  }
  if (!scale || scale->is_zero()) throw Error(ErrorKind::NotScalar, "contraction bracket vanishes");
  return *scale;
}

}  // namespace jetline
