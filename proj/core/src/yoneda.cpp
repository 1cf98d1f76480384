#include "taucat/yoneda.hpp"

#include <string>

#include "taucat/error.hpp"

namespace taucat {

GradedModule evaluate(const GradedCategory& cat, const GradedFunctor& F, int y) {
  const FiniteGroup& H = cat.H();
  GradedModule m{std::vector<int>(H.order(), 0)};
  for (int h = 0; h < H.order(); ++h)
    for (const auto& r : F) m.dims[h] += cat.rank(r.object, y, H.mul(h, r.shift));
  return m;
}

GradedModule evaluate_yoneda(const GradedCategory& cat, int x, int a, int y) {
  return evaluate(cat, {{x, a}}, y);
}

Matrix functor_action(const GradedCategory& cat, const GradedFunctor& F, const Morphism& y, int h) {
  const FiniteGroup& H = cat.H();
  const int kh = H.mul(y.degree, h);
  Matrix m(evaluate(cat, F, y.dst).dims[kh], evaluate(cat, F, y.src).dims[h]);
  int row = 0, col = 0;
  for (const auto& r : F) {
    const int src_deg = H.mul(h, r.shift);
    const int dst_deg = H.mul(kh, r.shift);
    const int rs = cat.rank(r.object, y.src, src_deg);
    for (int c = 0; c < rs; ++c) {
      const Morphism w = compose(cat, y, basis_morphism(cat, r.object, y.src, src_deg, c));
      for (size_t k = 0; k < w.coords.size(); ++k) m(row + static_cast<int>(k), col + c) = w.coords[k];
    }
    row += cat.rank(r.object, y.dst, dst_deg);
    col += rs;
  }
  return m;
}

YonedaProblem::YonedaProblem(CategoryPtr cat, int x, int a, GradedFunctor F)
    : cat_(std::move(cat)), x_(x), a_(a), F_(std::move(F)) {
  const GradedCategory& c = *cat_;
  const PrimeField& f = c.field();
  const int order = c.H().order();
  if (x < 0 || x >= c.object_count() || !c.H().contains(a)) fail("Yoneda functor out of range");
  for (const auto& r : F_)
    if (r.object < 0 || r.object >= c.object_count() || !c.H().contains(r.shift))
      fail("representable out of range");

  const GradedFunctor yo{{x, a}};
  for (int y = 0; y < c.object_count(); ++y) {
    const GradedModule src = evaluate(c, yo, y);
    const GradedModule dst = evaluate(c, F_, y);
    for (int h = 0; h < order; ++h) {
      offsets_.push_back(unknowns_);
      unknowns_ += src.dims[h] * dst.dims[h];
    }
  }

  // eta_{Y'} o yo(y) = F(y) o eta_Y for every basis y: Y -> Y' and every h.
  std::vector<std::vector<Scalar>> rows;
  for (int y = 0; y < c.object_count(); ++y)
    for (const auto& [y2, k] : c.out_homs(y))
      for (int b = 0; b < c.rank(y, y2, k); ++b) {
        const Morphism m = basis_morphism(c, y, y2, k, b);
        for (int h = 0; h < order; ++h) {
          const int kh = c.H().mul(k, h);
          const Matrix A = functor_action(c, yo, m, h);
          const Matrix B = functor_action(c, F_, m, h);
          const int blk = y * order + h, blk2 = y2 * order + kh;
          const int cols = A.cols(), cols2 = A.rows();
          for (int r = 0; r < B.rows(); ++r)
            for (int col = 0; col < cols; ++col) {
              std::vector<Scalar> eq(unknowns_, 0);
              for (int s = 0; s < A.rows(); ++s) {
                Scalar& e = eq[offsets_[blk2] + r * cols2 + s];
                e = f.add(e, A(s, col));
              }
              for (int s = 0; s < B.cols(); ++s) {
                Scalar& e = eq[offsets_[blk] + s * cols + col];
                e = f.sub(e, B(r, s));
              }
              rows.push_back(std::move(eq));
            }
        }
      }
  Matrix sys(static_cast<int>(rows.size()), unknowns_);
  for (size_t i = 0; i < rows.size(); ++i)
    for (int j = 0; j < unknowns_; ++j) sys(static_cast<int>(i), j) = rows[i][j];
  for (const auto& v : nullspace(f, sys)) basis_.push_back(unflatten(v));
}

GradedNatTrans YonedaProblem::unflatten(const std::vector<Scalar>& v) const {
  const GradedCategory& c = *cat_;
  const int order = c.H().order();
  GradedNatTrans eta;
  for (int y = 0; y < c.object_count(); ++y) {
    const GradedModule src = evaluate_yoneda(c, x_, a_, y);
    const GradedModule dst = evaluate(c, F_, y);
    for (int h = 0; h < order; ++h) {
      Matrix m(dst.dims[h], src.dims[h]);
      const int off = offsets_[y * order + h];
      for (int r = 0; r < m.rows(); ++r)
        for (int col = 0; col < m.cols(); ++col) m(r, col) = v[off + r * m.cols() + col];
      eta.blocks.push_back(std::move(m));
    }
  }
  return eta;
}

std::vector<Scalar> YonedaProblem::flatten(const GradedNatTrans& eta) const {
  std::vector<Scalar> v(unknowns_, 0);
  for (size_t b = 0; b < eta.blocks.size(); ++b) {
    const Matrix& m = eta.blocks[b];
    for (int r = 0; r < m.rows(); ++r)
      for (int col = 0; col < m.cols(); ++col) v[offsets_[b] + r * m.cols() + col] = m(r, col);
  }
  return v;
}

GradedNatTrans YonedaProblem::zero() const { return unflatten(std::vector<Scalar>(unknowns_, 0)); }

GradedNatTrans YonedaProblem::combine(const std::vector<Scalar>& coeffs) const {
  if (coeffs.size() != basis_.size()) fail("coefficient count does not match the nat space");
  const PrimeField& f = cat_->field();
  std::vector<Scalar> v(unknowns_, 0);
  for (size_t k = 0; k < coeffs.size(); ++k) {
    const std::vector<Scalar> b = flatten(basis_[k]);
    for (int j = 0; j < unknowns_; ++j) v[j] = f.add(v[j], f.mul(coeffs[k], b[j]));
  }
  return unflatten(v);
}

Verdict YonedaProblem::verify(const GradedNatTrans& eta) const {
  Verdict v;
  const GradedCategory& c = *cat_;
  const PrimeField& f = c.field();
  const int order = c.H().order();
  const GradedNatTrans shape = zero();
  if (eta.blocks.size() != shape.blocks.size()) {
    v.violations.push_back({"blocks", {}, "wrong number of blocks"});
    return v;
  }
  for (size_t b = 0; b < eta.blocks.size(); ++b)
    if (eta.blocks[b].rows() != shape.blocks[b].rows() || eta.blocks[b].cols() != shape.blocks[b].cols()) {
      v.violations.push_back({"block", {static_cast<int>(b) / order, static_cast<int>(b) % order},
                              "block has the wrong shape"});
      return v;
    }
  const GradedFunctor yo{{x_, a_}};
  for (int y = 0; y < c.object_count(); ++y)
    for (const auto& [y2, k] : c.out_homs(y))
      for (int b = 0; b < c.rank(y, y2, k); ++b) {
        const Morphism m = basis_morphism(c, y, y2, k, b);
        for (int h = 0; h < order; ++h) {
          const int kh = c.H().mul(k, h);
          const Matrix lhs = multiply(f, eta.blocks[y2 * order + kh], functor_action(c, yo, m, h));
          const Matrix rhs = multiply(f, functor_action(c, F_, m, h), eta.blocks[y * order + h]);
          if (!(lhs == rhs)) v.violations.push_back({"naturality", {y, y2, k, b, h}, "eta o yo(y) != F(y) o eta"});
        }
      }
  return v;
}

int YonedaProblem::fiber_dim() const {
  return evaluate(*cat_, F_, x_).dims[cat_->H().inv(a_)];
}

std::vector<Scalar> YonedaProblem::phi(const GradedNatTrans& eta) const {
  const Verdict v = verify(eta);
  if (!v.ok()) fail("not a natural transformation: " + v.violations.front().detail);
  const GradedCategory& c = *cat_;
  const int order = c.H().order();
  return apply(c.field(), eta.blocks[x_ * order + c.H().inv(a_)], c.identity_coords(x_));
}

GradedNatTrans YonedaProblem::phi_inv(const std::vector<Scalar>& v) const {
  const GradedCategory& c = *cat_;
  const FiniteGroup& H = c.H();
  const int order = H.order();
  const int ainv = H.inv(a_);
  if (static_cast<int>(v.size()) != fiber_dim()) fail("vector does not lie in (F X)_{a^{-1}}");
  GradedNatTrans eta = zero();
  for (int y = 0; y < c.object_count(); ++y)
    for (int h = 0; h < order; ++h) {
      Matrix& m = eta.blocks[y * order + h];
      const int d = H.mul(h, a_);
      for (int col = 0; col < m.cols(); ++col) {
        const Morphism u = basis_morphism(c, x_, y, d, col);
        const std::vector<Scalar> w = apply(c.field(), functor_action(c, F_, u, ainv), v);
        for (int r = 0; r < m.rows(); ++r) m(r, col) = w[r];
      }
    }
  return eta;
}

GradedNatTrans precompose(const YonedaProblem& source, const YonedaProblem& target,
                          const GradedNatTrans& eta, const Morphism& x) {
  const GradedCategory& c = source.category();
  const FiniteGroup& H = c.H();
  const int order = H.order();
  if (&c != &target.category() || !(source.functor() == target.functor()) || source.a() != target.a())
    fail("Yoneda problems do not share category, shift and functor");
  if (x.src != source.x() || x.dst != target.x() || x.degree != H.identity())
    fail("precomposition needs a degree-1 map X -> X'");
  GradedNatTrans out = target.zero();
  for (int y = 0; y < c.object_count(); ++y)
    for (int h = 0; h < order; ++h) {
      const int d = H.mul(h, source.a());
      Matrix pre(c.rank(x.src, y, d), c.rank(x.dst, y, d));
      for (int col = 0; col < pre.cols(); ++col) {
        const Morphism w = compose(c, basis_morphism(c, x.dst, y, d, col), x);
        for (int r = 0; r < pre.rows(); ++r) pre(r, col) = w.coords[r];
      }
      out.blocks[y * order + h] = multiply(c.field(), eta.blocks[y * order + h], pre);
    }
  return out;
}

bool is_invertible(const GradedCategory& cat, const GradedNatTrans& eta) {
  for (const Matrix& m : eta.blocks) {
    if (m.rows() != m.cols()) return false;
    if (m.rows() > 0 && !inverse(cat.field(), m)) return false;
  }
  return true;
}

std::optional<GradedNatTrans> find_invertible_nat(const YonedaProblem& prob, std::uint64_t limit) {
  const GradedCategory& c = prob.category();
  const auto& basis = prob.nat_space();
  if (basis.empty()) {
    GradedNatTrans z = prob.zero();
    if (is_invertible(c, z)) return z;
    return std::nullopt;
  }
  for (const auto& b : basis)
    if (is_invertible(c, b)) return b;
  const int p = c.field().p();
  std::uint64_t total = 1;
  for (size_t k = 0; k < basis.size() && total <= limit; ++k) total *= p;
  if (total > limit) return std::nullopt;
  std::optional<GradedNatTrans> found;
  for_each_projective(p, static_cast<int>(basis.size()), [&](const std::vector<Scalar>& v) {
    GradedNatTrans t = prob.combine(v);
    if (!is_invertible(c, t)) return false;
    found = std::move(t);
    return true;
  });
  return found;
}

}  // namespace taucat
