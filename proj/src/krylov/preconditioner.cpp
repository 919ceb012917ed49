#include <string>

#include "zkrylov/krylov.hpp"

namespace zkrylov {

Preconditioner Preconditioner::jacobi(ZVector inverse_diagonal) {
  Preconditioner p;
  p.kind_ = Kind::jacobi;
  p.inv_diag_ = std::move(inverse_diagonal);
  return p;
}

void Preconditioner::apply(const ZVector& in, ZVector& out) const {
  if (kind_ == Kind::identity) {
    zassign(out, in);
    return;
  }
  if (in.size() != inv_diag_.size()) throw DimensionError("preconditioner applied to a vector of the wrong length");
  zassign(out, in);
  zaxmy(inv_diag_, out);
}

Preconditioner build_jacobi(const CsrMatrix& a) {
  if (!a.is_square()) throw DimensionError("Jacobi preconditioner requires a square matrix");
  ZVector inv(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const auto d = a.at(i, i);
    if (!d || (d->re == 0.0 && d->im == 0.0)) throw SingularPreconditionerError(i);
    inv[i] = cdiv(Cplx{1.0, 0.0}, *d);
  }
  return Preconditioner::jacobi(std::move(inv));
}

}  // namespace zkrylov
