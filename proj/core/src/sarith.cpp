#include "latred/sarith.hpp"

namespace latred::sarith {

latz::InnerProduct transported(const latz::InnerProduct& s, const Matrix<Rational>& P) {
  return latz::InnerProduct(P * s.gram() * P.transpose());
}

latff::VolumeSpace transported(const latff::VolumeSpace& vs, const Matrix<FqRational>& P) {
  const FqRationalField K{&vs.field()};
  return latff::VolumeSpace(vs.field(), multiply(vs.basis(), inverse(K, P), K.zero()));
}

LogValue loc_logvol(const ZLocSummand& W, const latz::InnerProduct& s, const ZStructure& B) {
  return LogValue::log_of(latz::gram_volume_sq(s, intersect_integral(W, B)), 2);
}

long loc_logvol(const FLocSummand& W, const latff::VolumeSpace& vs, const FStructure& B) {
  return latff::ff_logvol(vs, intersect_integral(W, B));
}

LogValue loc_c(const ZLocSummand& W, const latz::InnerProduct& s, const ZStructure& B) {
  Matrix<Rational> P = lattice_basis(B);
  return latz::c_value(transported(s, P), latz::ZSummand::from_hnf(lattice_summand(W, B, P)));
}

long loc_c(const FLocSummand& W, const latff::VolumeSpace& vs, const FStructure& B) {
  Matrix<FqRational> P = lattice_basis(B);
  return latff::ff_c_value(transported(vs, P), latff::FFSummand::from_hnf(lattice_summand(W, B, P)));
}

}  // namespace latred::sarith
