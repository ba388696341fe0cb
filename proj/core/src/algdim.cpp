#include "ifix/algdim.hpp"

#include <algorithm>
#include <stdexcept>

namespace ifix {

namespace {

void validate(const DimRecord& r) {
  if (r.dim_g <= r.dim_h)
    throw std::invalid_argument(r.ambient + "/" + r.subgroup +
                                ": subgroup dimension must be smaller");
  if (r.dim_class < 0 || r.dim_class_in_h < 0)
    throw std::invalid_argument(r.ambient + "/" + r.subgroup +
                                ": negative class dimension");
  if (r.dim_class_in_h > std::min(r.dim_class, r.dim_h))
    throw std::invalid_argument(
        r.ambient + "/" + r.subgroup +
        ": intersection exceeds class or subgroup dimension");
}

}  // namespace

int fixed_dim(const DimRecord& r) {
  validate(r);
  int d = (r.dim_g - r.dim_h) - r.dim_class + r.dim_class_in_h;
  if (d < 0)
    throw std::invalid_argument(r.ambient + "/" + r.subgroup + "/" + r.cls +
                                ": negative fixed-subvariety dimension");
  return d;
}

Rat gamma(const DimRecord& r) {
  Rat g(fixed_dim(r), r.dim_g - r.dim_h);
  g.canonicalize();
  return g;
}

Rat gamma_max(const std::vector<DimRecord>& rows) {
  if (rows.empty()) throw std::invalid_argument("no dimension records");
  Rat best = gamma(rows.front());
  for (size_t i = 1; i < rows.size(); ++i) best = std::max(best, gamma(rows[i]));
  return best;
}

int torus_involution_dim(int dim_g, int rank) {
  if (dim_g < rank || (dim_g - rank) % 2 != 0)
    throw std::invalid_argument("dimension minus rank must be even");
  return (dim_g - rank) / 2;
}

}  // namespace ifix
