#pragma once

#include <cstddef>
#include <vector>

namespace prabhakar::detail {

struct GaussLegendre {
  std::vector<double> x;  // ascending on (-1, 1)
  std::vector<double> w;
};

const GaussLegendre& gauss_legendre(std::size_t n);

struct ZolotarevTable {
  double alpha = 0.0;
  std::size_t nodes = 0;
  std::vector<double> w;  // Gauss-Legendre weights mapped to (0, pi)
  std::vector<double> a;  // A(phi_j)
  double validation_error = 0.0;
  bool adaptive = false;  // fixed rule failed validation; integrate adaptively
};

const ZolotarevTable& zolotarev_table(double alpha);
double zolotarev_integral_pdf(const ZolotarevTable& t, double x);
double zolotarev_integral_cdf(const ZolotarevTable& t, double x);

}  // namespace prabhakar::detail
