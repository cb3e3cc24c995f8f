#include "semicg/certificate.hpp"

namespace semicg {

ConvergenceCertificate convergence_certificate(const DenseMatrix& a) {
  if (a.rows() != a.cols())
    throw std::invalid_argument("convergence_certificate: matrix must be square");
  const DenseMatrix inv = dense_inverse(a);
  const SpectrumSummary spectrum = symmetric_part_spectrum(inv);

  ConvergenceCertificate cert;
  cert.lambda_min_H = spectrum.lambda_min_sym;
  cert.rho_S = spectrum.rho_skew;
  cert.condition_holds = spectrum.lambda_min_sym > 0.0 && spectrum.lambda_min_sym > spectrum.rho_skew;
  if (cert.condition_holds) {
    cert.contraction_bound =
        1.0 - (spectrum.lambda_min_sym * spectrum.lambda_min_sym - spectrum.rho_skew * spectrum.rho_skew) /
                  (spectrum.lambda_min_sym * spectrum.lambda_max_sym);
  }
  return cert;
}

}  // namespace semicg
