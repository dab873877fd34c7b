#include "qfrob/check.hpp"

namespace qfrob {

CheckOutcome check_tensor(std::string name, const Tensor<RationalFunction>& residuals,
                          const IdentityTestConfig& cfg) {
  CheckOutcome out;
  out.name = std::move(name);
  ScanResult scan = scan_zero(residuals.data(), cfg);
  out.verdict = scan.verdict;
  if (scan.witness) {
    out.witness = residuals.unflatten(*scan.witness);
    out.residual = residuals.flat(*scan.witness);
  }
  return out;
}

CheckOutcome check_tensor(std::string name, const Tensor<Polynomial>& residuals,
                          const IdentityTestConfig& cfg) {
  return check_tensor(std::move(name),
                      residuals.map([](const Polynomial& p) { return RationalFunction(p); }), cfg);
}

}  // namespace qfrob
