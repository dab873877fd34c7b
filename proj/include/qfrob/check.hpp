#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qfrob/identity_test.hpp"
#include "qfrob/rational_function.hpp"
#include "qfrob/tensor.hpp"

namespace qfrob {

// Verdict of one identity check over a tensor of residual components.
struct CheckOutcome {
  std::string name;
  ZeroVerdict verdict = ZeroVerdict::zero;
  // Index tuple (0-based) of the first failing component; empty when the
  // identity holds or the tensor has rank 0.
  std::vector<std::size_t> witness;
  std::optional<RationalFunction> residual;

  bool holds() const { return verdict == ZeroVerdict::zero; }
};

CheckOutcome check_tensor(std::string name, const Tensor<RationalFunction>& residuals,
                          const IdentityTestConfig& cfg);
CheckOutcome check_tensor(std::string name, const Tensor<Polynomial>& residuals,
                          const IdentityTestConfig& cfg);

}  // namespace qfrob
