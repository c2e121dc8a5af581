#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace mengerian {

struct VerificationResult {
  bool valid = true;
  std::size_t certificates_checked = 0;
  std::vector<std::string> messages;  // one per certificate, prefixed ok/FAIL
};

/// Re-checks every refutation certificate in a decide/check/survey JSON
/// document from scratch: the hypergraph is rebuilt by brute force from the
/// embedded graph, and each witness (non-TU submatrix, fractional vertex,
/// failing minor, power-equality monomial, MFMC cost) is recomputed with
/// routines independent of the ones that produced it.
VerificationResult verify_certificates(const nlohmann::json& document);

}  // namespace mengerian
