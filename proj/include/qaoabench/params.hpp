#pragma once

#include <string>
#include <vector>

namespace qaoabench {

// The 2p variational angles (radians). Layer 1 acts first. No range
// restriction is enforced: non-integer spectra break the 2pi periodicity in
// gamma, so folding into canonical ranges is a separate, explicit operation.
struct ParamVector {
  std::vector<double> gammas;
  std::vector<double> betas;

  int p() const { return static_cast<int>(gammas.size()); }
  bool consistent() const { return gammas.size() == betas.size(); }

  static ParamVector zeros(int p);
  // Previous optimum extended by one zero layer.
  ParamVector extended_by_zero_layer() const;
};

// Folds gamma into [0, 2pi) and beta into [0, pi). Only meaningful for
// integer-spectrum instances, where both foldings leave the state's
// measures unchanged.
ParamVector canonicalized(const ParamVector& params);

// JSON arrays "gammas"/"betas", full double precision.
std::string params_to_json(const ParamVector& params);
ParamVector params_from_json(const std::string& text);

}  // namespace qaoabench
