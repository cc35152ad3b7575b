#include "qaoabench/params.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <json.hpp>

namespace qaoabench {

namespace {

double fold(double x, double period) {
  double r = std::fmod(x, period);
  if (r < 0.0) r += period;
  return r;
}

}  // namespace

ParamVector ParamVector::zeros(int p) {
  if (p < 0) throw std::invalid_argument("negative step count");
  ParamVector v;
  v.gammas.assign(static_cast<std::size_t>(p), 0.0);
  v.betas.assign(static_cast<std::size_t>(p), 0.0);
  return v;
}

ParamVector ParamVector::extended_by_zero_layer() const {
  ParamVector v = *this;
  v.gammas.push_back(0.0);
  v.betas.push_back(0.0);
  return v;
}

ParamVector canonicalized(const ParamVector& params) {
  ParamVector v = params;
  for (double& g : v.gammas) g = fold(g, 2.0 * std::numbers::pi);
  for (double& b : v.betas) b = fold(b, std::numbers::pi);
  return v;
}

std::string params_to_json(const ParamVector& params) {
  nlohmann::json j;
  j["gammas"] = params.gammas;
  j["betas"] = params.betas;
  return j.dump();
}

ParamVector params_from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  ParamVector v;
  v.gammas = j.at("gammas").get<std::vector<double>>();
  v.betas = j.at("betas").get<std::vector<double>>();
  if (!v.consistent()) {
    throw std::invalid_argument("gammas and betas differ in length");
  }
  return v;
}

}  // namespace qaoabench
