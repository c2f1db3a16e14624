#include "spline_affine/serialization.hpp"

namespace spline_affine {

nlohmann::json rational_to_json(const Rational& q) {
  return nlohmann::json::array({q.get_num().get_str(), q.get_den().get_str()});
}

Rational rational_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_string() || !j[1].is_string())
    throw Error("rational must be a [numerator, denominator] pair of strings");
  try {
    return make_rational(Integer(j[0].get<std::string>()), Integer(j[1].get<std::string>()));
  } catch (const std::invalid_argument&) {
    throw Error("rational has a non-integer component");
  }
}

nlohmann::json to_json(const PiecewisePoly& p) {
  const std::size_t width = p.degree() + 1;
  nlohmann::json pieces = nlohmann::json::array();
  for (std::size_t i = 0; i < p.piece_count(); ++i) {
    nlohmann::json coeffs = nlohmann::json::array();
    const auto& c = p.piece(i).coeffs();
    for (std::size_t d = 0; d < width; ++d) coeffs.push_back(rational_to_json(d < c.size() ? c[d] : Rational(0)));
    pieces.push_back(std::move(coeffs));
  }
  return {{"level", p.level()}, {"degree", p.degree()}, {"pieces", std::move(pieces)}};
}

PiecewisePoly piecewise_from_json(const nlohmann::json& j) {
  try {
    const auto level = j.at("level").get<unsigned>();
    const auto& pieces = j.at("pieces");
    if (level > kMaxLevel || pieces.size() != (std::size_t{1} << level))
      throw Error("piece count does not match level");
    std::vector<Polynomial> polys;
    polys.reserve(pieces.size());
    for (const auto& piece : pieces) {
      std::vector<Rational> coeffs;
      for (const auto& c : piece) coeffs.push_back(rational_from_json(c));
      polys.emplace_back(std::move(coeffs));
    }
    return PiecewisePoly(level, std::move(polys));
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed piecewise polynomial: ") + e.what());
  }
}

nlohmann::json to_json(const SplineSpec& spec) {
  return {{"m", spec.m}, {"kappa", rational_to_json(spec.kappa)}, {"poly", to_json(spec.poly)}};
}

SplineSpec spline_from_json(const nlohmann::json& j) {
  try {
    return {j.at("m").get<unsigned>(), rational_from_json(j.at("kappa")), piecewise_from_json(j.at("poly"))};
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed spline: ") + e.what());
  }
}

}  // namespace spline_affine
