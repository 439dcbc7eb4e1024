#include "qdc/photonic_io.hpp"

#include <fstream>
#include <stdexcept>

#include "json.hpp"

namespace qdc {

namespace {

using nlohmann::json;

json element_to_json(const NetworkElement& e) {
  if (const auto* c = std::get_if<Coupler>(&e)) {
    return json{{"type", "coupler"},
                {"modes", {c->mode_a, c->mode_b}},
                {"reflectivity", c->reflectivity}};
  }
  const auto& p = std::get<PhaseShifter>(e);
  return json{{"type", "phase"}, {"mode", p.mode}, {"theta", p.theta}};
}

NetworkElement element_from_json(const json& j) {
  const std::string type = j.at("type").get<std::string>();
  if (type == "coupler") {
    const auto& modes = j.at("modes");
    if (!modes.is_array() || modes.size() != 2)
      throw std::invalid_argument("coupler element needs a two-entry modes array");
    return Coupler{modes[0].get<int>(), modes[1].get<int>(),
                   j.at("reflectivity").get<double>()};
  }
  if (type == "phase") {
    return PhaseShifter{j.at("mode").get<int>(), j.at("theta").get<double>()};
  }
  throw std::invalid_argument("unknown network element type: " + type);
}

}  // namespace

std::string network_to_json(const ModeNetwork& network) {
  json j;
  j["nModes"] = network.n_modes;
  j["elements"] = json::array();
  for (const auto& e : network.elements) j["elements"].push_back(element_to_json(e));
  return j.dump(2) + "\n";
}

ModeNetwork network_from_json(const std::string& text) {
  json j = json::parse(text);
  ModeNetwork net;
  net.n_modes = j.at("nModes").get<int>();
  for (const auto& ej : j.at("elements")) net.elements.push_back(element_from_json(ej));
  // Surface bad indices and reflectivities immediately.
  transfer_matrix(net);
  return net;
}

void save_network(const ModeNetwork& network, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << network_to_json(network);
}

ModeNetwork load_network(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open for reading: " + path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return network_from_json(text);
}

}  // namespace qdc
