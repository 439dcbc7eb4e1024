// JSON serialization of mode networks; field names are fixed in
// docs/chip-format.md.

#pragma once

#include <string>

#include "qdc/photonic.hpp"

namespace qdc {

std::string network_to_json(const ModeNetwork& network);
ModeNetwork network_from_json(const std::string& text);

void save_network(const ModeNetwork& network, const std::string& path);
ModeNetwork load_network(const std::string& path);

}  // namespace qdc
