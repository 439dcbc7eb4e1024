#pragma once

namespace qdc {

// Every parallel kernel has a serial twin producing bit-identical results;
// tests compare the two and benchmarks time them.
enum class Execution { Serial, OpenMp };

}  // namespace qdc
