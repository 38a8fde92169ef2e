#pragma once

#include <string>

#include "matopo/complex.hpp"
#include "matopo/nerve.hpp"
#include "matopo/oracle.hpp"
#include "matopo/rrg.hpp"

namespace matopo {

inline constexpr const char* kJsonSchema = "ma-topo/1";

// Versioned JSON snapshots; all deterministic.
std::string complex_to_json(const ProtocolComplex& pc);
std::string simulation_to_json(const SimulationResult& res, const Adversary& adv,
                               const SimulateOptions& opts);

std::string nerve_to_dot(const NerveGraph& ng, const Adversary& adv);
std::string rrg_to_dot(const Rrg& rrg, const Adversary& adv);

}  // namespace matopo
