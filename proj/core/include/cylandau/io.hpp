#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "cylandau/config.hpp"
#include "cylandau/gauge.hpp"
#include "cylandau/spectral.hpp"
#include "cylandau/wavefunction.hpp"

namespace cylandau::io {

// JSON formats, shared by the CLI and anything scripting against it:
//
// config     {"B":1.0,"R":1.0,"q":0.0,"rho":0.0,"hbar":1.0,"e":1.0,"m":1.0}
//            (all keys optional, defaults as shown; unknown keys rejected)
// potential  {"zeta":0.5,"lambda":[{"coeff":1.0,"frequency":1,
//            "angular":"sin","poly_degree":0,"gauss_width":0.0,
//            "y_offset":0.0}]}
// loop       {"vertices":[[theta,y],...]}   (theta in the universal cover)
// loop suite {"loops":[<loop>,...]}

CylinderConfig parse_config(const std::string& json_text);
CylinderConfig load_config(const std::string& path);
std::string config_to_json(const CylinderConfig& config);

gauge::GaugePotential parse_potential(const std::string& json_text,
                                      const CylinderConfig& config);
gauge::GaugePotential load_potential(const std::string& path,
                                     const CylinderConfig& config);

gauge::Loop parse_loop(const std::string& json_text);
gauge::Loop load_loop(const std::string& path);
std::vector<gauge::Loop> parse_loop_suite(const std::string& json_text);
std::vector<gauge::Loop> load_loop_suite(const std::string& path);

/// Plot-ready table of a state: one row n,y,re,im per mode sample.
void write_state_table(std::ostream& out, const WaveFunction& psi);

/// Per-mode eigenvalue table: one row mode,level,energy.
void write_eigenvalue_table(std::ostream& out,
                            const spectral::SpectrumResult& result);

}  // namespace cylandau::io
