#pragma once

#include <complex>
#include <map>
#include <string>

namespace factray::mat {

enum class Kind { PerfectConductor, Dielectric, TransmissiveEnvelope };

enum class Pol { TE, TM }; // relative to the local incidence plane

/// Electromagnetic material. Permittivity (and, for envelopes, linear loss)
/// is tabulated per frequency; queries between tabulated points interpolate
/// linearly in log-frequency.
struct Material {
    Kind kind = Kind::PerfectConductor;
    // frequency Hz -> (eps_re > 0, eps_im >= 0); convention eps = eps_re - j*eps_im
    std::map<double, std::pair<double, double>> eps_by_freq;
    // frequency Hz -> dB/m, transmission bulk loss (envelope only)
    std::map<double, double> loss_by_freq;

    static Material pec() { return Material{}; }
    static Material dielectric(std::map<double, std::pair<double, double>> eps);
    static Material envelope(std::map<double, std::pair<double, double>> eps,
                             std::map<double, double> loss_db_per_m);

    bool transmissive() const { return kind != Kind::PerfectConductor; }
};

/// Complex relative permittivity eps_re - j*eps_im at frequency f.
/// Throws for PEC (callers branch on kind) and for f outside the tabulated range.
std::complex<double> complex_permittivity(const Material& m, double f_hz);

/// Transmission linear loss in dB/m at f (0 for plain dielectrics; their bulk
/// loss comes from the imaginary permittivity instead).
double linear_loss_db_per_m(const Material& m, double f_hz);

/// Named material collection. The built-in library carries "metal", "wood",
/// "envelope_default", "envelope_tuned" and "concrete".
class MaterialLibrary {
  public:
    MaterialLibrary() = default;

    void set(const std::string& id, Material m) { materials_[id] = std::move(m); }
    const Material& get(const std::string& id) const;
    bool has(const std::string& id) const { return materials_.count(id) > 0; }
    const std::map<std::string, Material>& all() const { return materials_; }

    static MaterialLibrary builtin();

  private:
    std::map<std::string, Material> materials_;
};

/// Library file: {"<id>": {"kind": "pec"|"dielectric"|"envelope",
///                         "eps": {"2e9": [re, im], ...},
///                         "loss_db_per_m": {"2e9": 0.4, ...}}}
MaterialLibrary load_material_library_json(const std::string& text);
MaterialLibrary load_material_library_file(const std::string& path);
std::string material_library_to_json(const MaterialLibrary& lib);

} // namespace factray::mat
