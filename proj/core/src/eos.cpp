#include "tigre/eos.hpp"

#include <cmath>

namespace tigre {

double pressure_from_entropy(const EosParams& eos, double rho, double s) {
    if (!(rho > 0.0)) throw std::domain_error("pressure_from_entropy: rho must be positive");
    return eos.kappa * std::pow(rho, eos.gamma) * std::exp(s / eos.c_v);
}

double entropy_from_pressure(const EosParams& eos, double rho, double p) {
    if (!(rho > 0.0)) throw std::domain_error("entropy_from_pressure: rho must be positive");
    if (!(p > 0.0)) throw std::domain_error("entropy_from_pressure: p must be positive");
    return eos.c_v * std::log(p / (eos.kappa * std::pow(rho, eos.gamma)));
}

double pressure_from_energy(const EosParams& eos, double rho, double mom_sq, double E) {
    if (!(rho > 0.0)) throw std::domain_error("pressure_from_energy: rho must be positive");
    return (eos.gamma - 1.0) * (E - 0.5 * mom_sq / rho);
}

double energy_from_pressure(const EosParams& eos, double rho, double mom_sq, double p) {
    if (!(rho > 0.0)) throw std::domain_error("energy_from_pressure: rho must be positive");
    if (!(p > 0.0)) throw std::domain_error("energy_from_pressure: p must be positive");
    return p / (eos.gamma - 1.0) + 0.5 * mom_sq / rho;
}

double sound_speed(const EosParams& eos, double rho, double p) {
    if (!(rho > 0.0) || !(p > 0.0))
        throw std::domain_error("sound_speed: rho and p must be positive");
    return std::sqrt(eos.gamma * p / rho);
}

} // namespace tigre
