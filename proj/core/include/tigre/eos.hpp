#ifndef TIGRE_EOS_HPP
#define TIGRE_EOS_HPP

#include <stdexcept>

namespace tigre {

// Ideal-gas closure p = kappa * rho^gamma * exp(s/c_v), equivalently
// p = (gamma-1)(E - |m|^2/(2 rho)).
struct EosParams {
    double gamma = 1.4;
    double c_v = 2.5;
    double kappa = 1.0;

    void validate() const {
        if (!(gamma > 1.0)) throw std::domain_error("EosParams: gamma must exceed 1");
        if (!(c_v > 0.0)) throw std::domain_error("EosParams: c_v must be positive");
        if (!(kappa > 0.0)) throw std::domain_error("EosParams: kappa must be positive");
    }
};

double pressure_from_entropy(const EosParams& eos, double rho, double s);
double entropy_from_pressure(const EosParams& eos, double rho, double p);

// Negative pressure is returned, not thrown; the stepper monitors positivity.
double pressure_from_energy(const EosParams& eos, double rho, double mom_sq, double E);
double energy_from_pressure(const EosParams& eos, double rho, double mom_sq, double p);

double sound_speed(const EosParams& eos, double rho, double p);

} // namespace tigre

#endif
