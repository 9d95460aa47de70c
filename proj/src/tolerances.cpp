#include "morseflow/tolerances.hpp"

#include "morseflow/errors.hpp"

namespace morseflow {

const std::map<std::string, double Tolerances::*>& Tolerances::registry() {
    static const std::map<std::string, double Tolerances::*> reg = {
        {"jacobi_converge", &Tolerances::jacobi_converge},
        {"hermitian_check", &Tolerances::hermitian_check},
        {"cayley_domain", &Tolerances::cayley_domain},
        {"membership_pre", &Tolerances::membership_pre},
        {"membership_post", &Tolerances::membership_post},
        {"random_membership", &Tolerances::random_membership},
        {"nondegenerate_sv", &Tolerances::nondegenerate_sv},
        {"polar_residual", &Tolerances::polar_residual},
        {"grad_critical", &Tolerances::grad_critical},
        {"rank_zero", &Tolerances::rank_zero},
        {"rank_nonzero", &Tolerances::rank_nonzero},
        {"eig_minus_one", &Tolerances::eig_minus_one},
        {"eig_ambiguous", &Tolerances::eig_ambiguous},
        {"hessian_zero", &Tolerances::hessian_zero},
        {"hessian_step", &Tolerances::hessian_step},
        {"cluster_gap", &Tolerances::cluster_gap},
        {"subspace_match", &Tolerances::subspace_match},
        {"sphere_invariant", &Tolerances::sphere_invariant},
    };
    return reg;
}

double Tolerances::get(const std::string& name) const {
    auto it = registry().find(name);
    if (it == registry().end()) throw ParseError("unknown tolerance name '" + name + "'");
    return this->*(it->second);
}

void Tolerances::set(const std::string& name, double value) {
    auto it = registry().find(name);
    if (it == registry().end()) throw ParseError("unknown tolerance name '" + name + "'");
    this->*(it->second) = value;
}

const Tolerances& default_tolerances() {
    static const Tolerances t{};
    return t;
}

}  // namespace morseflow
