#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace bprm {

// One study subject: survival outcome plus masked exposure covariates.
// Continuous/categorical values are paired with presence masks; an absent
// value contributes nothing to the likelihood.
struct Individual {
    std::string id;
    double y = 0.0;    // observed time, min(event, censoring)
    int delta = 0;     // 1 = event observed, 0 = censored
    double entry = 0.0;  // left-truncation time
    std::vector<double> x_cont;
    std::vector<std::uint8_t> cont_present;
    std::vector<int> x_cat;
    std::vector<std::uint8_t> cat_present;
    bool exposed = true;
};

struct Dataset {
    std::vector<Individual> individuals;
    int K = 0;  // continuous covariates
    int J = 0;  // categorical covariates
    std::vector<int> modality_counts;  // length J

    int n() const { return static_cast<int>(individuals.size()); }
};

// Cluster-specific parameters: excess risk plus the exposure profile.
struct ClusterParams {
    double beta = 0.0;                       // excess hazard ratio coefficient, >= -1
    std::vector<double> mu;                  // log-scale means, length K
    std::vector<double> sigma;               // log-scale SDs, length K, > 0
    std::vector<std::vector<double>> p;      // categorical probabilities, p[j] has length M_j
};

// Shared hyperparameters of the hazard and assignment sub-models. The
// sampler works on the reparameterized (xi_tilde, nu_prime) scale.
struct GlobalParams {
    double alpha = 1.0;     // DP concentration, > 0
    double xi_tilde = 1.0;  // > 0
    double nu_prime = 1.0;  // > 0
    double epsilon = 1e-24; // fixed scaling constant

    double xi() const { return epsilon * xi_tilde; }
    double nu() const { return nu_prime + 1.0; }
};

struct PriorConfig {
    double alpha_shape = 2.0;
    double alpha_rate = 1.0;
    std::vector<double> mu_mean;  // length K, or length 1 applied to all, or empty = 0
    std::vector<double> mu_sd;    // same convention, empty = 10
    double sigma_shape = 0.001;   // Gamma prior on the precision 1/sigma^2
    double sigma_rate = 0.001;
    double dirichlet_conc = 0.5;
    double xi_shape = 1.0;
    double xi_rate = 1.0;
    double nu_shape = 0.001;
    double nu_rate = 0.001;
    double pert_min = -1.0;
    double pert_mode = 0.0;
    double pert_max = 15.0;
    double epsilon = 1e-24;

    double mu_mean_for(int k) const {
        if (mu_mean.empty()) return 0.0;
        return mu_mean.size() == 1 ? mu_mean[0] : mu_mean[static_cast<std::size_t>(k)];
    }
    double mu_sd_for(int k) const {
        if (mu_sd.empty()) return 10.0;
        return mu_sd.size() == 1 ? mu_sd[0] : mu_sd[static_cast<std::size_t>(k)];
    }
};

// Random-walk proposal scales tuned during the adaptive phase. Scales are
// per-temperature state and never travel with exchanged chain states.
struct ProposalScales {
    double alpha = 1.0;
    double xi_tilde = 1.0;
    double nu_prime = 0.5;
    double beta = 0.5;
};

// Full state of one tempered chain. Allocation index -1 marks individuals
// pinned to the reserved zero-risk cluster (never DP-allocated).
struct ChainState {
    std::vector<int> alloc;                  // length n
    std::vector<double> V;                   // stick variables, length C*
    std::vector<double> phi;                 // weights derived from V
    std::vector<double> u;                   // slice variables, length n (0 where unused)
    std::vector<ClusterParams> clusters;     // length C*
    std::optional<ClusterParams> structural; // reserved cluster, beta fixed at 0
    GlobalParams globals;
    ProposalScales scales;
    double temperature = 1.0;

    int n_represented() const { return static_cast<int>(clusters.size()); }
};

// phi_1 = V_1, phi_c = V_c prod_{l<c}(1 - V_l).
inline std::vector<double> stick_weights(const std::vector<double>& V) {
    std::vector<double> phi(V.size());
    double remaining = 1.0;
    for (std::size_t c = 0; c < V.size(); ++c) {
        phi[c] = V[c] * remaining;
        remaining *= 1.0 - V[c];
    }
    return phi;
}

inline double stick_tail(const std::vector<double>& V) {
    double remaining = 1.0;
    for (double v : V) remaining *= 1.0 - v;
    return remaining;
}

}  // namespace bprm
