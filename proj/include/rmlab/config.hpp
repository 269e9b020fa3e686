#pragma once
#include <cstdint>
#include <string>
#include <vector>

#include "rmlab/types.hpp"

namespace rmlab::cli {

enum class OutputFormat { Csv, Json };

struct RunConfig {
    PotentialParams potential;

    // energy sweep: explicit list wins over min/max/count
    double e_min = 0.2;
    double e_max = 8.0;
    int e_count = 50;
    std::vector<double> e_list;

    std::vector<double> theta_list = {0.5, 0.6, 0.7};
    GridSpec grid;                 // CSM / quadrature box
    SearchBox box{0.02, 4.0, -2.0, -0.01, 12, 256}; // k-plane pole search
    int transfer_cells = 32768;    // transfer-matrix oracle resolution
    std::vector<double> k_cutoffs = {5.0, 10.0, 20.0};
    int quadrature_points = 900;  // completeness x-quadrature intervals

    OutputFormat format = OutputFormat::Csv;
    std::string output_path;
    std::uint64_t seed = 0; // reserved for stochastic fit-initializer retries
    bool verbose = false;

    std::vector<double> energies() const;
};

// Flat key-per-line config ("potential.u0 = 2.0", '#' comments). Unknown
// keys are rejected; module preconditions are re-validated here.
RunConfig load_config(const std::string& path);

} // namespace rmlab::cli
