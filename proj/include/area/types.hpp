#pragma once

#include <Eigen/Dense>

#include <stdexcept>
#include <string>
#include <vector>

namespace area {

// Objective and decision vectors are plain dense Eigen vectors so that all
// distance and normalisation arithmetic stays expression-friendly.
using ObjectiveVector = Eigen::VectorXd;
using DecisionVector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

// A population member: decision vector, its (always up-to-date) objective
// vector and the index of the reference point it currently tracks.
struct Individual {
    DecisionVector x;
    ObjectiveVector f;
    int target = -1;
};

using Population = std::vector<Individual>;

// Componentwise best/worst objective values used for normalisation.
struct IdealPoints {
    ObjectiveVector ideal;
    ObjectiveVector worst;

    int objectives() const { return static_cast<int>(ideal.size()); }
};

// Invalid experiment/algorithm configuration (CLI exit code 2).
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Missing or malformed bundled data, e.g. a reference front file.
struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace area
