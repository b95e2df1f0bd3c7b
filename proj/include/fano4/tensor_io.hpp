// Tensor files: a JSON document
//   {"field": "Q" | "Q(zeta12)", "theta": [4][5][5]}
// whose entries are rational strings "a/b" or, over Q(zeta12), arrays of four
// rational strings (coordinates on 1, z, z^2, z^3).
#pragma once

#include <stdexcept>
#include <string>

#include "fano4/multilinear.hpp"

namespace fano {

struct TensorFileError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

ThetaTensor parse_theta(const std::string& text);
ThetaTensor read_theta_file(const std::string& path);
std::string format_theta(const ThetaTensor& t);

}  // namespace fano
