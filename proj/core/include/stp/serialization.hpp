#pragma once

// JSON documents for tensors, vertex sets, and bound reports. Writers emit
// canonical text: fixed key order, exact rational tokens for every number
// that must round-trip, decimal approximations and factored forms only as
// annotations. Readers accept exactly the written grammar, rebuild the
// exact values, and name the offending field on failure, so
// read(write(x)) == x for all three document kinds.

#include "stp/bounds.hpp"
#include "stp/enumeration.hpp"
#include "stp/tensor.hpp"

#include <stdexcept>
#include <string>

namespace stp {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string write_tensor(const StochasticTensor& t);
StochasticTensor read_tensor(const std::string& text);

std::string write_vertex_set(const VertexSet& set);
VertexSet read_vertex_set(const std::string& text);

std::string write_bound_report(const BoundReport& report);
BoundReport read_bound_report(const std::string& text);

// File helpers. load_tensor_file throws ParseError when the file cannot be
// read or parsed; save_text_file throws std::runtime_error on write
// failure.
StochasticTensor load_tensor_file(const std::string& path);
void save_text_file(const std::string& path, const std::string& text);

}  // namespace stp
