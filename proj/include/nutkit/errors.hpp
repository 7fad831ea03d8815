#pragma once

#include <stdexcept>
#include <string>

namespace nutkit {

enum class errc {
  // adjacency-list parsing
  malformed_list,
  asymmetric_list,
  vertex_out_of_range,
  duplicate_neighbor,
  // graph6
  bad_header,
  trailing_bits,
  length_mismatch,
  // constructors
  k_too_small,
  odd_order,
  // linear algebra
  non_square,
  dimension_mismatch,
  // nut analysis
  not_a_nut,
  isolated_pivot,
  // symmetry
  not_plus_minus_one,
  odd_degree,
  // enumeration / catalog
  inadmissible_spec,
  inadmissible_pair,
  insufficient_seeds,
  exclusion_unverified,
  catalog_corrupt,
  budget_exceeded,
};

class error : public std::runtime_error {
public:
  error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

} // namespace nutkit
