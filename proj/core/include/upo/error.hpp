#pragma once

#include <stdexcept>
#include <string>

namespace upo {

// Failure codes for library operations. The CLI maps any of these to exit
// code 2; tests match on the code rather than the message text.
enum class errc {
  duplicate_vertex_id,
  duplicate_edge_id,
  unknown_endpoint,
  unknown_vertex,
  unknown_edge,
  invalid_id,
  cyclic_graph,
  missing_edge,
  duplicate_edge,
  foreign_edge,
  rank_out_of_range,
  infeasible_params,
  unknown_fixture,
  syntax_error,
  too_large_for_exhaustive,
};

// Stable PascalCase name, e.g. "DuplicateEdgeId".
const char* errc_name(errc c) noexcept;

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& message);

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] void fail(errc code, const std::string& message);

}  // namespace upo
