#include "upo/error.hpp"

namespace upo {

const char* errc_name(errc c) noexcept {
  switch (c) {
    case errc::duplicate_vertex_id: return "DuplicateVertexId";
    case errc::duplicate_edge_id: return "DuplicateEdgeId";
    case errc::unknown_endpoint: return "UnknownEndpoint";
    case errc::unknown_vertex: return "UnknownVertex";
    case errc::unknown_edge: return "UnknownEdge";
    case errc::invalid_id: return "InvalidId";
    case errc::cyclic_graph: return "CyclicGraph";
    case errc::missing_edge: return "MissingEdge";
    case errc::duplicate_edge: return "DuplicateEdge";
    case errc::foreign_edge: return "ForeignEdge";
    case errc::rank_out_of_range: return "RankOutOfRange";
    case errc::infeasible_params: return "InfeasibleParams";
    case errc::unknown_fixture: return "UnknownFixture";
    case errc::syntax_error: return "SyntaxError";
    case errc::too_large_for_exhaustive: return "TooLargeForExhaustive";
  }
  return "Error";
}

Error::Error(errc code, const std::string& message)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

void fail(errc code, const std::string& message) { throw Error(code, message); }

}  // namespace upo
