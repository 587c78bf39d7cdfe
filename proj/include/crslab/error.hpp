#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace crslab {

enum class errc {
  invalid_graph,
  disconnected_graph,
  vertex_set_mismatch,
  unknown_vertex,
  invalid_w,
  vertex_in_w,
  order_cap_exceeded,
  size_overflow,
  index_out_of_range,
  wrong_vertex_set,
  unknown_name,
  invalid_certificate,
  cross_edge_mismatch,
  not_minimal,
  not_member,
  vertex_not_eligible,
  enumeration_cap_exceeded,
  parse_error,
};

constexpr std::string_view to_string(errc code) {
  switch (code) {
    case errc::invalid_graph: return "InvalidGraph";
    case errc::disconnected_graph: return "DisconnectedGraph";
    case errc::vertex_set_mismatch: return "VertexSetMismatch";
    case errc::unknown_vertex: return "UnknownVertex";
    case errc::invalid_w: return "InvalidW";
    case errc::vertex_in_w: return "VertexInW";
    case errc::order_cap_exceeded: return "OrderCapExceeded";
    case errc::size_overflow: return "SizeOverflow";
    case errc::index_out_of_range: return "IndexOutOfRange";
    case errc::wrong_vertex_set: return "WrongVertexSet";
    case errc::unknown_name: return "UnknownName";
    case errc::invalid_certificate: return "InvalidCertificate";
    case errc::cross_edge_mismatch: return "CrossEdgeMismatch";
    case errc::not_minimal: return "NotMinimal";
    case errc::not_member: return "NotMember";
    case errc::vertex_not_eligible: return "VertexNotEligible";
    case errc::enumeration_cap_exceeded: return "EnumerationCapExceeded";
    case errc::parse_error: return "ParseError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

}  // namespace crslab
