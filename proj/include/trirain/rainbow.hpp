#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "trirain/family.hpp"

namespace trirain {

struct EdgeAssignment {
  Edge edge;
  MemberRef owner;

  bool operator==(const EdgeAssignment&) const = default;
};

/// A vertex triple whose three edges are taken from three distinct member
/// copies. Assignments are listed in edge order xy, xz, yz.
struct RainbowCertificate {
  std::array<int, 3> vertices{};
  std::array<EdgeAssignment, 3> assignment{};

  bool operator==(const RainbowCertificate&) const = default;
};

/// Every copy of every member containing `e`, in member order.
std::vector<MemberRef> edge_owners(const TriangleFamily& f, Edge e);

/// Lexicographically least rainbow triple with its lexicographically least
/// assignment, or nullopt when the family is rainbow-free.
std::optional<RainbowCertificate> find_rainbow(const TriangleFamily& f);

bool verify_certificate(const TriangleFamily& f, const RainbowCertificate& c);

/// How many of the member's three edges are owned by some other member copy.
int shared_edge_count(const TriangleFamily& f, MemberRef m);

/// "rainbow x y z" followed by one "edge u v owner i copy c" line per edge.
std::string format_certificate(const RainbowCertificate& c);

}  // namespace trirain
