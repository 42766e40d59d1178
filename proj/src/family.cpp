#include "trirain/family.hpp"

#include <algorithm>

namespace trirain {

Edge Edge::of(int a, int b) {
  if (a == b) throw FamilyError("edge endpoints coincide: " + std::to_string(a));
  return a < b ? Edge{a, b} : Edge{b, a};
}

Triangle Triangle::of(int x, int y, int z) {
  std::array<int, 3> v{x, y, z};
  std::sort(v.begin(), v.end());
  if (v[0] == v[1] || v[1] == v[2]) {
    throw FamilyError("triangle vertices not distinct: " + std::to_string(x) + " " +
                      std::to_string(y) + " " + std::to_string(z));
  }
  return Triangle{v[0], v[1], v[2]};
}

int Triangle::opposite(Edge e) const {
  for (int x : vertices()) {
    if (!e.contains(x)) return x;
  }
  return -1;
}

std::string to_string(Mode mode) { return mode == Mode::Set ? "set" : "multiset"; }

TriangleFamily::TriangleFamily(int n, Mode mode) : n_(n), mode_(mode) {
  if (n < 1 || n > kMaxVertices) {
    throw FamilyError("vertex count out of range [1, 64]: " + std::to_string(n));
  }
}

TriangleFamily::TriangleFamily(int n, Mode mode, std::vector<Member> members)
    : TriangleFamily(n, mode) {
  for (const Member& m : members) add(m.tri, m.multiplicity);
}

void TriangleFamily::check(const Member& m) const {
  const Triangle& t = m.tri;
  if (t.a < 0 || !(t.a < t.b && t.b < t.c)) throw FamilyError("triangle not sorted and distinct");
  if (t.c >= n_) {
    throw FamilyError("vertex " + std::to_string(t.c) + " out of range for n = " + std::to_string(n_));
  }
  if (m.multiplicity < 1 || m.multiplicity > 2) {
    throw FamilyError("multiplicity outside {1,2}: " + std::to_string(m.multiplicity));
  }
  if (mode_ == Mode::Set && m.multiplicity != 1) {
    throw FamilyError("multiplicity 2 in set mode");
  }
}

void TriangleFamily::add(Triangle t, int multiplicity) {
  Member m{t, multiplicity};
  check(m);
  if (index_of(t) >= 0) {
    throw FamilyError("duplicate triangle " + std::to_string(t.a) + " " + std::to_string(t.b) + " " +
                      std::to_string(t.c));
  }
  members_.push_back(m);
}

void TriangleFamily::add_copy(Triangle t) {
  int i = index_of(t);
  if (i < 0) {
    add(t, 1);
    return;
  }
  Member bumped{t, members_[i].multiplicity + 1};
  check(bumped);
  members_[i] = bumped;
}

int TriangleFamily::size() const {
  int s = 0;
  for (const Member& m : members_) s += m.multiplicity;
  return s;
}

int TriangleFamily::index_of(Triangle t) const {
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (members_[i].tri == t) return static_cast<int>(i);
  }
  return -1;
}

int TriangleFamily::multiplicity_of(Triangle t) const {
  int i = index_of(t);
  return i < 0 ? 0 : members_[i].multiplicity;
}

std::vector<MemberRef> TriangleFamily::refs() const {
  std::vector<MemberRef> out;
  for (std::size_t i = 0; i < members_.size(); ++i) {
    for (int c = 0; c < members_[i].multiplicity; ++c) out.push_back({static_cast<int>(i), c});
  }
  return out;
}

TriangleFamily TriangleFamily::support() const {
  TriangleFamily out(n_, Mode::Set);
  for (const Member& m : members_) out.add(m.tri, 1);
  return out;
}

TriangleFamily TriangleFamily::normalized() const {
  TriangleFamily out = *this;
  std::sort(out.members_.begin(), out.members_.end(),
            [](const Member& x, const Member& y) { return x.tri < y.tri; });
  return out;
}

}  // namespace trirain
