#pragma once

// Projective resolutions and Ext^1 for representations of acyclic quivers.

#include <memory>
#include <vector>

#include "perihall/repcat/rep.hpp"

namespace perihall::repcat {

// 0 -> p1 --iota--> p0 --pi--> x -> 0.  p0 = sum of P_v over p0_tops (in that
// order), likewise p1.  Minimal and deterministic.
struct ProjectiveResolution {
  Rep x;
  Rep p0, p1;
  RepMap iota, pi;
  std::vector<std::size_t> p0_tops, p1_tops;
};

ProjectiveResolution proj_resolution(const Rep& x);

// Hom(P1, y) modulo the image of Hom(P0, y), for the canonical resolution of x.
class ExtSpace {
 public:
  ExtSpace(const Rep& x, const Rep& y);

  const Rep& source() const { return res_.x; }
  const Rep& target() const { return y_; }
  const ProjectiveResolution& resolution() const { return res_; }
  std::size_t dim() const { return free_.size(); }

  // Coordinates of the class of a cocycle P1 -> y.
  std::vector<Elem> coordinates(const RepMap& cocycle) const;
  // Canonical representative of the class with the given coordinates.
  RepMap representative(std::span<const Elem> coords) const;

 private:
  ProjectiveResolution res_;
  Rep y_;
  std::vector<RepMap> h1_;         // basis of Hom(P1, y)
  std::vector<std::vector<Elem>> h1_flat_;
  ffla::RowSpace boundaries_;      // image of Hom(P0, y), in h1 coordinates
  std::vector<std::size_t> free_;  // complement coordinates
};

class ExtClass {
 public:
  ExtClass(std::shared_ptr<const ExtSpace> space, std::vector<Elem> coords);

  const Rep& source() const { return space_->source(); }
  const Rep& target() const { return space_->target(); }
  const ExtSpace& space() const { return *space_; }
  const std::vector<Elem>& coordinates() const { return coords_; }
  RepMap cocycle() const { return space_->representative(coords_); }
  bool is_zero() const;
  ExtClass scaled(Elem s) const;
  ExtClass operator+(const ExtClass& o) const;
  bool operator==(const ExtClass& o) const { return coords_ == o.coords_; }

 private:
  std::shared_ptr<const ExtSpace> space_;
  std::vector<Elem> coords_;
};

std::vector<ExtClass> ext1_basis(const Rep& x, const Rep& y);
std::size_t ext1_dim(const Rep& x, const Rep& y);
// The class with representative cocycle P1 -> y.
ExtClass ext_class_of(std::shared_ptr<const ExtSpace> space, const RepMap& cocycle);

enum class TransportSide { Pullback, Pushforward };

// Pullback along f: x' -> source(e), or pushforward along f: target(e) -> y'.
ExtClass ext_transport(const ExtClass& e, const RepMap& f, TransportSide side);

// 0 -> target(e) --inclusion--> middle --projection--> source(e) -> 0.
struct Extension {
  Rep middle;
  RepMap inclusion, projection;
};
Extension extension_total(const ExtClass& e);
// Connecting class of an exact sequence 0 -> y -> e -> x -> 0 in the
// canonical Ext space of (x, y).
ExtClass extension_class(const RepMap& inclusion, const RepMap& projection);

}  // namespace perihall::repcat
