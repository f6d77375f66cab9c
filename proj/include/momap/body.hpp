#ifndef MOMAP_BODY_HPP
#define MOMAP_BODY_HPP

#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "momap/affine.hpp"
#include "momap/exterior.hpp"
#include "momap/poincare.hpp"

namespace momap {

enum class BumpProfile {
  quartic,  // rho0 (1 - (r/R)^2)^4, C^3 at the support boundary (default)
  cubic,    // rho0 (1 - (r/R)^2)^3, C^2 at the support boundary
};

/// World tube of compact spatial support: spatial distance from the line
/// {center + tau u} at most radius, measured in the u rest frame.
struct SupportTube {
  FourVector u;
  Event center;
  double radius = 0;
};

/// Dust with uniform four-velocity u and a radial bump density in its own
/// rest frame: T^{ab}(x) = rho(||Pi_u(x - center)||) u^a u^b.  The density is
/// constant along u, so d_a T^{ab} = 0 identically.
struct DustBlob {
  FourVector u;
  Event center;
  double radius;
  double rho0;
  BumpProfile profile;

  DustBlob(FourVector velocity, Event center_event, double support_radius,
           double central_density, BumpProfile bump = BumpProfile::quartic);

  double density_at(const Event& x) const;
  Matrix4 stress_at(const Event& x) const;
  SupportTube tube() const { return {u, center, radius}; }
};

struct Particle {
  double mass;
  FourVector u;
  Event x0;  // position at worldline parameter 0

  Particle(double m, FourVector velocity, Event position);
};

struct ParticleSwarm {
  std::vector<Particle> particles;
};

/// Arbitrary symmetric T^{ab} sampled through a callback, supported inside
/// the given world tube.
struct SampledField {
  std::function<Matrix4(const Event&)> evaluator;
  SupportTube support;
};

/// A matter source: either a particle swarm (handled by closed-form sums)
/// or a finite superposition of dust blobs and sampled fields.
class Body {
 public:
  Body() = default;

  static Body from_blob(DustBlob b);
  static Body from_swarm(ParticleSwarm s);
  static Body from_field(SampledField f);

  Body& add(DustBlob b);       // throws if this body is a swarm
  Body& add(SampledField f);   // throws if this body is a swarm

  bool is_swarm() const { return swarm_.has_value(); }
  const ParticleSwarm& swarm() const;
  const std::vector<DustBlob>& blobs() const { return blobs_; }
  const std::vector<SampledField>& fields() const { return fields_; }

  /// Continuous pieces with their support tubes (empty for swarms).
  struct Piece {
    std::function<Matrix4(const Event&)> eval;
    SupportTube tube;
  };
  std::vector<Piece> pieces() const;

 private:
  std::vector<DustBlob> blobs_;
  std::vector<SampledField> fields_;
  std::optional<ParticleSwarm> swarm_;
};

/// Contravariant T^{ab} at x (sum over pieces).  Throws for swarms, whose
/// energy-momentum density is distributional.
Matrix4 eval_T(const Body& b, const Event& x);

/// Central-difference divergence d_a T^{ab}; O(h^2) for exact dust bodies.
FourVector divergence_fd(const Body& b, const Event& x, double h);

/// The charge 3-form at x: star of the one-form obtained by inserting the
/// fundamental field of X into the (lowered) energy-momentum tensor.
PForm three_form(const Body& b, const AlgebraElement& x_alg, const Event& o, const Event& x,
                 int orientation = +1);

/// Max-abs of the finite-difference exterior derivative of the charge
/// 3-form; empty for swarms.
std::optional<double> closedness_fd(const Body& b, const AlgebraElement& x_alg, const Event& o,
                                    const Event& x, double h, int orientation = +1);

/// The transformed body: eval_T(result, g.x) = L eval_T(b, x) L^T.
Body pushforward_body(const Body& b, const PoincareElement& g, const Event& o);

/// True iff T(u, u) >= -1e-12 at every sample (u unit timelike).
bool weak_energy_check(const Body& b,
                       std::span<const std::pair<Event, FourVector>> samples);

}  // namespace momap

#endif
