#include "momap/verify.hpp"

#include <cmath>
#include <random>

#include "momap/centers.hpp"
#include "momap/charges.hpp"
#include "momap/errors.hpp"
#include "momap/exterior.hpp"

namespace momap {

namespace {

double uniform(std::mt19937_64& rng, double lo = -1.0, double hi = 1.0) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

FourVector rnd_vector(std::mt19937_64& rng, double s = 1.0) {
  return {uniform(rng) * s, uniform(rng) * s, uniform(rng) * s, uniform(rng) * s};
}

Event rnd_event(std::mt19937_64& rng, double s = 1.0) {
  return {uniform(rng) * s, uniform(rng) * s, uniform(rng) * s, uniform(rng) * s};
}

Bivector rnd_bivector(std::mt19937_64& rng, double s = 1.0) {
  Bivector b;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      const double v = uniform(rng) * s;
      b(i, j) = v;
      b(j, i) = -v;
    }
  return b;
}

AlgebraElement rnd_algebra(std::mt19937_64& rng, double s = 1.0) {
  return AlgebraElement(rnd_vector(rng, s), rnd_bivector(rng, s));
}

PoincareElement rnd_poincare(std::mt19937_64& rng, double s = 0.7) {
  const PoincareElement h = exp_algebra(rnd_algebra(rng, s), 1.0);
  return PoincareElement{h.a + rnd_vector(rng, s), h.L};
}

FourVector rnd_observer(std::mt19937_64& rng, double vmax = 0.8) {
  FourVector n{0, uniform(rng), uniform(rng), uniform(rng)};
  const double len = std::sqrt(n[1] * n[1] + n[2] * n[2] + n[3] * n[3]);
  const double speed = std::abs(uniform(rng)) * vmax;
  const double b = len > 1e-12 ? speed / len : 0.0;
  const double gamma = 1.0 / std::sqrt(1.0 - (b * len) * (b * len));
  return {gamma, gamma * b * n[1], gamma * b * n[2], gamma * b * n[3]};
}

PForm rnd_form(std::mt19937_64& rng, int dim, int grade) {
  PForm f(dim, grade);
  if (grade == 0) {
    f.raw(0) = uniform(rng);
    return f;
  }
  std::vector<int> idx(static_cast<std::size_t>(grade));
  for (int k = 0; k < grade; ++k) idx[static_cast<std::size_t>(k)] = k;
  while (true) {
    f.set_component(idx, uniform(rng));
    int k = grade - 1;
    while (k >= 0 && idx[static_cast<std::size_t>(k)] == dim - grade + k) --k;
    if (k < 0) break;
    ++idx[static_cast<std::size_t>(k)];
    for (int m = k + 1; m < grade; ++m)
      idx[static_cast<std::size_t>(m)] = idx[static_cast<std::size_t>(m - 1)] + 1;
  }
  return f;
}

struct Recorder {
  std::vector<CheckResult>& out;
  std::string suite;

  void add(const std::string& name, const std::string& law, double residual, double tolerance) {
    out.push_back({suite, name, law, residual, tolerance, residual <= tolerance});
  }
};

FourVector boosted(double vx, double vy = 0) {
  const double g = 1.0 / std::sqrt(1.0 - vx * vx - vy * vy);
  return {g, g * vx, g * vy, 0};
}

Body two_particle_body() {
  ParticleSwarm s;
  s.particles.emplace_back(1.0, boosted(0.6), Event{0, 0, 1, 0});
  s.particles.emplace_back(1.0, boosted(-0.6), Event{0, 0, -1, 0});
  return Body::from_swarm(std::move(s));
}

Body small_blob_body() {
  return Body::from_blob(DustBlob(boosted(0.4, 0.1), Event{0, 0.2, -0.1, 0.1}, 0.8, 1.0));
}

const Hyperplane rest_slice{FourVector{1, 0, 0, 0}, Event{}, 0.0};

void verify_exterior(std::vector<CheckResult>& out, std::uint64_t seed) {
  Recorder rec{out, "exterior"};
  std::mt19937_64 rng(seed ^ 0x0e57u);
  const Metric g = Metric::minkowski(4);
  const PForm eps = volume_form(g, +1);

  {  // basis monomials, exact integer arithmetic
    double worst = 0.0;
    std::vector<std::vector<int>> combos[5];
    for (int p = 0; p <= 4; ++p) {
      std::vector<int> idx(static_cast<std::size_t>(p));
      for (int k = 0; k < p; ++k) idx[static_cast<std::size_t>(k)] = k;
      while (true) {
        combos[p].push_back(idx);
        int k = p - 1;
        while (k >= 0 && idx[static_cast<std::size_t>(k)] == 4 - p + k) --k;
        if (k < 0) break;
        ++idx[static_cast<std::size_t>(k)];
        for (int m = k + 1; m < p; ++m)
          idx[static_cast<std::size_t>(m)] = idx[static_cast<std::size_t>(m - 1)] + 1;
      }
      for (const auto& ia : combos[p])
        for (const auto& ib : combos[p]) {
          const PForm a = PForm::basis_monomial(4, ia);
          const PForm b = PForm::basis_monomial(4, ib);
          const PForm lhs = wedge(a, hodge(b, g, eps));
          const PForm rhs = eps * inner_norm(a, b, g);
          worst = std::max(worst, (lhs - rhs).max_abs());
        }
    }
    rec.add("hodge-pairing-basis", "a ^ star(b) = <a,b>_norm eps on all basis monomials", worst,
            0.0);
  }
  {
    double worst = 0.0;
    for (int p = 0; p <= 4; ++p)
      for (int rep = 0; rep < 200; ++rep) {
        const PForm a = rnd_form(rng, 4, p);
        const double sign = ((p * (4 - p) + g.n_minus()) % 2 == 0) ? 1.0 : -1.0;
        worst = std::max(worst, (hodge(hodge(a, g, eps), g, eps) - a * sign).max_abs());
      }
    rec.add("star-squared", "star(star(a)) = (-1)^(p(n-p)+n_minus) a", worst, 1e-12);
  }
  {
    double worst = 0.0;
    for (int p = 0; p <= 4; ++p)
      for (int rep = 0; rep < 50; ++rep) {
        const PForm a = rnd_form(rng, 4, p);
        const PForm b = rnd_form(rng, 4, 4 - p);
        const double sign = ((p * (4 - p)) % 2 == 0) ? 1.0 : -1.0;
        worst = std::max(worst, std::abs(inner_norm(a, hodge(b, g, eps), g) -
                                         sign * inner_norm(hodge(a, g, eps), b, g)));
      }
    rec.add("star-adjoint", "<a, star b> = (-1)^(p(n-p)) <star a, b>", worst, 1e-12);
  }
  {
    double worst_sym = 0.0;
    double worst_assoc = 0.0;
    for (int rep = 0; rep < 60; ++rep) {
      const int p = static_cast<int>(rng() % 3);
      const int q = static_cast<int>(rng() % 3);
      const PForm a = rnd_form(rng, 4, p);
      const PForm b = rnd_form(rng, 4, q);
      const PForm c = rnd_form(rng, 4, 1);
      const double sign = ((p * q) % 2 == 0) ? 1.0 : -1.0;
      worst_sym = std::max(worst_sym, (wedge(a, b) - wedge(b, a) * sign).max_abs());
      worst_assoc =
          std::max(worst_assoc, (wedge(wedge(a, b), c) - wedge(a, wedge(b, c))).max_abs());
    }
    rec.add("wedge-graded-symmetry", "a ^ b = (-1)^(pq) b ^ a", worst_sym, 1e-12);
    rec.add("wedge-associativity", "(a ^ b) ^ c = a ^ (b ^ c)", worst_assoc, 1e-12);
  }
  {
    double worst = 0.0;
    for (int rep = 0; rep < 100; ++rep) {
      const int p = static_cast<int>(rng() % 4);
      const PForm a = rnd_form(rng, 4, p);
      const FourVector v = rnd_vector(rng);
      const PForm lhs = insert(to_vec(v), hodge(a, g, eps));
      const PForm rhs = hodge(wedge(a, lower(to_vec(v), g)), g, eps);
      worst = std::max(worst, (lhs - rhs).max_abs());
    }
    rec.add("insertion-hodge", "i_v star(a) = star(a ^ flat(v))", worst, 1e-12);
  }
}

void verify_poincare(std::vector<CheckResult>& out, std::uint64_t seed) {
  Recorder rec{out, "poincare"};
  std::mt19937_64 rng(seed ^ 0x90c4u);

  {  // affine substrate
    double worst = 0.0;
    for (int rep = 0; rep < 100; ++rep) {
      const Event p = rnd_event(rng, 5.0);
      const Event q = rnd_event(rng, 5.0);
      const Event o = rnd_event(rng, 5.0);
      worst = std::max(worst,
                       max_abs(point_diff(p, o) + point_diff(o, q) - point_diff(p, q)));
      worst = std::max(worst, max_abs(point_diff(point_plus(p, point_diff(q, o)),
                                                 point_plus(q, point_diff(p, o)))));
    }
    rec.add("difference-map", "(p-o)+(o-q) = p-q and p+(q-o) = q+(p-o)", worst, 1e-12);
  }
  {
    double worst = 0.0;
    for (int rep = 0; rep < 50; ++rep) {
      const FourVector u = rnd_observer(rng);
      const auto f = hyperplane_triad(Hyperplane(u, rnd_event(rng), uniform(rng)));
      for (int i = 0; i < 3; ++i) {
        worst = std::max(worst, std::abs(mink_dot(u, f[static_cast<std::size_t>(i)])));
        for (int j = 0; j < 3; ++j)
          worst = std::max(worst, std::abs(mink_dot(f[static_cast<std::size_t>(i)],
                                                    f[static_cast<std::size_t>(j)]) -
                                           (i == j ? -1.0 : 0.0)));
      }
    }
    rec.add("slice-triads", "eta(f_i, f_j) = -delta_ij, eta(u, f_i) = 0", worst, 1e-12);
  }
  {  // basis brackets, exact
    auto e = [](int a) {
      FourVector v;
      v[a] = 1.0;
      return AlgebraElement(v, Bivector{});
    };
    auto m = [](int a, int b) {
      Bivector biv;
      biv(a, b) = 1.0;
      biv(b, a) = -1.0;
      return AlgebraElement(FourVector{}, biv);
    };
    double worst = 0.0;
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        for (int c = b + 1; c < 4; ++c) {
          const AlgebraElement got = bracket(e(a), m(b, c));
          FourVector expect;
          if (a == b) expect = expect + e(c).v * kEta[static_cast<std::size_t>(a)];
          if (a == c) expect = expect - e(b).v * kEta[static_cast<std::size_t>(a)];
          worst = std::max({worst, max_abs(got.v - expect), max_abs(got.M)});
        }
    worst = std::max(worst, max_abs(bracket(e(0), m(0, 1)).v - e(1).v));
    rec.add("basis-brackets", "[e_a, m_bc] = eta_ab e_c - eta_ac e_b (spot: [e_0,m_01] = e_1)",
            worst, 0.0);
  }
  {
    double worst = 0.0;
    for (int rep = 0; rep < 500; ++rep) {
      const AlgebraElement x = rnd_algebra(rng);
      const AlgebraElement y = rnd_algebra(rng);
      const AlgebraElement z = rnd_algebra(rng);
      const AlgebraElement t1 = bracket(x, bracket(y, z));
      const AlgebraElement t2 = bracket(y, bracket(z, x));
      const AlgebraElement t3 = bracket(z, bracket(x, y));
      worst = std::max({worst, max_abs(t1.v + t2.v + t3.v), max_abs(t1.M + t2.M + t3.M)});
    }
    rec.add("jacobi", "[x,[y,z]] + [y,[z,x]] + [z,[x,y]] = 0", worst, 1e-11);
  }
  {
    double worst_ad = 0.0;
    double worst_coad = 0.0;
    double worst_pair = 0.0;
    for (int rep = 0; rep < 100; ++rep) {
      const PoincareElement g1 = rnd_poincare(rng);
      const PoincareElement g2 = rnd_poincare(rng);
      const AlgebraElement x = rnd_algebra(rng);
      const DualElement d(rnd_vector(rng), rnd_bivector(rng));
      const AlgebraElement a1 = Ad(compose(g1, g2), x);
      const AlgebraElement a2 = Ad(g1, Ad(g2, x));
      worst_ad = std::max({worst_ad, max_abs(a1.v - a2.v), max_abs(a1.M - a2.M)});
      const DualElement c1 = coAd(compose(g1, g2), d);
      const DualElement c2 = coAd(g1, coAd(g2, d));
      worst_coad = std::max({worst_coad, max_abs(c1.p - c2.p), max_abs(c1.J - c2.J)});
      worst_pair = std::max(worst_pair, std::abs(pairing(coAd(g1, d), Ad(g1, x)) - pairing(d, x)));
    }
    rec.add("ad-homomorphism", "Ad_{g1 g2} = Ad_g1 Ad_g2", worst_ad, 1e-11);
    rec.add("coad-homomorphism", "coAd_{g1 g2} = coAd_g1 coAd_g2", worst_coad, 1e-11);
    rec.add("pairing-invariance", "<coAd_g d, Ad_g x> = <d, x>", worst_pair, 1e-12);
  }
  {
    const double h = 1e-4;
    double worst = 0.0;
    for (int rep = 0; rep < 50; ++rep) {
      const AlgebraElement x = rnd_algebra(rng);
      const AlgebraElement y = rnd_algebra(rng);
      const AlgebraElement plus = Ad(exp_algebra(x, h), y);
      const AlgebraElement minus = Ad(exp_algebra(x, -h), y);
      const AlgebraElement expect = bracket(x, y);
      worst = std::max({worst, max_abs((plus.v - minus.v) / (2 * h) - expect.v),
                        max_abs((plus.M - minus.M) * (1.0 / (2 * h)) - expect.M)});
    }
    rec.add("ad-equals-bracket", "d/dt Ad_{exp(tx)} y |_0 = [x, y] (FD, h = 1e-4)", worst, 1e-6);
  }
  {
    double worst_comm = 0.0;
    double worst_push = 0.0;
    const Event o = rnd_event(rng);
    for (int rep = 0; rep < 100; ++rep) {
      worst_comm = std::max(worst_comm, field_commutator_check(rnd_algebra(rng), rnd_algebra(rng),
                                                               o, rnd_event(rng, 3.0)));
      worst_push = std::max(worst_push,
                            pushforward_equivariance_check(rnd_poincare(rng), rnd_algebra(rng), o,
                                                           rnd_event(rng, 3.0)));
    }
    rec.add("field-anti-homomorphism", "[V^x, V^y] = -V^[x,y]", worst_comm, 1e-10);
    rec.add("pushforward-equivariance", "g_* V^x = V^{Ad_g x} o g", worst_push, 1e-10);
  }
  {
    double worst_flow = 0.0;
    double worst_lorentz = 0.0;
    double worst_killing = 0.0;
    const Event o = rnd_event(rng);
    for (int rep = 0; rep < 50; ++rep) {
      const AlgebraElement x = rnd_algebra(rng);
      const double s = uniform(rng, -1.5, 1.5);
      const double t = uniform(rng, -1.5, 1.5);
      const Event m = rnd_event(rng, 2.0);
      const Event lhs = act_on_point(exp_algebra(x, s), act_on_point(exp_algebra(x, t), m, o), o);
      const Event rhs = act_on_point(exp_algebra(x, s + t), m, o);
      worst_flow = std::max(worst_flow, max_abs(point_diff(lhs, rhs)));
      worst_lorentz = std::max(worst_lorentz, lorentz_residual(exp_algebra(x, t).L.m));
      if (!killing_check(x)) worst_killing = 1.0;
    }
    rec.add("flow-composition", "Fl_s o Fl_t = Fl_{s+t}", worst_flow, 1e-10);
    rec.add("exp-lorentz-invariant", "exp(tx) satisfies L^T eta L = eta", worst_lorentz, 1e-10);
    rec.add("killing-fields", "symmetrised gradient of V^x vanishes", worst_killing, 0.0);
  }
}

void verify_charges(std::vector<CheckResult>& out, std::uint64_t seed) {
  Recorder rec{out, "charges"};
  std::mt19937_64 rng(seed ^ 0xc4a6u);
  const Body swarm = two_particle_body();
  const Body blob = small_blob_body();
  const Event o{};
  const QuadratureSpec q_swarm(8);
  const QuadratureSpec q_blob(16);

  {
    const double gamma = 1.0 / std::sqrt(1.0 - 0.36);
    const ChargeSet c = integrate_charges(swarm, rest_slice, o, q_swarm);
    double worst = std::abs(c.P[0] - 2 * gamma);
    worst = std::max(worst, std::abs(c.J(2, 1) - 2 * gamma * 0.6));
    worst = std::max({worst, std::abs(c.P[1]), std::abs(c.P[2]), std::abs(c.P[3])});
    rec.add("swarm-closed-form", "P = sum m_i u_i, J = sum (x_i - z) ^ m_i u_i", worst, 1e-12);
  }
  {
    double worst = 0.0;
    for (int rep = 0; rep < 10; ++rep) {
      const AlgebraElement x = rnd_algebra(rng);
      const AlgebraElement y = rnd_algebra(rng);
      const double s = uniform(rng, -2, 2);
      const AlgebraElement xs(x.v * s + y.v, x.M * s + y.M);
      const double lhs = momentum_map(swarm, xs, o, rest_slice, q_swarm);
      const double rhs = s * momentum_map(swarm, x, o, rest_slice, q_swarm) +
                         momentum_map(swarm, y, o, rest_slice, q_swarm);
      worst = std::max(worst, std::abs(lhs - rhs));
    }
    rec.add("momentum-linearity", "M(s x + y) = s M(x) + M(y)", worst, 1e-10);
  }
  {
    double worst = 0.0;
    for (int rep = 0; rep < 20; ++rep)
      worst = std::max(worst, equivariance_check(swarm, rnd_poincare(rng), o, rest_slice, q_swarm));
    rec.add("swarm-equivariance", "charges of the pushed body = coAd_g(charges)", worst, 1e-12);
  }
  {
    const ChargeSet base = integrate_charges(swarm, rest_slice, o, q_swarm);
    double worst = 0.0;
    for (int rep = 0; rep < 10; ++rep) {
      const PoincareElement g1 = rnd_poincare(rng);
      const PoincareElement g2 = rnd_poincare(rng);
      const DualElement once = coAd(compose(g2, g1), to_dual(base));
      const DualElement twice = coAd(g2, coAd(g1, to_dual(base)));
      worst = std::max({worst, max_abs(once.p - twice.p), max_abs(once.J - twice.J)});
    }
    rec.add("equivariance-composition", "transporting by g1 then g2 = transporting by g2 g1",
            worst, 1e-11);
  }
  {
    const double dev = slice_independence_check(blob, boosted(0.2, -0.1), -0.4, 0.7, o, q_blob);
    rec.add("blob-slice-independence", "(P, J) agree between Sigma(u,s1) and Sigma(u,s2)", dev,
            1e-6);
  }
  {
    const ChargeSet c = integrate_charges(blob, rest_slice, o, q_blob);
    double worst = 0.0;
    for (int rep = 0; rep < 3; ++rep) {
      const AlgebraElement x = rnd_algebra(rng);
      const double direct = momentum_map(blob, x, o, rest_slice, q_blob);
      const double algebraic = momentum_from_charges(c, x);
      worst = std::max(worst, std::abs(direct - algebraic));
    }
    rec.add("momentum-both-paths", "int of the charge 3-form = pairing with (P, J)", worst,
            std::max(100 * c.quad_error, 1e-8));
  }
  {
    const ChargeSet gl = integrate_charges(blob, rest_slice, o,
                                           QuadratureSpec(24, QuadratureRule::gauss_legendre));
    const ChargeSet mp = integrate_charges(blob, rest_slice, o,
                                           QuadratureSpec(160, QuadratureRule::midpoint));
    rec.add("rule-agreement", "Gauss-Legendre and midpoint converge to the same charges",
            max_abs(gl.P - mp.P) / max_abs(gl.P), 1e-4);
  }
  {
    const ChargeSet c = integrate_charges(blob, rest_slice, o, q_blob);
    rec.add("dust-timelike-momentum", "eta(P, P) > 0 for weak-energy matter",
            mink_dot(c.P, c.P) > 0 ? 0.0 : 1.0, 0.0);
  }
  {
    const Body gentle = Body::from_blob(DustBlob(boosted(0.3, 0.1), Event{}, 1.5, 1.0));
    double worst = 0.0;
    for (int rep = 0; rep < 10; ++rep) {
      const Event x{0.0, uniform(rng, -0.45, 0.45), uniform(rng, -0.45, 0.45),
                    uniform(rng, -0.45, 0.45)};
      worst = std::max(worst, max_abs(divergence_fd(gentle, x, 1e-3)));
    }
    rec.add("dust-divergence-free", "d_a T^{ab} = 0 for uniform-velocity dust (FD)", worst, 1e-6);
    const Event probe{0.0, 0.31, 0.2, 0.11};
    const double ratio = max_abs(divergence_fd(gentle, probe, 2e-2)) /
                         max_abs(divergence_fd(gentle, probe, 1e-2));
    rec.add("divergence-fd-order", "central-difference divergence converges at O(h^2)",
            std::abs(ratio - 4.0), 0.5);
  }
}

void verify_centers(std::vector<CheckResult>& out, std::uint64_t seed) {
  Recorder rec{out, "centers"};
  std::mt19937_64 rng(seed ^ 0xce17u);

  auto random_charges = [&](std::mt19937_64& r) {
    FourVector p = rnd_vector(r);
    p[0] = 2.5 + std::abs(p[0]);
    return ChargeSet(p, rnd_bivector(r), rnd_event(r));
  };

  {
    double worst_split = 0.0;
    double worst_trans = 0.0;
    double worst_line = 0.0;
    for (int rep = 0; rep < 100; ++rep) {
      const ChargeSet c = random_charges(rng);
      const FourVector u = rnd_observer(rng);
      const SpinData s = spin(c, u);
      worst_split = std::max(worst_split, max_abs(s.S + orbital(c, u) - c.J));
      worst_trans = std::max(worst_trans, max_abs(contract_right(s.S, u)));
      const WorldLine l1 = mass_center_line(c, u);
      const WorldLine l2 = mass_center_line(rebase(c, rnd_vector(rng, 3.0)), u);
      worst_line = std::max(worst_line, point_line_distance(l2.point, l1));
    }
    rec.add("spin-orbital-split", "J = S(u) + L(z, u)", worst_split, 1e-12);
    rec.add("spin-transversality", "S(u) . u = 0", worst_trans, 1e-12);
    rec.add("line-rebase-invariance", "the mass-centre line does not depend on z_ref", worst_line,
            1e-12);
  }
  {
    double worst_a = 0.0;
    for (int rep = 0; rep < 100; ++rep) {
      // a(z+b, u; l) = a(z, u; l + (u.b)/(u.P)) - b
      const ChargeSet c = random_charges(rng);
      const FourVector u = rnd_observer(rng);
      const FourVector b = rnd_vector(rng, 2.0);
      const double lambda = uniform(rng, -2, 2);
      const double pu = mink_dot(c.P, u);
      auto a_of = [&](const ChargeSet& cs, double l) {
        return contract_right(cs.J, u) / pu + cs.P * l;
      };
      const FourVector lhs = a_of(rebase(c, b), lambda);
      const FourVector rhs = a_of(c, lambda + mink_dot(u, b) / pu) - b;
      worst_a = std::max(worst_a, max_abs(lhs - rhs));
    }
    rec.add("centre-shift-law", "a(z+b, u; l) = a(z, u; l + (u.b)/(u.P)) - b", worst_a, 1e-12);
  }
  {
    double worst_norm = 0.0;
    double worst_round = 0.0;
    double worst_kernel = 0.0;
    for (int rep = 0; rep < 100; ++rep) {
      const FourVector u = rnd_observer(rng);
      FourVector seed_vec = rnd_vector(rng);
      seed_vec = seed_vec - u * mink_dot(u, seed_vec);
      const Bivector s = spin_from_vector(seed_vec, u);
      const FourVector back = spin_vector(SpinData(s, u));
      worst_round = std::max(worst_round, max_abs(back - seed_vec));
      worst_norm = std::max(worst_norm, std::abs(bivector_norm(s) -
                                                 std::sqrt(-mink_dot(seed_vec, seed_vec))));
      worst_kernel = std::max(worst_kernel, max_abs(contract_right(s, back)));
    }
    rec.add("spin-vector-roundtrip", "S -> Svec -> S is the identity", worst_round, 1e-12);
    rec.add("spin-vector-norm", "||Svec|| = ||S||_norm", worst_norm, 1e-12);
    rec.add("spin-vector-axis", "Svec lies in the kernel of S", worst_kernel, 1e-12);
  }
  {
    const ChargeSet c = integrate_charges(two_particle_body(), rest_slice, Event{},
                                          QuadratureSpec(8));
    const double rm = moller_radius(c);
    const RestFrame rest = rest_frame(c);
    const FourVector axis = spin_vector(spin(c, rest.u_star));
    const Event centroid = mass_center_line(c, rest.u_star).point;
    std::vector<double> rapidities;
    for (double t : {0.1, 0.3, 0.5, 0.7, 0.9, 0.99}) rapidities.push_back(std::atanh(t));
    const auto dirs = default_disc_directions(c, 24);
    const auto samples = moller_disc_sample(c, rapidities, dirs);
    double geo = 0.0;
    double max_dist = 0.0;
    for (const auto& s : samples) {
      const FourVector off = point_diff(s.point, centroid);
      geo = std::max({geo, std::abs(mink_dot(off, rest.u_star)), std::abs(mink_dot(off, axis)),
                      std::max(0.0, s.distance - rm * (1 + 1e-12))});
      max_dist = std::max(max_dist, s.distance);
    }
    rec.add("disc-geometry", "samples live in the plane perp to u* and the axis, within R_M",
            geo, 1e-12);
    rec.add("disc-supremum", "max sampled distance reaches 0.99 R_M at tanh(rho) = 0.99",
            std::max(0.0, 0.99 * rm - max_dist), 1e-12);
    rec.add("moller-radius-swarm", "R_M = v d for the counter-moving pair",
            std::abs(rm - 0.6), 1e-12);
  }
}

}  // namespace

std::vector<CheckResult> run_verification(const std::string& suite, std::uint64_t seed) {
  std::vector<CheckResult> out;
  const bool all = suite == "all";
  if (suite == "exterior" || all) verify_exterior(out, seed);
  if (suite == "poincare" || all) verify_poincare(out, seed);
  if (suite == "charges" || all) verify_charges(out, seed);
  if (suite == "centers" || all) verify_centers(out, seed);
  if (out.empty()) throw InvariantViolation("unknown verification suite '" + suite + "'");
  return out;
}

std::vector<CheckResult> negative_controls() {
  std::vector<CheckResult> out;
  {
    // an eta-symmetric generator smuggled past the bivector check
    Matrix4 sym;
    sym(0, 1) = sym(1, 0) = 1.0;
    sym(2, 2) = 0.5;
    const AlgebraElement broken = AlgebraElement::unchecked(FourVector{}, sym);
    const double residual = killing_residual(broken.M);
    out.push_back({"controls", "symmetric-generator-killing",
                   "symmetrised gradient of V^x vanishes for algebra elements", residual, 0.0,
                   killing_check(broken)});
  }
  {
    // time-modulated energy density: not divergence free
    const DustBlob carrier(FourVector{1, 0, 0, 0}, Event{}, 1.0, 1.0);
    auto eval = [carrier](const Event& x) {
      return carrier.stress_at(x) * (1.0 + 0.5 * std::sin(2.0 * x[0]));
    };
    const Body bad = Body::from_field(SampledField{eval, carrier.tube()});
    const double residual = max_abs(divergence_fd(bad, Event{0.2, 0.1, 0.2, 0.1}, 1e-3));
    out.push_back({"controls", "time-modulated-divergence",
                   "d_a T^{ab} = 0 (FD) for conserved matter", residual, 1e-6,
                   residual <= 1e-6});
  }
  return out;
}

}  // namespace momap
