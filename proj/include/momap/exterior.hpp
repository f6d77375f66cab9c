#ifndef MOMAP_EXTERIOR_HPP
#define MOMAP_EXTERIOR_HPP

#include <span>
#include <vector>

#include "momap/linalg.hpp"

namespace momap {

/// Diagonal +-1 metric of an orthonormal frame in dimension n.
struct Metric {
  explicit Metric(std::vector<int> signature_entries);

  static Metric minkowski(int dim = 4);  // (+,-,-,...,-)
  static Metric euclidean(int dim);

  int dim() const { return static_cast<int>(signature.size()); }
  int n_minus() const;
  /// Diagonal entry eta_aa (raising and lowering are involutions).
  double entry(int a) const { return static_cast<double>(signature[static_cast<std::size_t>(a)]); }

  std::vector<int> signature;  // entries are exactly +1 or -1
};

/// Totally antisymmetric grade-p coefficient array alpha_{a1..ap}, stored
/// dense (n^p reals, row-major).  The expansion convention carries 1/p!:
/// alpha = (1/p!) alpha_{a1..ap} theta^{a1} ^ ... ^ theta^{ap}.
class PForm {
 public:
  PForm(int dim, int grade);  // zero form
  static PForm scalar(int dim, double value);
  /// theta^{a1} ^ ... ^ theta^{ap} for distinct indices.
  static PForm basis_monomial(int dim, std::span<const int> indices);
  /// Validates antisymmetry of the given dense array (throws InvariantViolation).
  static PForm from_components(int dim, int grade, std::vector<double> comps);

  int dim() const { return dim_; }
  int grade() const { return grade_; }
  const std::vector<double>& components() const { return c_; }

  double component(std::span<const int> idx) const;
  /// Writes value at idx and +-value at every permutation of idx.
  void set_component(std::span<const int> idx, double value);

  PForm operator+(const PForm& o) const;
  PForm operator-(const PForm& o) const;
  PForm operator*(double s) const;

  double max_abs() const;

  // internal unchecked access for the algebra kernels
  double raw(std::size_t flat) const { return c_[flat]; }
  double& raw(std::size_t flat) { return c_[flat]; }

 private:
  int dim_;
  int grade_;
  std::vector<double> c_;
};

/// v^flat: (lower v)_a = eta_ab v^b.
PForm lower(std::span<const double> v, const Metric& g);
/// Inverse of lower; returns contravariant components.
std::vector<double> raise(const PForm& alpha, const Metric& g);

/// Antisymmetric product; grades add.  When the combined grade exceeds the
/// dimension the zero form of that grade is returned.
PForm wedge(const PForm& a, const PForm& b);

/// Slotwise inner product alpha_{A} beta^{A} (no combinatorial factor).
double inner(const PForm& a, const PForm& b, const Metric& g);
/// Renormalised product: (1/p!) alpha_{A} beta^{A}.
double inner_norm(const PForm& a, const PForm& b, const Metric& g);

/// Unit top-form with eps_{01..n-1} = orientation.
PForm volume_form(const Metric& g, int orientation = +1);

/// (star alpha)_{b1..b_{n-p}} = (1/p!) alpha_{a1..ap} eps^{a1..ap}_{b1..b_{n-p}};
/// the first p indices of eps are contracted.
PForm hodge(const PForm& alpha, const Metric& g, const PForm& eps);

/// Insertion of v into the first slot.
PForm insert(std::span<const double> v, const PForm& alpha);

/// alpha(v1, ..., vp) = alpha_{a1..ap} v1^{a1} ... vp^{ap}.
double evaluate(const PForm& alpha, std::span<const std::vector<double>> vectors);

// 4D conveniences for the Minkowski modules.
std::vector<double> to_vec(const FourVector& v);
PForm one_form(const FourVector& covariant_components);
double evaluate3(const PForm& alpha, const FourVector& v1, const FourVector& v2,
                 const FourVector& v3);

}  // namespace momap

#endif
