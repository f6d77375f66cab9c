#include "momap/exterior.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "momap/errors.hpp"

namespace momap {

namespace {

std::size_t pow_int(int base, int exp) {
  std::size_t r = 1;
  for (int i = 0; i < exp; ++i) r *= static_cast<std::size_t>(base);
  return r;
}

std::size_t flat_index(int dim, std::span<const int> idx) {
  std::size_t f = 0;
  for (int a : idx) f = f * static_cast<std::size_t>(dim) + static_cast<std::size_t>(a);
  return f;
}

// Advances a length-p tuple with entries 0..dim-1; returns false after the last one.
bool next_tuple(int dim, std::vector<int>& idx) {
  for (int k = static_cast<int>(idx.size()) - 1; k >= 0; --k) {
    if (++idx[static_cast<std::size_t>(k)] < dim) return true;
    idx[static_cast<std::size_t>(k)] = 0;
  }
  return false;
}

// Sign of a sequence of distinct values by inversion count; 0 on repeats.
int permutation_sign(std::span<const int> perm) {
  int sign = 1;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j) {
      if (perm[i] == perm[j]) return 0;
      if (perm[i] > perm[j]) sign = -sign;
    }
  return sign;
}

double factorial(int p) {
  double f = 1.0;
  for (int k = 2; k <= p; ++k) f *= k;
  return f;
}

}  // namespace

Metric::Metric(std::vector<int> signature_entries) : signature(std::move(signature_entries)) {
  if (signature.empty()) throw InvariantViolation("metric needs at least one dimension");
  for (int s : signature)
    if (s != 1 && s != -1) throw InvariantViolation("metric signature entries must be +1 or -1");
}

Metric Metric::minkowski(int dim) {
  std::vector<int> s(static_cast<std::size_t>(dim), -1);
  s[0] = 1;
  return Metric(std::move(s));
}

Metric Metric::euclidean(int dim) {
  return Metric(std::vector<int>(static_cast<std::size_t>(dim), 1));
}

int Metric::n_minus() const {
  return static_cast<int>(std::count(signature.begin(), signature.end(), -1));
}

PForm::PForm(int dim, int grade) : dim_(dim), grade_(grade), c_(pow_int(dim, grade), 0.0) {
  if (dim < 1 || grade < 0) throw InvariantViolation("invalid form dimensions");
}

PForm PForm::scalar(int dim, double value) {
  PForm f(dim, 0);
  f.c_[0] = value;
  return f;
}

PForm PForm::basis_monomial(int dim, std::span<const int> indices) {
  PForm f(dim, static_cast<int>(indices.size()));
  f.set_component(indices, 1.0);
  return f;
}

PForm PForm::from_components(int dim, int grade, std::vector<double> comps) {
  PForm f(dim, grade);
  if (comps.size() != f.c_.size()) throw InvariantViolation("component array has wrong size");
  f.c_ = std::move(comps);
  if (grade >= 2) {
    std::vector<int> idx(static_cast<std::size_t>(grade), 0);
    std::vector<int> swapped(static_cast<std::size_t>(grade), 0);
    do {
      for (int k = 0; k + 1 < grade; ++k) {
        swapped.assign(idx.begin(), idx.end());
        std::swap(swapped[static_cast<std::size_t>(k)], swapped[static_cast<std::size_t>(k) + 1]);
        const double a = f.c_[flat_index(dim, idx)];
        const double b = f.c_[flat_index(dim, swapped)];
        if (std::abs(a + b) > 1e-12 * std::max(1.0, std::abs(a)))
          throw InvariantViolation("components are not antisymmetric");
      }
    } while (next_tuple(dim, idx));
  }
  return f;
}

double PForm::component(std::span<const int> idx) const {
  return c_[flat_index(dim_, idx)];
}

void PForm::set_component(std::span<const int> idx, double value) {
  if (static_cast<int>(idx.size()) != grade_) throw InvariantViolation("index arity mismatch");
  for (int a : idx)
    if (a < 0 || a >= dim_) throw InvariantViolation("index out of range");
  if (grade_ == 0) {
    c_[0] = value;
    return;
  }
  std::vector<int> perm(idx.begin(), idx.end());
  std::sort(perm.begin(), perm.end());
  if (std::adjacent_find(perm.begin(), perm.end()) != perm.end()) {
    if (value != 0.0) throw InvariantViolation("repeated index requires zero component");
    return;
  }
  const int sign_idx = permutation_sign(idx);
  do {
    c_[flat_index(dim_, perm)] = value * sign_idx * permutation_sign(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
}

PForm PForm::operator+(const PForm& o) const {
  if (dim_ != o.dim_ || grade_ != o.grade_) throw InvariantViolation("form shape mismatch");
  PForm r(dim_, grade_);
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] + o.c_[i];
  return r;
}

PForm PForm::operator-(const PForm& o) const {
  if (dim_ != o.dim_ || grade_ != o.grade_) throw InvariantViolation("form shape mismatch");
  PForm r(dim_, grade_);
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] - o.c_[i];
  return r;
}

PForm PForm::operator*(double s) const {
  PForm r(dim_, grade_);
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] * s;
  return r;
}

double PForm::max_abs() const {
  double m = 0.0;
  for (double x : c_) m = std::max(m, std::abs(x));
  return m;
}

PForm lower(std::span<const double> v, const Metric& g) {
  if (static_cast<int>(v.size()) != g.dim()) throw InvariantViolation("dimension mismatch");
  PForm f(g.dim(), 1);
  for (int a = 0; a < g.dim(); ++a)
    f.raw(static_cast<std::size_t>(a)) = g.entry(a) * v[static_cast<std::size_t>(a)];
  return f;
}

std::vector<double> raise(const PForm& alpha, const Metric& g) {
  if (alpha.grade() != 1) throw InvariantViolation("raise expects a one-form");
  if (alpha.dim() != g.dim()) throw InvariantViolation("dimension mismatch");
  std::vector<double> v(static_cast<std::size_t>(g.dim()));
  for (int a = 0; a < g.dim(); ++a)
    v[static_cast<std::size_t>(a)] = g.entry(a) * alpha.raw(static_cast<std::size_t>(a));
  return v;
}

PForm wedge(const PForm& a, const PForm& b) {
  if (a.dim() != b.dim()) throw InvariantViolation("dimension mismatch");
  const int n = a.dim();
  const int p = a.grade();
  const int q = b.grade();
  PForm out(n, p + q);
  if (p + q > n) return out;  // zero form of grade p+q
  if (p + q == 0) {
    out.raw(0) = a.raw(0) * b.raw(0);
    return out;
  }

  // (a ^ b)_I = (1/(p! q!)) sum_sigma sign(sigma) a_{I.sigma(1..p)} b_{I.sigma(p+1..p+q)}
  const double scale = 1.0 / (factorial(p) * factorial(q));
  std::vector<int> order(static_cast<std::size_t>(p + q));
  std::iota(order.begin(), order.end(), 0);

  std::vector<int> idx(static_cast<std::size_t>(p + q), 0);
  std::vector<int> ia(static_cast<std::size_t>(p));
  std::vector<int> ib(static_cast<std::size_t>(q));
  do {
    double sum = 0.0;
    std::vector<int> perm = order;
    do {
      const int sign = permutation_sign(perm);
      for (int k = 0; k < p; ++k)
        ia[static_cast<std::size_t>(k)] = idx[static_cast<std::size_t>(perm[static_cast<std::size_t>(k)])];
      for (int k = 0; k < q; ++k)
        ib[static_cast<std::size_t>(k)] = idx[static_cast<std::size_t>(perm[static_cast<std::size_t>(p + k)])];
      sum += sign * a.component(ia) * b.component(ib);
    } while (std::next_permutation(perm.begin(), perm.end()));
    out.raw(flat_index(n, idx)) = sum * scale;
  } while (next_tuple(n, idx));
  return out;
}

double inner(const PForm& a, const PForm& b, const Metric& g) {
  if (a.grade() != b.grade()) throw InvariantViolation("grade mismatch");
  if (a.dim() != b.dim() || a.dim() != g.dim()) throw InvariantViolation("dimension mismatch");
  const int n = a.dim();
  const int p = a.grade();
  if (p == 0) return a.raw(0) * b.raw(0);
  double s = 0.0;
  std::vector<int> idx(static_cast<std::size_t>(p), 0);
  do {
    double sig = 1.0;
    for (int k : idx) sig *= g.entry(k);
    const std::size_t f = flat_index(n, idx);
    s += sig * a.raw(f) * b.raw(f);
  } while (next_tuple(n, idx));
  return s;
}

double inner_norm(const PForm& a, const PForm& b, const Metric& g) {
  return inner(a, b, g) / factorial(a.grade());
}

PForm volume_form(const Metric& g, int orientation) {
  if (orientation != 1 && orientation != -1)
    throw InvariantViolation("orientation must be +1 or -1");
  const int n = g.dim();
  PForm eps(n, n);
  std::vector<int> idx(static_cast<std::size_t>(n), 0);
  do {
    eps.raw(flat_index(n, idx)) = orientation * permutation_sign(idx);
  } while (next_tuple(n, idx));
  return eps;
}

PForm hodge(const PForm& alpha, const Metric& g, const PForm& eps) {
  const int n = g.dim();
  if (alpha.dim() != n || eps.dim() != n || eps.grade() != n)
    throw InvariantViolation("hodge arguments are inconsistent");
  const int p = alpha.grade();
  if (p > n) throw InvariantViolation("grade exceeds dimension");
  PForm out(n, n - p);
  const double scale = 1.0 / factorial(p);

  std::vector<int> full(static_cast<std::size_t>(n), 0);
  auto value_at = [&](std::span<const int> bidx) {
    if (p == 0) return alpha.raw(0) * eps.raw(flat_index(n, bidx));
    double sum = 0.0;
    std::vector<int> a(static_cast<std::size_t>(p), 0);
    do {
      for (int k = 0; k < p; ++k) full[static_cast<std::size_t>(k)] = a[static_cast<std::size_t>(k)];
      for (int k = 0; k < n - p; ++k)
        full[static_cast<std::size_t>(p + k)] = bidx[static_cast<std::size_t>(k)];
      const double e = eps.raw(flat_index(n, full));
      if (e == 0.0) continue;
      double sig = 1.0;
      for (int k : a) sig *= g.entry(k);
      sum += sig * alpha.raw(flat_index(n, a)) * e;
    } while (next_tuple(n, a));
    return sum * scale;
  };

  if (n - p == 0) {
    out.raw(0) = value_at({});
    return out;
  }
  std::vector<int> b(static_cast<std::size_t>(n - p), 0);
  do {
    out.raw(flat_index(n, b)) = value_at(b);
  } while (next_tuple(n, b));
  return out;
}

PForm insert(std::span<const double> v, const PForm& alpha) {
  if (alpha.grade() < 1) throw InvariantViolation("cannot insert into a scalar");
  if (static_cast<int>(v.size()) != alpha.dim()) throw InvariantViolation("dimension mismatch");
  const int n = alpha.dim();
  const int p = alpha.grade();
  PForm out(n, p - 1);

  std::vector<int> full(static_cast<std::size_t>(p), 0);
  auto value_at = [&](std::span<const int> rest) {
    double s = 0.0;
    for (int a = 0; a < n; ++a) {
      full[0] = a;
      for (int k = 0; k < p - 1; ++k)
        full[static_cast<std::size_t>(k + 1)] = rest[static_cast<std::size_t>(k)];
      s += v[static_cast<std::size_t>(a)] * alpha.raw(flat_index(n, full));
    }
    return s;
  };

  if (p == 1) {
    out.raw(0) = value_at({});
    return out;
  }
  std::vector<int> rest(static_cast<std::size_t>(p - 1), 0);
  do {
    out.raw(flat_index(n, rest)) = value_at(rest);
  } while (next_tuple(n, rest));
  return out;
}

double evaluate(const PForm& alpha, std::span<const std::vector<double>> vectors) {
  if (static_cast<int>(vectors.size()) != alpha.grade())
    throw InvariantViolation("arity mismatch");
  const int n = alpha.dim();
  const int p = alpha.grade();
  if (p == 0) return alpha.raw(0);
  double s = 0.0;
  std::vector<int> idx(static_cast<std::size_t>(p), 0);
  do {
    double prod = alpha.raw(flat_index(n, idx));
    if (prod != 0.0)
      for (int k = 0; k < p; ++k)
        prod *= vectors[static_cast<std::size_t>(k)]
                       [static_cast<std::size_t>(idx[static_cast<std::size_t>(k)])];
    s += prod;
  } while (next_tuple(n, idx));
  return s;
}

std::vector<double> to_vec(const FourVector& v) {
  return {v[0], v[1], v[2], v[3]};
}

PForm one_form(const FourVector& covariant_components) {
  PForm f(4, 1);
  for (int a = 0; a < 4; ++a) f.raw(static_cast<std::size_t>(a)) = covariant_components[a];
  return f;
}

double evaluate3(const PForm& alpha, const FourVector& v1, const FourVector& v2,
                 const FourVector& v3) {
  const std::vector<std::vector<double>> vs = {to_vec(v1), to_vec(v2), to_vec(v3)};
  return evaluate(alpha, vs);
}

}  // namespace momap
