#include "arr/arrangement.hpp"

#include <algorithm>
#include <sstream>

namespace arr {

namespace {

std::string render_normal(const LinearForm& normal) {
  std::string out;
  for (const Scalar& v : normal) {
    out += v.render();
    out += ",";
  }
  return out;
}

}  // namespace

std::string Arrangement::canonical_key() const {
  std::vector<std::string> keys;
  keys.reserve(hyperplanes.size());
  for (const auto& h : hyperplanes) keys.push_back(render_normal(h.normal));
  std::sort(keys.begin(), keys.end());
  std::string out = field.render() + ";" + std::to_string(dim) + ";";
  for (const auto& k : keys) out += k + "|";
  return out;
}

std::string Arrangement::ordered_key() const {
  std::string out = field.render() + ";" + std::to_string(dim) + ";";
  for (const auto& h : hyperplanes) out += render_normal(h.normal) + "|";
  return out;
}

Arrangement Arrangement::subarrangement(const std::vector<int>& indices) const {
  Arrangement sub;
  sub.field = field;
  sub.dim = dim;
  for (int i : indices) {
    sub.hyperplanes.push_back(hyperplanes[i]);
    sub.labels.push_back(labels[i]);
  }
  return sub;
}

Arrangement make_arrangement(const ArrangementSource& src) {
  Arrangement a;
  a.field = src.field;
  a.dim = src.nvars;
  for (size_t i = 0; i < src.forms.size(); ++i) {
    Hyperplane h{normalize_form(src.forms[i])};
    for (const auto& other : a.hyperplanes)
      if (other == h)
        fail(ErrorKind::DuplicateHyperplane, "duplicate hyperplane '" + src.labels[i] + "'");
    a.hyperplanes.push_back(std::move(h));
    a.labels.push_back(src.labels[i]);
  }
  return a;
}

ArrangementSource to_source(const Arrangement& a) {
  ArrangementSource src;
  src.field = a.field;
  src.nvars = a.dim;
  for (const auto& h : a.hyperplanes) src.forms.push_back(h.normal);
  src.labels = a.labels;
  return src;
}

Matrix normals_matrix(const Arrangement& a) {
  Matrix m;
  m.cols = a.dim;
  for (const auto& h : a.hyperplanes) m.rows.push_back(h.normal);
  return m;
}

Matrix normals_matrix(const Arrangement& a, const std::vector<int>& indices) {
  Matrix m;
  m.cols = a.dim;
  for (int i : indices) m.rows.push_back(a.hyperplanes[i].normal);
  return m;
}

int arrangement_rank(const Arrangement& a) { return rank_of(normals_matrix(a)); }

Restriction restrict_to_subspace(const Arrangement& a, const Matrix& basis) {
  int r = basis.row_count();
  std::vector<int> pivot_col(r);
  std::vector<bool> is_pivot(a.dim, false);
  for (int i = 0; i < r; ++i) {
    int lead = -1;
    for (int c = 0; c < basis.cols; ++c)
      if (!basis.rows[i][c].is_zero()) {
        lead = c;
        break;
      }
    if (lead < 0) fail(ErrorKind::Internal, "zero row in subspace basis");
    pivot_col[i] = lead;
    is_pivot[lead] = true;
  }
  std::vector<int> free_cols;
  for (int c = 0; c < a.dim; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);

  Restriction out;
  out.arr.field = a.field;
  out.arr.dim = a.dim - r;
  out.trace.assign(a.size(), -1);

  for (int i = 0; i < a.size(); ++i) {
    const LinearForm& beta = a.hyperplanes[i].normal;
    if (in_row_span(basis, beta)) {
      out.members.push_back(i);
      continue;
    }
    // substitute the pivot variables: x_{p_j} = -sum_{free f} R[j][f] x_f
    LinearForm image;
    image.reserve(free_cols.size());
    for (int f : free_cols) {
      Scalar v = beta[f];
      for (int j = 0; j < r; ++j) v = v - beta[pivot_col[j]] * basis.rows[j][f];
      image.push_back(v);
    }
    Hyperplane h{normalize_form(image)};
    int found = -1;
    for (int k = 0; k < out.arr.size(); ++k)
      if (out.arr.hyperplanes[k] == h) {
        found = k;
        break;
      }
    if (found < 0) {
      found = out.arr.size();
      out.arr.hyperplanes.push_back(h);
      out.arr.labels.push_back(render_linear_form(h.normal, a.field));
    }
    out.trace[i] = found;
  }
  return out;
}

Triple make_triple(const Arrangement& a, int pivot) {
  if (a.empty()) fail(ErrorKind::EmptyArrangement, "cannot form a triple of the empty arrangement");
  if (pivot < 0 || pivot >= a.size()) fail(ErrorKind::OutOfRange, "pivot index out of range");

  Triple t;
  t.whole = a;
  t.pivot = pivot;
  std::vector<int> keep;
  for (int i = 0; i < a.size(); ++i)
    if (i != pivot) keep.push_back(i);
  t.deleted = a.subarrangement(keep);

  Matrix basis;
  basis.cols = a.dim;
  basis.rows = {a.hyperplanes[pivot].normal};
  Restriction res = restrict_to_subspace(a, basis);
  t.restricted = std::move(res.arr);
  t.trace.reserve(keep.size());
  for (int i : keep) {
    if (res.trace[i] < 0) fail(ErrorKind::Internal, "hyperplane collapsed onto the pivot");
    t.trace.push_back(res.trace[i]);
  }
  return t;
}

Arrangement product(const Arrangement& a1, const Arrangement& a2) {
  if (a1.field != a2.field)
    fail(ErrorKind::MixedFields, a1.field.render() + " vs " + a2.field.render());
  Arrangement p;
  p.field = a1.field;
  p.dim = a1.dim + a2.dim;
  Scalar z = Scalar::zero(p.field);
  for (const auto& h : a1.hyperplanes) {
    LinearForm n = h.normal;
    n.resize(p.dim, z);
    p.hyperplanes.push_back({std::move(n)});
    p.labels.push_back(render_linear_form(p.hyperplanes.back().normal, p.field));
  }
  for (const auto& h : a2.hyperplanes) {
    LinearForm n(a1.dim, z);
    n.insert(n.end(), h.normal.begin(), h.normal.end());
    p.hyperplanes.push_back({std::move(n)});
    p.labels.push_back(render_linear_form(p.hyperplanes.back().normal, p.field));
  }
  return p;
}

}  // namespace arr
