#include "flatspan/flat.hpp"

#include <sstream>
#include <stdexcept>

namespace flatspan {

namespace {

void require_same_ambient(int a, int b, const char* what) {
  if (a != b) {
    throw std::invalid_argument(std::string(what) + ": ambient dimension mismatch (" +
                                std::to_string(a) + " vs " + std::to_string(b) + ")");
  }
}

}  // namespace

Flat Flat::empty(int ambient) {
  if (ambient < 0) throw std::invalid_argument("ambient dimension must be >= 0");
  return Flat(ambient, Matrix(ambient + 1));
}

Flat Flat::from_rows(int ambient, Matrix rows) {
  rref(rows);
  return Flat(ambient, std::move(rows));
}

Flat Flat::span(const std::vector<Point>& points) {
  if (points.empty()) throw std::invalid_argument("span of no points: ambient unknown");
  return span(points.front().ambient(), points);
}

Flat Flat::span(int ambient, const std::vector<Point>& points) {
  if (points.empty()) return empty(ambient);
  Matrix m(ambient + 1);
  for (const Point& p : points) {
    require_same_ambient(ambient, p.ambient(), "span");
    m.append_row(p.coords());
  }
  return from_rows(ambient, std::move(m));
}

Flat Flat::span_flats(const std::vector<Flat>& flats) {
  if (flats.empty()) throw std::invalid_argument("span of no flats: ambient unknown");
  const int ambient = flats.front().ambient();
  Matrix m(ambient + 1);
  for (const Flat& f : flats) {
    require_same_ambient(ambient, f.ambient(), "span");
    m.append_rows(f.basis());
  }
  return from_rows(ambient, std::move(m));
}

void Flat::reduce(std::vector<Rational>& v) const {
  const std::vector<int> piv = pivots();
  for (int r = 0; r < basis_.rows(); ++r) {
    const int c = piv[static_cast<std::size_t>(r)];
    Rational& coeff = v[static_cast<std::size_t>(c)];
    if (coeff == 0) continue;
    Rational factor = coeff;
    for (int j = c; j <= ambient_; ++j) {
      v[static_cast<std::size_t>(j)] -= factor * basis_.at(r, j);
    }
  }
}

bool Flat::contains(const Point& p) const {
  require_same_ambient(ambient_, p.ambient(), "contains");
  std::vector<Rational> v = p.coords();
  reduce(v);
  for (const Rational& x : v) {
    if (x != 0) return false;
  }
  return true;
}

bool Flat::contains(const Flat& other) const {
  require_same_ambient(ambient_, other.ambient_, "contains");
  for (int r = 0; r < other.basis_.rows(); ++r) {
    std::vector<Rational> v = other.basis_.row(r);
    reduce(v);
    for (const Rational& x : v) {
      if (x != 0) return false;
    }
  }
  return true;
}

Flat Flat::with_point(const Point& p) const {
  require_same_ambient(ambient_, p.ambient(), "with_point");
  std::vector<Rational> v = p.coords();
  reduce(v);

  int lead = -1;
  for (int j = 0; j <= ambient_; ++j) {
    if (v[static_cast<std::size_t>(j)] != 0) {
      lead = j;
      break;
    }
  }
  if (lead < 0) return *this;  // already on the flat

  if (v[static_cast<std::size_t>(lead)] != 1) {
    Rational inv = 1 / v[static_cast<std::size_t>(lead)];
    for (int j = lead; j <= ambient_; ++j) v[static_cast<std::size_t>(j)] *= inv;
  }

  // insert the new row at its pivot position and clear column `lead` above
  const std::vector<int> piv = pivots();
  int insert_at = basis_.rows();
  for (std::size_t r = 0; r < piv.size(); ++r) {
    if (piv[r] > lead) {
      insert_at = static_cast<int>(r);
      break;
    }
  }

  Matrix m(ambient_ + 1);
  for (int r = 0; r < basis_.rows(); ++r) {
    if (r == insert_at) m.append_row(v);
    std::vector<Rational> row = basis_.row(r);
    Rational factor = row[static_cast<std::size_t>(lead)];
    if (factor != 0) {
      for (int j = lead; j <= ambient_; ++j) {
        row[static_cast<std::size_t>(j)] -= factor * v[static_cast<std::size_t>(j)];
      }
    }
    m.append_row(row);
  }
  if (insert_at == basis_.rows()) m.append_row(v);
  return Flat(ambient_, std::move(m));
}

Flat meet(const Flat& a, const Flat& b) {
  require_same_ambient(a.ambient(), b.ambient(), "meet");
  // (U ^ V) = (U_perp + V_perp)_perp, all via exact kernels
  Matrix dual(a.ambient() + 1);
  dual.append_rows(kernel(a.basis()));
  dual.append_rows(kernel(b.basis()));
  rref(dual);
  return Flat::from_rows(a.ambient(), kernel(dual));
}

Flat join(const Flat& a, const Flat& b) {
  require_same_ambient(a.ambient(), b.ambient(), "join");
  Matrix m(a.ambient() + 1);
  m.append_rows(a.basis());
  m.append_rows(b.basis());
  return Flat::from_rows(a.ambient(), std::move(m));
}

namespace {

// Reduce v by the center's basis, then keep only the non-pivot columns.
std::vector<Rational> quotient_coords(const Flat& center, std::vector<Rational> v) {
  center.reduce(v);
  const std::vector<int> piv = center.pivots();
  std::vector<bool> is_pivot(static_cast<std::size_t>(center.ambient()) + 1, false);
  for (int c : piv) is_pivot[static_cast<std::size_t>(c)] = true;
  std::vector<Rational> out;
  out.reserve(v.size() - piv.size());
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (!is_pivot[j]) out.push_back(v[j]);
  }
  return out;
}

void require_projectable(const Flat& center) {
  if (center.is_empty()) throw std::invalid_argument("projection center must be nonempty");
  if (center.dim() >= center.ambient()) {
    throw std::invalid_argument("projection center must be a proper flat");
  }
}

}  // namespace

Point project(const Flat& center, const Point& p) {
  require_projectable(center);
  require_same_ambient(center.ambient(), p.ambient(), "project");
  std::vector<Rational> image = quotient_coords(center, p.coords());
  for (const Rational& x : image) {
    if (x != 0) return Point(std::move(image));
  }
  throw std::domain_error("projection undefined: point lies on the center");
}

Flat project(const Flat& center, const Flat& f) {
  require_projectable(center);
  require_same_ambient(center.ambient(), f.ambient(), "project");
  if (center.contains(f)) {
    throw std::domain_error("projection undefined: flat contained in the center");
  }
  const int image_ambient = center.ambient() - center.dim() - 1;
  Matrix m(image_ambient + 1);
  for (int r = 0; r < f.basis().rows(); ++r) {
    m.append_row(quotient_coords(center, f.basis().row(r)));
  }
  return Flat::from_rows(image_ambient, std::move(m));
}

std::string Flat::to_string() const {
  std::ostringstream out;
  out << "flat[dim=" << dim() << "]";
  if (!is_empty()) {
    out << "{";
    for (int r = 0; r < basis_.rows(); ++r) {
      if (r) out << "; ";
      for (int c = 0; c <= ambient_; ++c) {
        if (c) out << " ";
        out << rational_to_string(basis_.at(r, c));
      }
    }
    out << "}";
  }
  return out.str();
}

int compare(const Flat& a, const Flat& b) {
  if (a.ambient() != b.ambient()) return a.ambient() < b.ambient() ? -1 : 1;
  return compare(a.basis(), b.basis());
}

std::size_t hash_flat(const Flat& f) {
  return detail::hash_combine(static_cast<std::size_t>(f.ambient()), hash_matrix(f.basis()));
}

}  // namespace flatspan
