#include "liaison/lattice.hpp"

#include <algorithm>
#include <charconv>
#include <ostream>
#include <sstream>

#include "liaison/checked.hpp"
#include "liaison/error.hpp"
#include "liaison/surface.hpp"

namespace liaison {

namespace ck = checked;

std::string BasisTag::to_string() const {
  if (kind == Kind::quadric) return "quadric";
  return "blownup_plane(" + std::to_string(points) + ")";
}

DivisorClass::DivisorClass(BasisTag basis, std::vector<Int> coeffs)
    : basis_(basis), coeffs_(std::move(coeffs)) {
  if (basis_.kind == BasisTag::Kind::blownup_plane && basis_.points < 0)
    throw InvalidArgument("negative number of blown-up points");
  if (coeffs_.size() != basis_.rank()) {
    throw InvalidArgument("class has " + std::to_string(coeffs_.size()) +
                          " coefficients but " + basis_.to_string() + " has rank " +
                          std::to_string(basis_.rank()));
  }
}

DivisorClass DivisorClass::plane(Int a, std::initializer_list<Int> bs) {
  return plane(a, std::span<const Int>(bs.begin(), bs.size()));
}

DivisorClass DivisorClass::plane(Int a, std::span<const Int> bs) {
  std::vector<Int> c;
  c.reserve(bs.size() + 1);
  c.push_back(a);
  c.insert(c.end(), bs.begin(), bs.end());
  return DivisorClass(BasisTag::blownup_plane(static_cast<int>(bs.size())), std::move(c));
}

DivisorClass DivisorClass::quadric(Int a, Int b) {
  return DivisorClass(BasisTag::quadric(), {a, b});
}

DivisorClass DivisorClass::zero(BasisTag basis) {
  return DivisorClass(basis, std::vector<Int>(basis.rank(), 0));
}

DivisorClass DivisorClass::exceptional(int n, int i) {
  if (i < 1 || i > n) throw InvalidArgument("exceptional index out of range");
  std::vector<Int> c(static_cast<std::size_t>(n) + 1, 0);
  c[static_cast<std::size_t>(i)] = -1;
  return DivisorClass(BasisTag::blownup_plane(n), std::move(c));
}

bool DivisorClass::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](Int x) { return x == 0; });
}

static void require_same_basis(const DivisorClass& a, const DivisorClass& b) {
  if (a.basis() != b.basis()) {
    throw BasisMismatch("classes live in different lattices: " + a.basis().to_string() +
                        " vs " + b.basis().to_string());
  }
}

DivisorClass DivisorClass::operator+(const DivisorClass& o) const {
  require_same_basis(*this, o);
  std::vector<Int> c(coeffs_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = ck::add(coeffs_[i], o.coeffs_[i]);
  return DivisorClass(basis_, std::move(c));
}

DivisorClass DivisorClass::operator-(const DivisorClass& o) const {
  require_same_basis(*this, o);
  std::vector<Int> c(coeffs_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = ck::sub(coeffs_[i], o.coeffs_[i]);
  return DivisorClass(basis_, std::move(c));
}

DivisorClass DivisorClass::operator-() const { return DivisorClass::zero(basis_) - *this; }

DivisorClass operator*(DivisorClass::Int k, const DivisorClass& c) {
  std::vector<DivisorClass::Int> out(c.coeffs_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = ck::mul(k, c.coeffs_[i]);
  return DivisorClass(c.basis_, std::move(out));
}

DivisorClass::Int DivisorClass::max_abs() const {
  Int m = 0;
  for (Int x : coeffs_) m = std::max(m, x < 0 ? ck::neg(x) : x);
  return m;
}

std::string DivisorClass::to_string() const {
  std::ostringstream os;
  os << '(';
  if (basis_.kind == BasisTag::Kind::quadric) {
    os << coeffs_[0] << ',' << coeffs_[1];
  } else {
    os << coeffs_[0];
    if (coeffs_.size() > 1) os << ';';
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
      if (i > 1) os << ',';
      os << coeffs_[i];
    }
  }
  os << ')';
  return os.str();
}

DivisorClass DivisorClass::parse(std::string_view text, BasisTag basis) {
  std::vector<Int> vals;
  std::string_view rest = text;
  auto is_sep = [](char ch) {
    return ch == ',' || ch == ';' || ch == ' ' || ch == '(' || ch == ')' || ch == '\t';
  };
  while (!rest.empty()) {
    while (!rest.empty() && is_sep(rest.front())) rest.remove_prefix(1);
    if (rest.empty()) break;
    Int v = 0;
    const char* first = rest.data();
    const char* last = rest.data() + rest.size();
    if (*first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, v);
    Int reps = 1;
    if (ec == std::errc{} && ptr != last && *ptr == '^') {
      auto [p2, ec2] = std::from_chars(ptr + 1, last, reps);
      if (ec2 != std::errc{} || reps < 1 || reps > 4096) ptr = last, ec = std::errc::invalid_argument;
      else ptr = p2;
    }
    if (ec != std::errc{} || (ptr != last && !is_sep(*ptr))) {
      throw InvalidArgument("malformed divisor class '" + std::string(text) + "'");
    }
    vals.insert(vals.end(), static_cast<std::size_t>(reps), v);
    rest.remove_prefix(static_cast<std::size_t>(ptr - rest.data()));
  }
  if (vals.size() != basis.rank()) {
    throw InvalidArgument("divisor class '" + std::string(text) + "' has " +
                          std::to_string(vals.size()) + " coefficients, " + basis.to_string() +
                          " needs " + std::to_string(basis.rank()));
  }
  return DivisorClass(basis, std::move(vals));
}

std::ostream& operator<<(std::ostream& os, const DivisorClass& c) { return os << c.to_string(); }

std::int64_t intersect(const DivisorClass& d1, const DivisorClass& d2) {
  require_same_basis(d1, d2);
  const auto a = d1.coeffs();
  const auto b = d2.coeffs();
  if (d1.basis().kind == BasisTag::Kind::quadric) {
    return ck::add(ck::mul(a[0], b[1]), ck::mul(a[1], b[0]));
  }
  std::int64_t r = ck::mul(a[0], b[0]);
  for (std::size_t i = 1; i < a.size(); ++i) r = ck::sub(r, ck::mul(a[i], b[i]));
  return r;
}

std::int64_t self_intersection(const DivisorClass& c) { return intersect(c, c); }

std::int64_t degree(const DivisorClass& c, const SurfaceModel& s) {
  return intersect(c, s.hyperplane());
}

std::int64_t arithmetic_genus(const DivisorClass& c, const SurfaceModel& s) {
  const std::int64_t twice = ck::add(self_intersection(c), intersect(c, s.canonical()));
  if (twice % 2 != 0) {
    throw Error("adjunction parity violated for " + c.to_string() + " on " + s.id());
  }
  return ck::add(twice / 2, 1);
}

std::int64_t expected_dim_linear_system(const DivisorClass& c, const SurfaceModel& s) {
  const std::int64_t twice = intersect(c, c - s.canonical());
  if (twice % 2 != 0) {
    throw Error("Riemann-Roch parity violated for " + c.to_string() + " on " + s.id());
  }
  return twice / 2;
}

std::int64_t euler_characteristic(const DivisorClass& c, const SurfaceModel& s) {
  return ck::add(expected_dim_linear_system(c, s), 1);
}

DivisorClass standard_canonical(BasisTag basis) {
  if (basis.kind == BasisTag::Kind::quadric) return DivisorClass::quadric(-2, -2);
  std::vector<std::int64_t> c(basis.rank(), -1);
  c[0] = -3;
  return DivisorClass(basis, std::move(c));
}

}  // namespace liaison
