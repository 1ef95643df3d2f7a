#include "jordanet/matrix.hpp"

#include <sstream>

namespace jordanet {

PolyMatrix to_poly(const QMatrix& m) {
  PolyMatrix p(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) p(i, j) = MPoly(m(i, j));
  }
  return p;
}

QMatrix to_rational(const PolyMatrix& m) {
  QMatrix q(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) q(i, j) = m(i, j).constant_value();
  }
  return q;
}

PolyMatrix substitute(const PolyMatrix& m, const std::map<std::string, MPoly>& assignment) {
  PolyMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).substitute(assignment);
  }
  return out;
}

QMatrix evaluate(const PolyMatrix& m, const std::map<std::string, Rational>& assignment) {
  QMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).evaluate(assignment);
  }
  return out;
}

QMatrix unit_matrix(std::size_t n, std::size_t i, std::size_t j) {
  QMatrix m(n, n);
  m(i, j) = 1;
  return m;
}

QMatrix sym_unit(std::size_t n, std::size_t i, std::size_t j) {
  QMatrix m(n, n);
  m(i, j) = 1;
  m(j, i) = 1;
  return m;
}

std::string to_string(const QMatrix& m) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) os << ',';
    os << '[';
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << ',';
      os << m(i, j).get_str();
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

}  // namespace jordanet
