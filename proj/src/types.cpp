#include "qreg/types.hpp"

#include "qreg/core.hpp"

namespace qreg {

const NumericPolicy& default_policy() {
  static const NumericPolicy pol{};
  return pol;
}

RegisterShape::RegisterShape(int n_, int d_) : n(n_), d(d_) {
  if (n < 1) throw std::invalid_argument("RegisterShape: qudit count must be >= 1");
  if (d < 2) throw std::invalid_argument("RegisterShape: local dimension must be >= 2");
  (void)dim();
}

Index RegisterShape::dim() const { return ipow(d, n); }

Index ipow(int d, int n) {
  if (d < 2 || n < 0) throw std::invalid_argument("ipow: need d >= 2, n >= 0");
  Index r = 1;
  for (int i = 0; i < n; ++i) {
    if (r > default_policy().max_sparse_side / d)
      throw std::invalid_argument("register dimension exceeds the size cap");
    r *= d;
  }
  return r;
}

int log_base(Index len, int d) {
  if (len < d || d < 2) return -1;
  int n = 0;
  Index r = len;
  while (r > 1) {
    if (r % d != 0) return -1;
    r /= d;
    ++n;
  }
  return n;
}

int qsize(const Vec& v, int d) {
  int n = log_base(v.size(), d);
  if (n < 0) throw std::invalid_argument("qsize: length is not a power of the local dimension");
  return n;
}

int qsize(const Mat& m, int d) {
  if (m.rows() != m.cols()) throw std::invalid_argument("qsize: matrix is not square");
  int n = log_base(m.rows(), d);
  if (n < 0) throw std::invalid_argument("qsize: side is not a power of the local dimension");
  return n;
}

int qsize(const StateLike& s, int d) {
  return std::visit([d](const auto& x) { return qsize(x, d); }, s);
}

Mat as_dm(const StateLike& s) {
  if (const Vec* v = std::get_if<Vec>(&s)) {
    Vec u = nm(*v);
    return u * u.adjoint();
  }
  return std::get<Mat>(s);
}

}  // namespace qreg
