#include "bihom/tensor.hpp"

#include "bihom/errors.hpp"

namespace bihom {

Vec TriTensor::col(int i, int j, int k) const {
  Vec v(m_);
  for (int l = 0; l < m_; ++l) v[l] = at(i, j, k, l);
  return v;
}

void TriTensor::set_col(int i, int j, int k, const Vec& v) {
  if (int(v.size()) != m_) throw DimensionMismatch("tensor column");
  for (int l = 0; l < m_; ++l) at(i, j, k, l) = v[l];
}

Vec TriTensor::eval(const Vec& x, const Vec& y, const Vec& z) const {
  if (int(x.size()) != n_ || int(y.size()) != n_ || int(z.size()) != n_)
    throw DimensionMismatch("trilinear evaluation");
  Vec out(m_, Rat(0));
  for (int i = 0; i < n_; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < n_; ++j) {
      if (y[j] == 0) continue;
      Rat xy = x[i] * y[j];
      for (int k = 0; k < n_; ++k) {
        if (z[k] == 0) continue;
        Rat xyz = xy * z[k];
        for (int l = 0; l < m_; ++l) {
          const Rat& c = at(i, j, k, l);
          if (c != 0) out[l] += xyz * c;
        }
      }
    }
  }
  return out;
}

TriTensor TriTensor::compose_inputs(const Mat& a, const Mat& b, const Mat& c) const {
  const int q = a.cols();
  if (a.rows() != n_ || b.rows() != n_ || c.rows() != n_ || b.cols() != q ||
      c.cols() != q)
    throw DimensionMismatch("tensor input composition");
  // Contract one mode at a time through raw buffers (intermediate shapes mix
  // the old and new input dimensions).
  auto I = [&](size_t i, size_t j, size_t k, size_t l, size_t dj, size_t dk) {
    return ((i * dj + j) * dk + k) * m_ + l;
  };
  std::vector<Rat> s1(size_t(q) * n_ * n_ * m_, Rat(0));
  for (int i = 0; i < q; ++i)
    for (int p = 0; p < n_; ++p) {
      const Rat& f = a(p, i);
      if (f == 0) continue;
      for (int j = 0; j < n_; ++j)
        for (int k = 0; k < n_; ++k)
          for (int l = 0; l < m_; ++l) {
            const Rat& v = at(p, j, k, l);
            if (v != 0) s1[I(i, j, k, l, n_, n_)] += f * v;
          }
    }
  std::vector<Rat> s2(size_t(q) * q * n_ * m_, Rat(0));
  for (int j = 0; j < q; ++j)
    for (int p = 0; p < n_; ++p) {
      const Rat& f = b(p, j);
      if (f == 0) continue;
      for (int i = 0; i < q; ++i)
        for (int k = 0; k < n_; ++k)
          for (int l = 0; l < m_; ++l) {
            const Rat& v = s1[I(i, p, k, l, n_, n_)];
            if (v != 0) s2[I(i, j, k, l, q, n_)] += f * v;
          }
    }
  TriTensor out(q, m_);
  for (int k = 0; k < q; ++k)
    for (int p = 0; p < n_; ++p) {
      const Rat& f = c(p, k);
      if (f == 0) continue;
      for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j)
          for (int l = 0; l < m_; ++l) {
            const Rat& v = s2[I(i, j, p, l, q, n_)];
            if (v != 0) out.at(i, j, k, l) += f * v;
          }
    }
  return out;
}

TriTensor TriTensor::compose_output(const Mat& m) const {
  if (m.cols() != m_) throw DimensionMismatch("tensor output composition");
  TriTensor out(n_, m.rows());
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      for (int k = 0; k < n_; ++k)
        for (int l = 0; l < m_; ++l) {
          const Rat& v = at(i, j, k, l);
          if (v == 0) continue;
          for (int r = 0; r < m.rows(); ++r)
            if (m(r, l) != 0) out.at(i, j, k, r) += m(r, l) * v;
        }
  return out;
}

TriTensor TriTensor::operator+(const TriTensor& o) const {
  if (n_ != o.n_ || m_ != o.m_) throw DimensionMismatch("tensor sum");
  TriTensor out(n_, m_);
  for (size_t i = 0; i < c_.size(); ++i) out.c_[i] = c_[i] + o.c_[i];
  return out;
}

TriTensor TriTensor::operator*(const Rat& s) const {
  TriTensor out(n_, m_);
  for (size_t i = 0; i < c_.size(); ++i) out.c_[i] = c_[i] * s;
  return out;
}

bool TriTensor::is_zero() const {
  for (const Rat& x : c_)
    if (x != 0) return false;
  return true;
}

Vec BiTensor::col(int i, int j) const {
  Vec v(m_);
  for (int l = 0; l < m_; ++l) v[l] = at(i, j, l);
  return v;
}

void BiTensor::set_col(int i, int j, const Vec& v) {
  if (int(v.size()) != m_) throw DimensionMismatch("tensor column");
  for (int l = 0; l < m_; ++l) at(i, j, l) = v[l];
}

Vec BiTensor::eval(const Vec& x, const Vec& y) const {
  if (int(x.size()) != n_ || int(y.size()) != n_)
    throw DimensionMismatch("bilinear evaluation");
  Vec out(m_, Rat(0));
  for (int i = 0; i < n_; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < n_; ++j) {
      if (y[j] == 0) continue;
      Rat xy = x[i] * y[j];
      for (int l = 0; l < m_; ++l) {
        const Rat& c = at(i, j, l);
        if (c != 0) out[l] += xy * c;
      }
    }
  }
  return out;
}

BiTensor BiTensor::compose_inputs(const Mat& a, const Mat& b) const {
  if (a.rows() != n_ || a.cols() != n_ || b.rows() != n_ || b.cols() != n_)
    throw DimensionMismatch("tensor input composition");
  BiTensor t1(n_, m_);
  for (int i = 0; i < n_; ++i)
    for (int p = 0; p < n_; ++p) {
      const Rat& f = a(p, i);
      if (f == 0) continue;
      for (int j = 0; j < n_; ++j)
        for (int l = 0; l < m_; ++l) {
          const Rat& v = at(p, j, l);
          if (v != 0) t1.at(i, j, l) += f * v;
        }
    }
  BiTensor t2(n_, m_);
  for (int j = 0; j < n_; ++j)
    for (int q = 0; q < n_; ++q) {
      const Rat& f = b(q, j);
      if (f == 0) continue;
      for (int i = 0; i < n_; ++i)
        for (int l = 0; l < m_; ++l) {
          const Rat& v = t1.at(i, q, l);
          if (v != 0) t2.at(i, j, l) += f * v;
        }
    }
  return t2;
}

BiTensor BiTensor::compose_output(const Mat& m) const {
  if (m.cols() != m_) throw DimensionMismatch("tensor output composition");
  BiTensor out(n_, m.rows());
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      for (int l = 0; l < m_; ++l) {
        const Rat& v = at(i, j, l);
        if (v == 0) continue;
        for (int r = 0; r < m.rows(); ++r)
          if (m(r, l) != 0) out.at(i, j, r) += m(r, l) * v;
      }
  return out;
}

}  // namespace bihom
