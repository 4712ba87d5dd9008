#include "qrea/braiding/tensor.hpp"

#include "qrea/errors.hpp"

namespace qrea {

namespace seq {

std::uint64_t pack(const std::vector<int>& idx) {
  if (idx.size() > 16) throw DegreeOutOfRange("tensor degree above 16");
  std::uint64_t key = 0;
  for (std::size_t p = 0; p < idx.size(); ++p) {
    if (idx[p] < 1 || idx[p] > 15) throw PositionOutOfRange("tensor index outside 1..15");
    key |= static_cast<std::uint64_t>(idx[p]) << (4 * p);
  }
  return key;
}

std::vector<int> unpack(std::uint64_t key, int degree) {
  std::vector<int> out(static_cast<std::size_t>(degree));
  for (int p = 0; p < degree; ++p) out[static_cast<std::size_t>(p)] = get(key, p);
  return out;
}

}  // namespace seq

void Tensor::add(std::uint64_t key, const RatFunc& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = coeffs.try_emplace(key, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) coeffs.erase(it);
  }
}

void Tensor::scale(const RatFunc& c) {
  if (c.is_zero()) {
    coeffs.clear();
    return;
  }
  for (auto& [k, v] : coeffs) v *= c;
}

Tensor& Tensor::operator+=(const Tensor& o) {
  if (degree != o.degree && !o.is_zero() && !is_zero()) throw SizeMismatch("tensor degrees differ");
  if (is_zero()) degree = o.degree;
  for (const auto& [k, v] : o.coeffs) add(k, v);
  return *this;
}

Tensor& Tensor::operator-=(const Tensor& o) {
  if (degree != o.degree && !o.is_zero() && !is_zero()) throw SizeMismatch("tensor degrees differ");
  if (is_zero()) degree = o.degree;
  for (const auto& [k, v] : o.coeffs) add(k, -v);
  return *this;
}

bool operator==(const Tensor& a, const Tensor& b) {
  if (a.coeffs.size() != b.coeffs.size()) return false;
  for (const auto& [k, v] : a.coeffs) {
    auto it = b.coeffs.find(k);
    if (it == b.coeffs.end() || !(it->second == v)) return false;
  }
  return true;
}

Tensor Tensor::product(const Tensor& a, const Tensor& b) {
  Tensor t;
  t.degree = a.degree + b.degree;
  for (const auto& [ka, va] : a.coeffs)
    for (const auto& [kb, vb] : b.coeffs) t.add(seq::concat(ka, a.degree, kb), va * vb);
  return t;
}

Tensor Tensor::basis(const std::vector<int>& idx) {
  Tensor t;
  t.degree = static_cast<int>(idx.size());
  t.coeffs.emplace(seq::pack(idx), RatFunc(1));
  return t;
}

}  // namespace qrea
