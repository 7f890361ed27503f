#include "liaison/divisor.hpp"

#include <stdexcept>

namespace liaison {

DivisorClass DivisorClass::plane_blowup(long long a,
                                        std::vector<long long> mults) {
  DivisorClass d;
  d.c.reserve(mults.size() + 1);
  d.c.push_back(a);
  for (long long m : mults) d.c.push_back(m);
  return d;
}

long long DivisorClass::dot(const DivisorClass& other) const {
  if (c.size() != other.c.size())
    throw std::invalid_argument("divisor classes on different lattices");
  long long acc = c[0] * other.c[0];
  for (std::size_t i = 1; i < c.size(); ++i) acc -= c[i] * other.c[i];
  return acc;
}

DivisorClass DivisorClass::scaled(long long k) const {
  DivisorClass d = *this;
  for (auto& v : d.c) v *= k;
  return d;
}

DivisorClass DivisorClass::minus(const DivisorClass& other) const {
  if (c.size() != other.c.size())
    throw std::invalid_argument("divisor classes on different lattices");
  DivisorClass d = *this;
  for (std::size_t i = 0; i < c.size(); ++i) d.c[i] -= other.c[i];
  return d;
}

DivisorClass DivisorClass::plus(const DivisorClass& other) const {
  if (c.size() != other.c.size())
    throw std::invalid_argument("divisor classes on different lattices");
  DivisorClass d = *this;
  for (std::size_t i = 0; i < c.size(); ++i) d.c[i] += other.c[i];
  return d;
}

DivisorClass DivisorClass::canonical(std::size_t points) {
  // -3P + sum E_i, stored in the aP - sum m_i E_i convention.
  DivisorClass d;
  d.c.assign(points + 1, -1);
  d.c[0] = -3;
  return d;
}

ClassInvariants class_invariants(const DivisorClass& D,
                                 const DivisorClass& K,
                                 const DivisorClass& H) {
  ClassInvariants out;
  out.self_intersection = D.dot(D);
  out.degree = D.dot(H);
  long long s = out.self_intersection + D.dot(K);
  if (s % 2 != 0)
    throw std::invalid_argument(
        "malformed divisor class: D^2 + D.K is odd");
  out.pa = s / 2 + 1;
  return out;
}

long long expected_system_dim(const DivisorClass& D, const DivisorClass& K) {
  long long s = D.dot(D) - D.dot(K);
  if (s % 2 != 0)
    throw std::invalid_argument("malformed divisor class: D^2 - D.K odd");
  return 1 + s / 2;
}

}  // namespace liaison
