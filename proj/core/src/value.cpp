// Copyright 2026 The rieszlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "rieszlab/value.hpp"

#include "rieszlab/error.hpp"
#include "rieszlab/lateral.hpp"
#include "rieszlab/riesz.hpp"

namespace rieszlab {
namespace {

bool mixed(const Value& a, const Value& b) { return a.is_interval() || b.is_interval(); }

template <class F>
Value interval_op(const Value& a, const Value& b, F f) {
  return Value(f(a.as_interval(), b.as_interval()));
}

}  // namespace

std::string RealInterval::str() const {
  if (is_point()) return "real[" + lower.str() + "]";
  return "real[" + lower.str() + "," + upper.str() + "]";
}

const Element& Value::element() const {
  if (!is_element()) throw DomainError("real interval where an element was expected");
  return std::get<Element>(v_);
}

const RealInterval& Value::interval() const {
  if (!is_interval()) throw DomainError("element where a real interval was expected");
  return std::get<RealInterval>(v_);
}

Element Value::exact() const {
  if (is_element()) return element();
  if (!interval().is_point()) {
    throw PreconditionError("value " + interval().str() + " is only known up to an interval");
  }
  return Element::coordinate({interval().lower});
}

RealInterval Value::as_interval() const {
  if (is_interval()) return interval();
  const Element& e = element();
  if (e.space().kind() != SpaceKind::kCoordinate || e.space().dimension() != 1) {
    throw DomainError("cannot combine a real value with an element of " + e.space().str());
  }
  return RealInterval::point(e.dense_values()[0]);
}

bool Value::is_zero() const {
  if (is_element()) return element().is_zero();
  return interval().is_point() && interval().lower.is_zero();
}

std::string Value::str() const { return is_element() ? element().str() : interval().str(); }

bool operator==(const Value& a, const Value& b) {
  if (a.is_element() && b.is_element()) return a.element() == b.element();
  if (mixed(a, b)) {
    try {
      return a.as_interval() == b.as_interval();
    } catch (const DomainError&) {
      return false;
    }
  }
  return false;
}

Value operator+(const Value& a, const Value& b) {
  if (!mixed(a, b)) return a.element() + b.element();
  return interval_op(a, b, [](const RealInterval& x, const RealInterval& y) {
    return RealInterval{x.lower + y.lower, x.upper + y.upper};
  });
}

Value operator-(const Value& a) {
  if (a.is_element()) return -a.element();
  return RealInterval{-a.interval().upper, -a.interval().lower};
}

Value operator-(const Value& a, const Value& b) { return a + (-b); }

Value operator*(const Scalar& c, const Value& a) {
  if (a.is_element()) return c * a.element();
  const auto& r = a.interval();
  if (c.sign() >= 0) return RealInterval{c * r.lower, c * r.upper};
  return RealInterval{c * r.upper, c * r.lower};
}

Value value_sup(const Value& a, const Value& b) {
  if (!mixed(a, b)) return sup(a.element(), b.element());
  return interval_op(a, b, [](const RealInterval& x, const RealInterval& y) {
    return RealInterval{max(x.lower, y.lower), max(x.upper, y.upper)};
  });
}

Value value_inf(const Value& a, const Value& b) {
  if (!mixed(a, b)) return inf(a.element(), b.element());
  return interval_op(a, b, [](const RealInterval& x, const RealInterval& y) {
    return RealInterval{min(x.lower, y.lower), min(x.upper, y.upper)};
  });
}

Value value_pos(const Value& a) {
  if (a.is_element()) return pos(a.element());
  const auto& r = a.interval();
  return RealInterval{max(Scalar(0), r.lower), max(Scalar(0), r.upper)};
}

Value value_neg(const Value& a) { return value_pos(-a); }

Value value_abs(const Value& a) {
  if (a.is_element()) return abs(a.element());
  const auto& r = a.interval();
  if (r.lower.sign() >= 0) return r;
  if (r.upper.sign() <= 0) return RealInterval{-r.upper, -r.lower};
  return RealInterval{Scalar(0), max(-r.lower, r.upper)};
}

std::optional<bool> value_leq(const Value& a, const Value& b) {
  if (!mixed(a, b)) return leq(a.element(), b.element());
  const RealInterval x = a.as_interval();
  const RealInterval y = b.as_interval();
  if (x.upper <= y.lower) return true;
  if (x.lower > y.upper) return false;
  return std::nullopt;
}

std::optional<bool> value_disjoint(const Value& a, const Value& b) {
  if (!mixed(a, b)) return is_disjoint(a.element(), b.element());
  const RealInterval x = a.as_interval();
  const RealInterval y = b.as_interval();
  auto is_zero = [](const RealInterval& r) -> std::optional<bool> {
    if (r.is_point()) return r.lower.is_zero();
    if (r.contains(Scalar(0))) return std::nullopt;
    return false;
  };
  const auto zx = is_zero(x);
  const auto zy = is_zero(y);
  if ((zx && *zx) || (zy && *zy)) return true;
  if (zx && zy) return false;
  return std::nullopt;
}

std::optional<bool> value_fragment(const Value& a, const Value& b) {
  if (!mixed(a, b)) return is_fragment(a.element(), b.element());
  return value_disjoint(a, b - a);
}

}  // namespace rieszlab
