#include "gwspec/spectrum.hpp"

#include <algorithm>
#include <map>
#include <variant>

namespace gwspec {

void Spectrum::add(const ExactEigenvalue& value, std::size_t multiplicity) {
  if (multiplicity == 0) return;
  order_ += multiplicity;
  auto it = std::lower_bound(entries_.begin(), entries_.end(), value,
                             [](const Entry& e, const ExactEigenvalue& v) { return output_before(e.value, v); });
  if (it != entries_.end() && it->value == value) {
    it->multiplicity += multiplicity;
    return;
  }
  entries_.insert(it, Entry{value, multiplicity});
}

void Spectrum::add(const Spectrum& other) {
  for (const auto& e : other.entries_) add(e.value, e.multiplicity);
}

bool Spectrum::remove_one(const ExactEigenvalue& value) {
  auto it = std::find_if(entries_.begin(), entries_.end(), [&](const Entry& e) { return e.value == value; });
  if (it == entries_.end()) return false;
  --order_;
  if (--it->multiplicity == 0) entries_.erase(it);
  return true;
}

std::size_t Spectrum::multiplicity_of(const ExactEigenvalue& value) const {
  auto it = std::find_if(entries_.begin(), entries_.end(), [&](const Entry& e) { return e.value == value; });
  return it == entries_.end() ? 0 : it->multiplicity;
}

bool Spectrum::is_integral() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Entry& e) { return e.value.is_integer(); });
}

std::optional<wide_int> Spectrum::exact_sum() const {
  wide_int twice = 0;
  std::map<wide_int, wide_int> radical_weight;
  for (const auto& e : entries_) {
    const auto mult = static_cast<wide_int>(e.multiplicity);
    if (const auto* iv = std::get_if<IntegerValue>(&e.value.form())) {
      twice = checked_add(twice, checked_mul(checked_mul(2, iv->value), mult));
    } else if (const auto* s = std::get_if<Surd>(&e.value.form())) {
      twice = checked_add(twice, checked_mul(s->u, mult));
      radical_weight[s->t] += s->sign * mult;
    } else {
      return std::nullopt;
    }
  }
  for (const auto& [t, w] : radical_weight) {
    if (w != 0) return std::nullopt;
  }
  if (floor_mod(twice, 2) != 0) return std::nullopt;
  return twice / 2;
}

long double Spectrum::numeric_sum() const {
  long double sum = 0;
  for (const auto& e : entries_) sum += numeric_value_ld(e.value) * static_cast<long double>(e.multiplicity);
  return sum;
}

std::vector<double> Spectrum::sorted_values() const {
  std::vector<double> out;
  out.reserve(order_);
  for (const auto& e : entries_) out.insert(out.end(), e.multiplicity, numeric_value(e.value));
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

std::string to_string(const Spectrum& s) {
  std::string out = "{";
  bool first = true;
  for (const auto& e : s.entries()) {
    if (!first) out += ", ";
    first = false;
    out += to_string(e.value);
    if (e.multiplicity != 1) out += " x" + std::to_string(e.multiplicity);
  }
  return out + "}";
}

}  // namespace gwspec
