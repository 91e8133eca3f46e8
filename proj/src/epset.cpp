#include "ugk/epset.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "ugk/errors.hpp"

namespace ugk {

Natural lcm(Natural a, Natural b) { return a / std::gcd(a, b) * b; }

namespace {

template <typename Pred>
EPSet build(Natural threshold, Natural period, Pred member) {
  std::vector<bool> base(threshold), cycle(period);
  for (Natural n = 0; n < threshold; ++n) base[n] = member(n);
  for (Natural n = threshold; n < threshold + period; ++n)
    cycle[n % period] = member(n);
  return EPSet(std::move(base), std::move(cycle));
}

template <typename Op>
EPSet combine(const EPSet& a, const EPSet& b, Op op) {
  Natural t = std::max(a.threshold(), b.threshold());
  Natural p = lcm(a.period(), b.period());
  return build(t, p, [&](Natural n) { return op(a.contains(n), b.contains(n)); });
}

}  // namespace

EPSet::EPSet() : cycle_(1, false) {}

EPSet::EPSet(std::vector<bool> base, std::vector<bool> cycle)
    : base_(std::move(base)), cycle_(std::move(cycle)) {
  if (cycle_.empty()) throw Error("EPSet period must be positive");
  canonicalize();
}

void EPSet::canonicalize() {
  const Natural p = cycle_.size();
  for (Natural d = 1; d <= p; ++d) {
    if (p % d != 0) continue;
    bool ok = true;
    for (Natural i = d; i < p && ok; ++i) ok = cycle_[i] == cycle_[i % d];
    if (ok) {
      cycle_.resize(d);
      break;
    }
  }
  const Natural q = cycle_.size();
  while (!base_.empty() && base_.back() == cycle_[(base_.size() - 1) % q])
    base_.pop_back();
}

EPSet EPSet::all() { return EPSet({}, {true}); }

EPSet EPSet::finite(const std::vector<Natural>& elements) {
  if (elements.empty()) return EPSet();
  Natural mx = *std::max_element(elements.begin(), elements.end());
  std::vector<bool> base(mx + 1, false);
  for (Natural e : elements) base[e] = true;
  return EPSet(std::move(base), {false});
}

EPSet EPSet::progression(Natural start, Natural step) {
  if (step == 0) throw Error("progression step must be positive");
  return build(start, step, [&](Natural n) { return n >= start && (n - start) % step == 0; });
}

EPSet EPSet::cofinite(const std::vector<Natural>& excluded) {
  return finite(excluded).complement();
}

EPSet EPSet::interval(Natural lo, Natural hi) {
  if (hi <= lo) return EPSet();
  return build(hi, 1, [&](Natural n) { return n >= lo && n < hi; });
}

bool EPSet::contains(Natural n) const {
  if (n < base_.size()) return base_[n];
  return cycle_[n % cycle_.size()];
}

bool EPSet::is_empty() const {
  return std::none_of(base_.begin(), base_.end(), [](bool b) { return b; }) &&
         std::none_of(cycle_.begin(), cycle_.end(), [](bool b) { return b; });
}

bool EPSet::is_finite() const {
  return std::none_of(cycle_.begin(), cycle_.end(), [](bool b) { return b; });
}

std::optional<Natural> EPSet::cardinality() const {
  if (!is_finite()) return std::nullopt;
  return static_cast<Natural>(std::count(base_.begin(), base_.end(), true));
}

bool EPSet::is_subset_of(const EPSet& other) const { return minus(other).is_empty(); }

bool EPSet::intersects(const EPSet& other) const { return !intersect(other).is_empty(); }

std::optional<Natural> EPSet::min() const {
  for (Natural n = 0; n < threshold() + period(); ++n)
    if (contains(n)) return n;
  return std::nullopt;
}

std::optional<Natural> EPSet::max() const {
  if (!is_finite()) return std::nullopt;
  for (Natural n = base_.size(); n-- > 0;)
    if (base_[n]) return n;
  return std::nullopt;
}

std::vector<Natural> EPSet::enumerate_up_to(Natural bound) const {
  std::vector<Natural> out;
  for (Natural n = 0; n < bound; ++n) {
    if (n >= threshold() && is_finite()) break;
    if (contains(n)) out.push_back(n);
  }
  return out;
}

std::vector<Natural> EPSet::first(std::size_t count) const {
  std::vector<Natural> out;
  if (count == 0 || is_empty()) return out;
  for (Natural n = 0; out.size() < count; ++n) {
    if (n >= threshold() && is_finite()) break;
    if (contains(n)) out.push_back(n);
  }
  return out;
}

EPSet EPSet::unite(const EPSet& other) const {
  return combine(*this, other, [](bool x, bool y) { return x || y; });
}

EPSet EPSet::intersect(const EPSet& other) const {
  return combine(*this, other, [](bool x, bool y) { return x && y; });
}

EPSet EPSet::minus(const EPSet& other) const {
  return combine(*this, other, [](bool x, bool y) { return x && !y; });
}

EPSet EPSet::complement() const {
  std::vector<bool> base(base_.size()), cycle(cycle_.size());
  for (std::size_t i = 0; i < base_.size(); ++i) base[i] = !base_[i];
  for (std::size_t i = 0; i < cycle_.size(); ++i) cycle[i] = !cycle_[i];
  return EPSet(std::move(base), std::move(cycle));
}

EPSet EPSet::affine_image(Natural coef, std::int64_t offset) const {
  if (is_empty()) return EPSet();
  const std::int64_t lo = static_cast<std::int64_t>(coef * *min()) + offset;
  if (lo < 0) throw Error("affine image would contain negative values");
  if (coef == 0) return singleton(static_cast<Natural>(offset));
  std::int64_t t = static_cast<std::int64_t>(coef * threshold()) + offset;
  Natural threshold_out = t < 0 ? 0 : static_cast<Natural>(t);
  return build(threshold_out, coef * period(), [&](Natural m) {
    std::int64_t d = static_cast<std::int64_t>(m) - offset;
    if (d < 0 || d % static_cast<std::int64_t>(coef) != 0) return false;
    return contains(static_cast<Natural>(d) / coef);
  });
}

EPSet EPSet::affine_preimage(Natural coef, std::int64_t offset) const {
  auto member = [&](Natural n) {
    std::int64_t v = static_cast<std::int64_t>(coef * n) + offset;
    return v >= 0 && contains(static_cast<Natural>(v));
  };
  if (coef == 0) return member(0) ? all() : EPSet();
  std::int64_t need = static_cast<std::int64_t>(threshold()) - offset;
  Natural n0 = 0;
  if (need > 0) n0 = (static_cast<Natural>(need) + coef - 1) / coef;
  return build(n0, period(), member);
}

std::string EPSet::to_string() const {
  if (is_empty()) return "{}";
  if (*this == all()) return "all";
  std::vector<std::string> parts;
  std::vector<Natural> head;
  for (Natural n = 0; n < threshold(); ++n)
    if (base_[n]) head.push_back(n);
  if (!head.empty() || is_finite()) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < head.size(); ++i) os << (i ? "," : "") << head[i];
    os << '}';
    parts.push_back(os.str());
  }
  for (Natural r = 0; r < period(); ++r) {
    if (!cycle_[r]) continue;
    Natural start = threshold() + ((r + period() - threshold() % period()) % period());
    parts.push_back("ap(" + std::to_string(start) + "," + std::to_string(period()) + ")");
  }
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? " | " : "") + parts[i];
  return out;
}

nlohmann::json EPSet::to_json() const {
  nlohmann::json base = nlohmann::json::array(), cycle = nlohmann::json::array();
  for (bool b : base_) base.push_back(b ? 1 : 0);
  for (bool b : cycle_) cycle.push_back(b ? 1 : 0);
  return {{"threshold", threshold()}, {"period", period()}, {"base", base}, {"cycle", cycle}};
}

EPSet EPSet::from_json(const nlohmann::json& j) {
  std::vector<bool> base, cycle;
  for (const auto& b : j.at("base")) base.push_back(b.get<int>() != 0);
  for (const auto& b : j.at("cycle")) cycle.push_back(b.get<int>() != 0);
  if (base.size() != j.at("threshold").get<Natural>() ||
      cycle.size() != j.at("period").get<Natural>())
    throw Error("EPSet JSON: field lengths disagree with threshold/period");
  return EPSet(std::move(base), std::move(cycle));
}

std::strong_ordering operator<=>(const EPSet& a, const EPSet& b) {
  if (auto c = a.threshold() <=> b.threshold(); c != 0) return c;
  if (auto c = a.period() <=> b.period(); c != 0) return c;
  for (std::size_t i = 0; i < a.base_.size(); ++i)
    if (a.base_[i] != b.base_[i]) return a.base_[i] ? std::strong_ordering::greater : std::strong_ordering::less;
  for (std::size_t i = 0; i < a.cycle_.size(); ++i)
    if (a.cycle_[i] != b.cycle_[i]) return a.cycle_[i] ? std::strong_ordering::greater : std::strong_ordering::less;
  return std::strong_ordering::equal;
}

}  // namespace ugk
