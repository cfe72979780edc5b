#include "affgr/weight.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "affgr/errors.hpp"

namespace affgr {

namespace {

std::string join(const Coeffs& c) {
  std::string out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(c[i]);
  }
  return out;
}

}  // namespace

std::int64_t RootVector::height() const { return std::accumulate(coeffs.begin(), coeffs.end(), std::int64_t{0}); }

bool RootVector::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](auto x) { return x == 0; });
}

bool RootVector::nonnegative() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](auto x) { return x >= 0; });
}

std::string RootVector::to_string() const { return join(coeffs); }

Weight::Weight(DatumPtr datum, Coeffs coeffs) : datum_(std::move(datum)), coeffs_(std::move(coeffs)) {
  if (!datum_) throw DomainError("weight without a root datum");
  if (static_cast<int>(coeffs_.size()) != datum_->rank())
    throw DomainError("weight has " + std::to_string(coeffs_.size()) + " coordinates, datum " + datum_->label() +
                      " has rank " + std::to_string(datum_->rank()));
}

Weight Weight::zero(DatumPtr datum) {
  const auto n = datum->rank();
  return Weight(std::move(datum), Coeffs(n, 0));
}

Weight Weight::fundamental(DatumPtr datum, int i) {
  Coeffs c(datum->rank(), 0);
  c.at(i) = 1;
  return Weight(std::move(datum), std::move(c));
}

Weight Weight::rho(DatumPtr datum) {
  const auto n = datum->rank();
  return Weight(std::move(datum), Coeffs(n, 1));
}

bool Weight::dominant() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](auto x) { return x >= 0; });
}

bool Weight::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](auto x) { return x == 0; });
}

std::string Weight::to_string() const { return join(coeffs_); }

void Weight::require_same(const Weight& o) const {
  if (!(*datum_ == *o.datum_)) throw DomainError("weights belong to different root data");
}

Weight Weight::operator+(const Weight& o) const {
  require_same(o);
  Coeffs c = coeffs_;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.coeffs_[i];
  return Weight(datum_, std::move(c));
}

Weight Weight::operator-(const Weight& o) const {
  require_same(o);
  Coeffs c = coeffs_;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= o.coeffs_[i];
  return Weight(datum_, std::move(c));
}

Weight Weight::operator+(const RootVector& r) const {
  if (static_cast<int>(r.coeffs.size()) != rank()) throw DomainError("root vector rank mismatch");
  Coeffs w = datum_->root_to_weight(r.coeffs);
  for (std::size_t i = 0; i < w.size(); ++i) w[i] += coeffs_[i];
  return Weight(datum_, std::move(w));
}

Weight Weight::operator-(const RootVector& r) const {
  if (static_cast<int>(r.coeffs.size()) != rank()) throw DomainError("root vector rank mismatch");
  Coeffs w = datum_->root_to_weight(r.coeffs);
  for (std::size_t i = 0; i < w.size(); ++i) w[i] = coeffs_[i] - w[i];
  return Weight(datum_, std::move(w));
}

Weight parse_weight(DatumPtr datum, std::string_view literal) {
  Coeffs c;
  std::size_t start = 0;
  for (;;) {
    const auto pos = literal.find(',', start);
    auto token = literal.substr(start, pos == std::string_view::npos ? literal.npos : pos - start);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size())
      throw ParseError("bad weight literal '" + std::string(literal) + "'");
    c.push_back(v);
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  if (static_cast<int>(c.size()) != datum->rank())
    throw ParseError("weight literal '" + std::string(literal) + "' has " + std::to_string(c.size()) +
                     " entries but " + datum->label() + " has rank " + std::to_string(datum->rank()));
  return Weight(std::move(datum), std::move(c));
}

}  // namespace affgr
