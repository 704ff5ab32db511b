#include "treeperm/series.hpp"

#include <nlohmann/json.hpp>

#include "treeperm/error.hpp"

namespace treeperm {

SeriesTable::SeriesTable(std::string name, std::vector<std::string> vars, Exponents bounds)
    : name_(std::move(name)), vars_(std::move(vars)), bounds_(std::move(bounds)) {
  if (bounds_.empty() || bounds_.size() > 3 || vars_.size() != bounds_.size()) {
    throw Error(ErrorKind::InvalidArgument, "series tables have one to three named indices");
  }
  std::size_t cells = 1;
  for (const auto b : bounds_) cells *= b + 1;
  coeffs_.assign(cells, BigInt(0));
}

bool SeriesTable::in_bounds(const Exponents& e) const {
  if (e.size() != bounds_.size()) {
    throw Error(ErrorKind::InvalidArgument, "expected " + std::to_string(bounds_.size()) +
                                                " exponents, got " + std::to_string(e.size()));
  }
  for (std::size_t d = 0; d < e.size(); ++d) {
    if (e[d] > bounds_[d]) return false;
  }
  return true;
}

std::size_t SeriesTable::offset(const Exponents& e) const {
  std::size_t off = 0;
  for (std::size_t d = 0; d < e.size(); ++d) off = off * (bounds_[d] + 1) + e[d];
  return off;
}

BigInt SeriesTable::at(const Exponents& e) const {
  return in_bounds(e) ? coeffs_[offset(e)] : BigInt(0);
}

BigInt& SeriesTable::ref(const Exponents& e) {
  if (!in_bounds(e)) throw Error(ErrorKind::OutOfRange, "exponent outside table bounds");
  return coeffs_[offset(e)];
}

std::vector<std::pair<SeriesTable::Exponents, BigInt>> SeriesTable::terms() const {
  std::vector<std::pair<Exponents, BigInt>> out;
  Exponents e(bounds_.size(), 0);
  // Row-major order is already increasing lexicographic exponent order.
  for (std::size_t off = 0; off < coeffs_.size(); ++off) {
    if (coeffs_[off] != 0) out.emplace_back(e, coeffs_[off]);
    for (std::size_t d = e.size(); d-- > 0;) {
      if (++e[d] <= bounds_[d]) break;
      e[d] = 0;
    }
  }
  return out;
}

BigInt SeriesTable::row_sum(std::size_t lead) const {
  BigInt sum = 0;
  for (const auto& [e, c] : terms()) {
    if (e.front() == lead) sum += c;
  }
  return sum;
}

std::string SeriesTable::to_text() const {
  std::string out;
  for (const auto& [e, c] : terms()) {
    if (!out.empty()) {
      out += c < 0 ? " - " : " + ";
    } else if (c < 0) {
      out += "-";
    }
    const BigInt mag = c < 0 ? BigInt(-c) : c;
    std::string mono;
    for (std::size_t d = 0; d < e.size(); ++d) {
      if (e[d] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += vars_[d];
      if (e[d] > 1) mono += "^" + std::to_string(e[d]);
    }
    if (mono.empty()) {
      out += mag.str();
    } else if (mag == 1) {
      out += mono;
    } else {
      out += mag.str() + "*" + mono;
    }
  }
  return out.empty() ? "0" : out;
}

std::string SeriesTable::to_json() const {
  nlohmann::ordered_json j;
  j["name"] = name_;
  j["vars"] = vars_;
  j["n"] = bounds_.front();
  auto coeffs = nlohmann::json::array();
  for (const auto& [e, c] : terms()) {
    auto row = nlohmann::json::array();
    for (const auto x : e) row.push_back(x);
    row.push_back(c.str());
    coeffs.push_back(std::move(row));
  }
  j["coeffs"] = std::move(coeffs);
  return j.dump();
}

}  // namespace treeperm
