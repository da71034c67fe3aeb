#include "gaptlz/symbol.hpp"

#include <nlohmann/json.hpp>


namespace gaptlz {

void SymbolSpec::validate() const {
  if (!(theta0 > 0) || !(theta0 < const_pi()))
    throw DomainError("SymbolSpec: theta0 must lie in (0, pi)");
  if (symmetric_real) {
    for (const auto& [k, wk] : W) {
      if (wk.im != 0)
        throw SymmetryViolation("SymbolSpec: symmetric-real W has complex coefficient");
      auto it = W.find(-k);
      if (it == W.end() || it->second != wk)
        throw SymmetryViolation("SymbolSpec: symmetric-real W needs W_{-k} = W_k");
    }
  }
}

GapParameter GapParameter::from_s(const real_t& s, int n) {
  if (s < 0 || s > 1) throw DomainError("GapParameter: s outside [0,1]");
  GapParameter g;
  g.n = n;
  g.x = (s == 0) ? real_infinity() : -log(s) / n;
  return g;
}

cplx w_eval(const SymbolSpec& spec, const cplx& z) {
  cplx acc = 0;
  for (const auto& [k, wk] : spec.W) {
    if (k >= 0)
      acc += wk * pow(z, real_t(k));
    else
      acc += wk / pow(z, real_t(-k));
  }
  return acc;
}

namespace {

SymbolSpec renormalize(const SymbolSpec& spec) {
  SymbolSpec s;
  s.theta0 = to_precision(spec.theta0);
  s.arc_value = to_precision(spec.arc_value);
  s.gap_value = to_precision(spec.gap_value);
  for (const auto& [k, wk] : spec.W) s.W[k] = to_precision(wk);
  s.symmetric_real = spec.symmetric_real;
  return s;
}

// Laurent coefficients of e^{W(z)} by the exponential power series; the
// coefficients decay factorially, so truncating below the working precision
// leaves the downstream convolutions exact. Cached per (W, precision).
const std::map<int, cplx>& exp_w_coeffs(const std::map<int, cplx>& w) {
  unsigned bits = current_precision_bits();
  unsigned digits = bits_to_digits10(bits) + 5;
  std::string key = std::to_string(bits);
  for (const auto& [k, wk] : w)
    key += "|" + std::to_string(k) + ":" + to_str(wk.re, digits) + ":" +
           to_str(wk.im, digits);
  thread_local std::map<std::string, std::map<int, cplx>> cache;
  auto hit = cache.find(key);
  if (hit != cache.end()) return hit->second;

  real_t cutoff = pow(real_t(2), -int(bits) - 16);
  std::map<int, cplx> total{{0, cplx(1)}};
  std::map<int, cplx> term{{0, cplx(1)}};
  for (int j = 1;; ++j) {
    std::map<int, cplx> next;
    for (const auto& [m, tv] : term)
      for (const auto& [k, wk] : w) {
        cplx add = tv * wk / cplx(real_t(j));
        auto [it, fresh] = next.emplace(m + k, add);
        if (!fresh) it->second += add;
      }
    real_t biggest = 0;
    for (auto it = next.begin(); it != next.end();) {
      real_t a = abs(it->second);
      if (a > biggest) biggest = a;
      if (a < cutoff)
        it = next.erase(it);
      else
        ++it;
    }
    if (next.empty() || biggest < cutoff) break;
    for (const auto& [m, v] : next) {
      auto [it, fresh] = total.emplace(m, v);
      if (!fresh) it->second += v;
    }
    term = std::move(next);
  }
  return cache.emplace(std::move(key), std::move(total)).first->second;
}

// k-th coefficient of the piecewise-constant factor (a on the arc, b on the
// gap): the indicator convolution kernel of the symbol
cplx step_coeff(const SymbolSpec& sp, const cplx& a, const cplx& b, int k) {
  real_t pi = const_pi();
  if (k == 0) return a * cplx(sp.theta0 / pi) + b * cplx(1 - sp.theta0 / pi);
  return (a - b) * cplx(sin(k * sp.theta0) / (pi * k));
}

cplx convolved_coeff(const SymbolSpec& sp, const cplx& a, const cplx& b, int k) {
  cplx acc = 0;
  for (const auto& [m, em] : exp_w_coeffs(sp.W))
    acc += em * step_coeff(sp, a, b, k - m);
  return acc;
}

}  // namespace

cplx fourier_coeff(const SymbolSpec& spec, int k, unsigned precision_bits) {
  PrecisionGuard guard(precision_bits);
  SymbolSpec sp = renormalize(spec);
  real_t pi = const_pi();
  if (sp.w_zero()) {
    if (k == 0)
      return sp.arc_value * cplx(sp.theta0 / pi) +
             sp.gap_value * cplx(1 - sp.theta0 / pi);
    return (sp.arc_value - sp.gap_value) * cplx(sin(k * sp.theta0) / (pi * k));
  }
  return convolved_coeff(sp, sp.arc_value, sp.gap_value, k);
}

cplx fourier_coeff(const SymbolSpec& spec, int k) {
  return fourier_coeff(spec, k, current_precision_bits());
}

cplx ds_fourier_coeff(const SymbolSpec& spec, int k) {
  PrecisionGuard guard(current_precision_bits());
  SymbolSpec sp = renormalize(spec);
  real_t pi = const_pi();
  if (sp.w_zero()) {
    if (k == 0) return cplx(1 - sp.theta0 / pi);
    return cplx(-sin(k * sp.theta0) / (pi * k));
  }
  // d/ds of the gap piece alone: a = 0, b = 1 in the convolution kernel
  return convolved_coeff(sp, cplx(0), cplx(1), k);
}

cplx symbol_eval(const SymbolSpec& spec, const real_t& theta) {
  real_t pi = const_pi();
  // reduce to (-pi, pi]
  real_t t = fmod(theta, 2 * pi);
  if (t > pi) t -= 2 * pi;
  if (t <= -pi) t += 2 * pi;
  real_t d = abs(abs(t) - spec.theta0);
  if (d == 0) throw JumpPointError("symbol_eval: theta at a jump point");
  cplx base = (abs(t) < spec.theta0) ? spec.arc_value : spec.gap_value;
  return base * exp(w_eval(spec, unit(t)));
}

std::string symbol_to_json(const SymbolSpec& spec) {
  nlohmann::json j;
  unsigned digits = bits_to_digits10(current_precision_bits()) + 2;
  j["theta0"] = to_str(spec.theta0, digits);
  if (spec.arc_value == cplx(1) && spec.gap_value.im == 0 &&
      spec.gap_value.re >= 0) {
    j["s"] = to_str(spec.gap_value.re, digits);
  } else {
    j["a"] = {to_str(spec.arc_value.re, digits), to_str(spec.arc_value.im, digits)};
    j["b"] = {to_str(spec.gap_value.re, digits), to_str(spec.gap_value.im, digits)};
  }
  j["W"] = nlohmann::json::array();
  for (const auto& [k, wk] : spec.W) {
    j["W"].push_back({{"k", k},
                      {"re", to_str(wk.re, digits)},
                      {"im", to_str(wk.im, digits)}});
  }
  if (spec.symmetric_real) j["symmetric_real"] = true;
  return j.dump();
}

namespace {

real_t json_real(const nlohmann::json& v) {
  if (v.is_string()) return real_t(v.get<std::string>());
  return real_t(v.dump());  // parse the numeric literal at full precision
}

}  // namespace

SymbolSpec symbol_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  SymbolSpec spec;
  spec.theta0 = json_real(j.at("theta0"));
  if (j.contains("s")) {
    spec.arc_value = cplx(1);
    spec.gap_value = cplx(json_real(j.at("s")));
  } else {
    auto get2 = [](const nlohmann::json& v) {
      if (v.is_array()) return cplx(json_real(v.at(0)), json_real(v.at(1)));
      return cplx(json_real(v));
    };
    if (j.contains("a")) spec.arc_value = get2(j.at("a"));
    if (j.contains("b")) spec.gap_value = get2(j.at("b"));
  }
  if (j.contains("W")) {
    for (const auto& item : j.at("W")) {
      int k = item.at("k").get<int>();
      real_t re = item.contains("re") ? json_real(item.at("re")) : real_t(0);
      real_t im = item.contains("im") ? json_real(item.at("im")) : real_t(0);
      spec.W[k] = cplx(re, im);
    }
  }
  if (j.contains("symmetric_real")) spec.symmetric_real = j.at("symmetric_real").get<bool>();
  spec.validate();
  return spec;
}

}  // namespace gaptlz
