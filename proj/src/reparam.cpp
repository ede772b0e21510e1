#include "specgap/reparam.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <map>

#include "specgap/errors.hpp"
#include "specgap/quadrature.hpp"

namespace specgap {

const char* to_string(Convexity c) {
  switch (c) {
    case Convexity::StrictlyConvex: return "strictly convex";
    case Convexity::StrictlyConcave: return "strictly concave";
    case Convexity::Affine: return "affine";
  }
  return "?";
}

double Reparametrization::deriv1_min() const {
  return std::min(deriv1(0.0), deriv1(1.0));
}

double Reparametrization::deriv1_max() const {
  return std::max(deriv1(0.0), deriv1(1.0));
}

namespace {

std::string fmt(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

}  // namespace

Reparametrization make_phi1() {
  const double l2 = std::log(2.0);
  Reparametrization r;
  r.value = [l2](double x) { return std::log(x + 1.0) / l2; };
  r.deriv1 = [l2](double x) { return 1.0 / ((x + 1.0) * l2); };
  r.deriv2 = [l2](double x) { return -1.0 / ((x + 1.0) * (x + 1.0) * l2); };
  r.deriv1_inverse = [l2](double v) { return 1.0 / (v * l2) - 1.0; };
  r.has_deriv1_inverse = true;
  r.convexity = Convexity::StrictlyConcave;
  r.label = "phi1";
  return r;
}

Reparametrization make_phi2() {
  const double em1 = std::expm1(1.0);
  Reparametrization r;
  r.value = [em1](double x) { return std::expm1(x) / em1; };
  r.deriv1 = [em1](double x) { return std::exp(x) / em1; };
  r.deriv2 = [em1](double x) { return std::exp(x) / em1; };
  r.deriv1_inverse = [em1](double v) { return std::log(v * em1); };
  r.has_deriv1_inverse = true;
  r.convexity = Convexity::StrictlyConvex;
  r.label = "phi2";
  return r;
}

Reparametrization make_phi3(double theta) {
  if (!(theta > 0.0))
    throw DomainError("make_phi3: theta must be > 0, got " + fmt(theta));
  const double c = 2.0 * theta + 1.0;
  const double t2 = theta * theta;
  Reparametrization r;
  // conjugate form of sqrt(cx + theta^2) - theta: exact for x near 0, where
  // the direct difference cancels to zero once cx drops below ulp(theta^2)
  r.value = [=](double x) { return c * x / (std::sqrt(c * x + t2) + theta); };
  r.deriv1 = [=](double x) { return c / (2.0 * std::sqrt(c * x + t2)); };
  r.deriv2 = [=](double x) { return -c * c / (4.0 * std::pow(c * x + t2, 1.5)); };
  r.deriv1_inverse = [=](double v) { return c / (4.0 * v * v) - t2 / c; };
  r.has_deriv1_inverse = true;
  r.convexity = Convexity::StrictlyConcave;
  r.label = "phi3:theta=" + fmt(theta);
  return r;
}

Reparametrization make_power_of_phi3(int p, double theta) {
  if (p < 1) throw DomainError("make_power_of_phi3: p must be >= 1, got " + std::to_string(p));
  if (!(theta > 0.0))
    throw DomainError("make_power_of_phi3: theta must be > 0, got " + fmt(theta));
  const Reparametrization base = make_phi3(theta);
  const double e = 1.0 / double(p);
  Reparametrization r;
  r.value = [base, e](double x) { return std::pow(base.value(x), e); };
  // (F^e)' = e F^{e-1} F'; the factor F^{e-1} diverges at x = 0 for p >= 2,
  // which IEEE propagates as +inf. The symbol machinery only needs phi'
  // through its monotone inverse, so that is harmless.
  r.deriv1 = [base, e](double x) {
    return e * std::pow(base.value(x), e - 1.0) * base.deriv1(x);
  };
  r.deriv2 = [base, e](double x) {
    const double f = base.value(x), f1 = base.deriv1(x), f2 = base.deriv2(x);
    return e * std::pow(f, e - 2.0) * (f2 * f + (e - 1.0) * f1 * f1);
  };
  auto d1 = r.deriv1;
  r.deriv1_inverse = [d1](double v) {
    // phi' decreases from +inf (or a finite top for p = 1) to phi'(1).
    return bisect_root([&](double x) { return d1(x) - v; }, 0.0, 1.0, 1e-24, 100);
  };
  r.has_deriv1_inverse = true;
  r.convexity = Convexity::StrictlyConcave;
  r.label = "Phi:p=" + std::to_string(p) + ",theta=" + fmt(theta);
  // F ~ const * x near 0, so phi' = e F^{e-1} F' ~ x^{1/p - 1}.
  r.deriv1_power_at0 = e - 1.0;
  return r;
}

Reparametrization make_exp_family(double a, double gamma) {
  if (!(a > 0.0)) throw DomainError("make_exp_family: a must be > 0, got " + fmt(a));
  if (!(gamma > 0.0 && gamma < 1.0))
    throw DomainError("make_exp_family: gamma must lie in (0,1), got " + fmt(gamma));
  const double eb = (1.0 - gamma) / (std::expm1(a) - a);  // e^b
  const double b = std::log(eb);
  const double c0 = gamma - a * eb;  // linear slope correction
  Reparametrization r;
  r.value = [=](double x) { return std::exp(a * x + b) - eb + c0 * x; };
  r.deriv1 = [=](double x) { return a * std::exp(a * x + b) + c0; };
  r.deriv2 = [=](double x) { return a * a * std::exp(a * x + b); };
  r.deriv1_inverse = [=](double v) { return (std::log((v - c0) / a) - b) / a; };
  r.has_deriv1_inverse = true;
  r.convexity = Convexity::StrictlyConvex;
  r.label = "expfam:a=" + fmt(a) + ",gamma=" + fmt(gamma);
  return r;
}

Reparametrization make_log_family(double a, double gamma) {
  if (!(a > 0.0)) throw DomainError("make_log_family: a must be > 0, got " + fmt(a));
  const double lo = 1.5 - std::log(2.0);  // slope pin attainable only above this
  if (!(gamma > lo && gamma < 1.0))
    throw DomainError("make_log_family: gamma must lie in (3/2 - ln 2, 1) ~ (" + fmt(lo) +
                      ", 1), got " + fmt(gamma));
  // x* in (0,1) with ln(x*+1) - x*/(x*+1) = 1 - gamma; the left side grows
  // from 0 to ln 2 - 1/2.
  const double xs = bisect_root(
      [&](double x) { return std::log1p(x) - x / (x + 1.0) - (1.0 - gamma); }, 0.0, 1.0,
      1e-12, 200);
  const double b = a / xs;
  const double c0 = gamma - a / (a + b);
  Reparametrization r;
  r.value = [=](double x) { return std::log(a * x + b) - std::log(b) + c0 * x; };
  r.deriv1 = [=](double x) { return a / (a * x + b) + c0; };
  r.deriv2 = [=](double x) { return -a * a / ((a * x + b) * (a * x + b)); };
  r.deriv1_inverse = [=](double v) { return (a / (v - c0) - b) / a; };
  r.has_deriv1_inverse = true;
  r.convexity = Convexity::StrictlyConcave;
  r.label = "logfam:a=" + fmt(a) + ",gamma=" + fmt(gamma);
  return r;
}

Reparametrization make_identity() {
  Reparametrization r;
  r.value = [](double x) { return x; };
  r.deriv1 = [](double) { return 1.0; };
  r.deriv2 = [](double) { return 0.0; };
  r.has_deriv1_inverse = false;
  r.convexity = Convexity::Affine;
  r.label = "identity";
  return r;
}

Reparametrization mirrored(const Reparametrization& phi) {
  Reparametrization r;
  auto value = phi.value;
  auto d1 = phi.deriv1;
  auto d2 = phi.deriv2;
  r.value = [value](double x) { return 1.0 - value(1.0 - x); };
  r.deriv1 = [d1](double x) { return d1(1.0 - x); };
  r.deriv2 = [d2](double x) { return -d2(1.0 - x); };
  if (phi.has_deriv1_inverse) {
    auto inv = phi.deriv1_inverse;
    r.deriv1_inverse = [inv](double v) { return 1.0 - inv(v); };
    r.has_deriv1_inverse = true;
  }
  switch (phi.convexity) {
    case Convexity::StrictlyConvex: r.convexity = Convexity::StrictlyConcave; break;
    case Convexity::StrictlyConcave: r.convexity = Convexity::StrictlyConvex; break;
    case Convexity::Affine: r.convexity = Convexity::Affine; break;
  }
  r.deriv1_power_at0 = phi.deriv1_power_at1;
  r.deriv1_power_at1 = phi.deriv1_power_at0;
  r.label = "mirror(" + phi.label + ")";
  return r;
}

bool ValidationReport::all_passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

const ValidationCheck* ValidationReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

ValidationReport validate(const Reparametrization& phi, int grid_points) {
  if (grid_points < 3) throw DomainError("validate: grid must have >= 3 points");
  ValidationReport rep;

  {
    ValidationCheck c;
    c.name = "endpoint value(0) = 0";
    c.worst_value = std::abs(phi.value(0.0));
    c.passed = c.worst_value <= 1e-12;
    rep.checks.push_back(c);
  }
  {
    ValidationCheck c;
    c.name = "endpoint value(1) = 1";
    c.worst_point = 1.0;
    c.worst_value = std::abs(phi.value(1.0) - 1.0);
    c.passed = c.worst_value <= 1e-12;
    rep.checks.push_back(c);
  }
  {
    ValidationCheck c;
    c.name = "deriv1 positive on grid";
    c.passed = true;
    double worst = std::numeric_limits<double>::infinity();
    for (int i = 0; i < grid_points; ++i) {
      const double x = double(i) / (grid_points - 1);
      const double d = phi.deriv1(x);
      if (!(d > 0.0)) c.passed = false;
      if (d < worst) {
        worst = d;
        c.worst_point = x;
      }
    }
    c.worst_value = worst;
    rep.checks.push_back(c);
  }
  {
    ValidationCheck c;
    c.name = "curvature one-signed";
    if (phi.convexity == Convexity::Affine) {
      c.passed = false;
      c.note = "affine: curvature vanishes identically, outside the admissible set";
    } else {
      const double sign = phi.convexity == Convexity::StrictlyConvex ? 1.0 : -1.0;
      c.passed = true;
      for (int i = 0; i < grid_points; ++i) {
        const double x = double(i) / (grid_points - 1);
        const double d = sign * phi.deriv2(x);
        if (!(d > 0.0)) {
          c.passed = false;
          c.worst_point = x;
          c.worst_value = d;
          break;
        }
      }
    }
    rep.checks.push_back(c);
  }
  {
    ValidationCheck c;
    c.name = "deriv1_inverse round-trip";
    if (!phi.has_deriv1_inverse) {
      c.passed = phi.convexity == Convexity::Affine;
      c.note = "no inverse supplied";
    } else {
      c.passed = true;
      std::uint64_t state = 0x9e3779b97f4a7c15ull;  // fixed seed: runs are deterministic
      for (int i = 0; i < 100; ++i) {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        const double u = double(state >> 11) * 0x1.0p-53;
        const double x = 1e-6 + (1.0 - 2e-6) * u;
        const double err = std::abs(phi.deriv1_inverse(phi.deriv1(x)) - x);
        if (err > c.worst_value) {
          c.worst_value = err;
          c.worst_point = x;
        }
      }
      c.passed = c.worst_value <= 1e-10;
    }
    rep.checks.push_back(c);
  }
  return rep;
}

namespace {

double parse_number(const std::string& tok) {
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(tok, &pos);
  } catch (const std::exception&) {
    throw ParseError("phi spec: cannot parse number '" + tok + "'");
  }
  if (pos != tok.size()) throw ParseError("phi spec: trailing junk in number '" + tok + "'");
  return v;
}

std::string trimmed(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t");
  return s.substr(a, b - a + 1);
}

}  // namespace

Reparametrization parse_phi_spec(const std::string& spec) {
  const std::string s = trimmed(spec);
  if (s.empty()) throw ParseError("phi spec: empty string");
  const std::size_t colon = s.find(':');
  const std::string name = trimmed(s.substr(0, colon));
  std::map<std::string, double> kv;
  if (colon != std::string::npos) {
    std::string rest = s.substr(colon + 1);
    std::size_t start = 0;
    while (start <= rest.size()) {
      std::size_t comma = rest.find(',', start);
      const std::string item =
          trimmed(rest.substr(start, comma == std::string::npos ? comma : comma - start));
      if (item.empty()) throw ParseError("phi spec: empty parameter in '" + spec + "'");
      const std::size_t eq = item.find('=');
      if (eq == std::string::npos)
        throw ParseError("phi spec: expected key=value, got '" + item + "'");
      const std::string key = trimmed(item.substr(0, eq));
      if (kv.count(key)) throw ParseError("phi spec: duplicate key '" + key + "'");
      kv[key] = parse_number(trimmed(item.substr(eq + 1)));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
  }

  auto need = [&](std::initializer_list<const char*> keys) {
    for (const char* k : keys)
      if (!kv.count(k)) throw ParseError("phi spec: '" + name + "' needs key '" + k + "'");
    if (kv.size() != keys.size())
      for (const auto& [k, v] : kv) {
        (void)v;
        bool ok = false;
        for (const char* want : keys) ok = ok || k == want;
        if (!ok) throw ParseError("phi spec: unknown key '" + k + "' for '" + name + "'");
      }
  };

  if (name == "phi1" || name == "phi2" || name == "identity") {
    need({});
    if (name == "phi1") return make_phi1();
    if (name == "phi2") return make_phi2();
    return make_identity();
  }
  if (name == "phi3") {
    need({"theta"});
    return make_phi3(kv["theta"]);
  }
  if (name == "Phi") {
    need({"p", "theta"});
    const double pv = kv["p"];
    if (pv != std::floor(pv)) throw ParseError("phi spec: Phi needs integer p");
    return make_power_of_phi3(int(pv), kv["theta"]);
  }
  if (name == "expfam") {
    need({"a", "gamma"});
    return make_exp_family(kv["a"], kv["gamma"]);
  }
  if (name == "logfam") {
    need({"a", "gamma"});
    return make_log_family(kv["a"], kv["gamma"]);
  }
  throw ParseError("phi spec: unknown reparametrization '" + name + "'");
}

}  // namespace specgap
