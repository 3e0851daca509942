#include "mappeel/verify.hpp"

#include <sstream>

#include "mappeel/enumerate.hpp"
#include "mappeel/errors.hpp"
#include "mappeel/parallel.hpp"
#include "mappeel/series.hpp"

namespace mappeel {

namespace {

VerificationReport compare(const std::string& name, int N, const UniSeries& lhs, const UniSeries& rhs) {
  VerificationReport r{name, N, true, std::nullopt};
  for (int n = 0; n <= N; ++n) {
    const Integer a = lhs.coeff(n), b = rhs.coeff(n);
    if (a != b) {
      r.passed = false;
      r.first_failure = Failure{n, std::nullopt, a, b};
      break;
    }
  }
  return r;
}

VerificationReport compare(const std::string& name, int N, const BiSeries& lhs, const BiSeries& rhs) {
  VerificationReport r{name, N, true, std::nullopt};
  for (int n = 0; n <= N; ++n) {
    const auto pmax = static_cast<int>(std::max(lhs.ybound(static_cast<std::size_t>(n)), rhs.ybound(static_cast<std::size_t>(n))));
    for (int p = 0; p <= pmax; ++p) {
      const Integer a = lhs.coeff(n, p), b = rhs.coeff(n, p);
      if (a != b) {
        r.passed = false;
        r.first_failure = Failure{n, p, a, b};
        return r;
      }
    }
  }
  return r;
}

UniSeries x_times(const UniSeries& a) { return truncate(multiply_by_x(a), a.order()); }

VerificationReport quad_lastcar(int N) {
  const UniSeries q1 = quad_counts(N + 1);
  const UniSeries k = last_car_kernel(q1);
  const UniSeries q = truncate(q1, static_cast<std::size_t>(N));
  const UniSeries rhs = UniSeries::monomial(static_cast<std::size_t>(N), 2, 2) + Integer(6) * x_times(k);
  return compare("quad-lastcar", N, point_x(q), rhs);
}

VerificationReport quad_kp(int N) {
  const UniSeries q = quad_counts(N);
  const UniSeries qd = point_x(q);
  const UniSeries u = Integer(2) * qd - Integer(3) * q;
  const UniSeries rhs = Integer(4) * x_times(u) + Integer(3) * (u * u) + UniSeries::monomial(q.order(), 2);
  return compare("quad-kp", N, qd - q, rhs);
}

VerificationReport tri_lastcar(int N) {
  const UniSeries t1 = tri_counts(N + 1);
  const UniSeries k = last_car_kernel(t1);
  const UniSeries t = truncate(t1, static_cast<std::size_t>(N));
  return compare("tri-lastcar", N, Integer(3) * point_x(t) - Integer(4) * t, Integer(2) * k);
}

VerificationReport tri_kp(int N) {
  const UniSeries t = tri_counts(N);
  const UniSeries td = point_x(t);
  const UniSeries u = Integer(6) * td - Integer(8) * t + UniSeries::monomial(t.order(), 1);
  return compare("tri-kp", N, td - t, u * u);
}

VerificationReport quad_bivariate(int N) {
  // Checked on the ladder table so the equation is not just replaying its own solver.
  const auto order = static_cast<std::size_t>(N);
  const BiSeries q = quad_boundary_table_tutte(N, quad_counts(N));
  const UniSeries k = last_car_kernel(quad_counts(N + 1));
  const BiSeries qd = point_x(q);
  BiSeries x = BiSeries::quad(order);
  x.set(1, 0, 1);
  const BiSeries inner = sub(sub(scale(3, qd), scale(2, q)), point_y(q));
  const BiSeries rhs = add(add(x, scale(6, shift(mul(qd, k), 0, 1))), scale(2, shift(inner, 1, 1)));
  return compare("quad-bivariate", N, qd, rhs);
}

VerificationReport tri_bivariate(int N) {
  const auto order = static_cast<std::size_t>(N);
  std::vector<std::size_t> ext(order + 1, 0);
  for (std::size_t n = 1; n <= order; ++n) ext[n] = 3 * n - 2;
  // one spare y-degree so shift(., 0, 1) stays in range
  const BiSeries t = tri_boundary_table(N).table.rebound(ext);
  const UniSeries kx = divide_by_x(last_car_kernel(tri_counts(N + 2)));
  const BiSeries td = point_x(t);
  const BiSeries lhs = add(sub(sub(scale(6, td), scale(2, point_y(t))), scale(6, t)), point_y(shift(t, 0, 1)));
  const BiSeries tail = sub(sub(scale(4, td), scale(3, t)), point_y(t));
  const BiSeries rhs = add(scale(4, shift(mul(td, kx), 0, 1)), shift(tail, 0, 1));
  return compare("tri-bivariate", N, lhs, rhs);
}

VerificationReport quad_columns(int N) {
  return compare("quad-columns", N, quad_boundary_table(N).column(1), quad_counts(N));
}

VerificationReport tri_columns(int N) {
  const BiSeries t = tri_boundary_table(N).table;
  const UniSeries c = tri_counts(N);
  VerificationReport r{"tri-columns", N, true, std::nullopt};
  for (int n = 0; n <= N; ++n)
    for (int p = 1; p <= 3; ++p) {
      const Integer a = t.coeff(n, p), b = c.coeff(n);
      if (a != b) {
        r.passed = false;
        r.first_failure = Failure{n, p, a, b};
        return r;
      }
    }
  return r;
}

}  // namespace

const std::vector<std::string>& identity_names() {
  static const std::vector<std::string> names = {"quad-lastcar", "quad-kp",        "tri-lastcar",  "tri-kp",
                                                 "quad-bivariate", "tri-bivariate", "quad-columns", "tri-columns"};
  return names;
}

VerificationReport verify_identity(const std::string& name, int N) {
  if (N < 2) throw UsageError("verify: order must be >= 2");
  if (name == "quad-lastcar") return quad_lastcar(N);
  if (name == "quad-kp") return quad_kp(N);
  if (name == "tri-lastcar") return tri_lastcar(N);
  if (name == "tri-kp") return tri_kp(N);
  if (name == "quad-bivariate") return quad_bivariate(N);
  if (name == "tri-bivariate") return tri_bivariate(N);
  if (name == "quad-columns") return quad_columns(N);
  if (name == "tri-columns") return tri_columns(N);
  throw UsageError("unknown identity '" + name + "'");
}

std::vector<VerificationReport> verify_all(int N) {
  const auto& names = identity_names();
  std::vector<VerificationReport> out(names.size());
  parallel_for(names.size(), [&](std::size_t i) { out[i] = verify_identity(names[i], N); });
  return out;
}

nlohmann::json to_json(const VerificationReport& r) {
  nlohmann::json j;
  j["identity"] = r.identity;
  j["order"] = r.order;
  j["status"] = r.passed ? "pass" : "fail";
  if (r.first_failure) {
    const Failure& f = *r.first_failure;
    j["first_failure"] = {{"n", f.n},
                          {"p", f.p ? nlohmann::json(*f.p) : nlohmann::json(nullptr)},
                          {"lhs", f.lhs.get_str()},
                          {"rhs", f.rhs.get_str()}};
  } else {
    j["first_failure"] = nullptr;
  }
  return j;
}

std::string to_text(const VerificationReport& r) {
  std::ostringstream os;
  os << r.identity << " order=" << r.order << ' ' << (r.passed ? "pass" : "FAIL");
  if (r.first_failure) {
    const Failure& f = *r.first_failure;
    os << " n=" << f.n;
    if (f.p) os << " p=" << *f.p;
    os << " lhs=" << f.lhs.get_str() << " rhs=" << f.rhs.get_str();
  }
  return os.str();
}

}  // namespace mappeel
