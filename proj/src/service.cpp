#include "cb/service.hpp"

#include "cb/cbpoint.hpp"
#include "cb/fano.hpp"
#include "cb/pencil.hpp"

#include "httplib.h"

#include <chrono>
#include <cmath>

namespace cb {

using nlohmann::json;

std::optional<Method> parse_method(std::string_view name) {
  if (name == "det") return Method::det;
  if (name == "reduced") return Method::reduced;
  if (name == "fano") return Method::fano;
  if (name == "fano-full") return Method::fano_full;
  if (name == "crossratio") return Method::crossratio;
  return std::nullopt;
}

const char* method_name(Method m) {
  switch (m) {
    case Method::det: return "det";
    case Method::reduced: return "reduced";
    case Method::fano: return "fano";
    case Method::fano_full: return "fano-full";
    case Method::crossratio: return "crossratio";
  }
  return "?";
}

namespace {

Rat parse_coordinate(const json& value, const std::string& field) {
  if (value.is_string()) {
    try {
      return parse_rational(value.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw DocumentError(field, e.what());
    }
  }
  if (value.is_number_integer()) {
    return value.is_number_unsigned() ? Rat(Int(std::to_string(value.get<std::uint64_t>())))
                                      : Rat(Int(std::to_string(value.get<std::int64_t>())));
  }
  if (value.is_number_float()) {
    const double d = value.get<double>();
    if (!std::isfinite(d)) throw DocumentError(field, "coordinate is not finite");
    return Rat(d);  // exact dyadic value of the double
  }
  throw DocumentError(field, "coordinate must be a string \"n\" or \"p/q\"");
}

json coords_json(const std::array<Rat, 3>& v) {
  return json::array({to_string(v[0]), to_string(v[1]), to_string(v[2])});
}

json point_json(const ProjPoint& p) { return coords_json(p.coords()); }

}  // namespace

Config8 parse_points_document(const json& doc) {
  if (!doc.is_object() || !doc.contains("points")) throw DocumentError("points", "missing");
  const json& points = doc.at("points");
  if (!points.is_array() || points.size() != 8) {
    throw DocumentError("points", "expected an array of 8 coordinate triples");
  }
  std::vector<ProjPoint> parsed;
  for (std::size_t i = 0; i < 8; ++i) {
    const std::string field = "points[" + std::to_string(i) + "]";
    const json& triple = points[i];
    if (!triple.is_array() || triple.size() != 3) throw DocumentError(field, "expected 3 coordinates");
    std::array<Rat, 3> c;
    for (std::size_t k = 0; k < 3; ++k) {
      c[k] = parse_coordinate(triple[k], field + "[" + std::to_string(k) + "]");
    }
    if (c[0] == 0 && c[1] == 0 && c[2] == 0) throw DocumentError(field, "all coordinates are zero");
    parsed.emplace_back(c[0], c[1], c[2]);
  }
  return Config8({parsed[0], parsed[1], parsed[2], parsed[3], parsed[4], parsed[5], parsed[6],
                  parsed[7]});
}

json points_document(const Config8& c) {
  json points = json::array();
  for (const auto& p : c.points()) points.push_back(point_json(p));
  return {{"points", points}};
}

ComputeRequest parse_compute_request(const json& body) {
  ComputeRequest request{parse_points_document(body), Method::det, std::nullopt};
  if (body.contains("method")) {
    const json& m = body.at("method");
    const auto method = m.is_string() ? parse_method(m.get<std::string>()) : std::nullopt;
    if (!method) throw DocumentError("method", "expected det|reduced|fano|fano-full|crossratio");
    request.method = *method;
  }
  if (body.contains("triple") && !body.at("triple").is_null()) {
    const json& t = body.at("triple");
    if (!t.is_array() || t.size() != 3 || !t[0].is_number_integer() ||
        !t[1].is_number_integer() || !t[2].is_number_integer()) {
      throw DocumentError("triple", "expected three labels");
    }
    Triple triple{t[0].get<int>(), t[1].get<int>(), t[2].get<int>()};
    auto ok = [](int i) { return i >= 1 && i <= 8; };
    if (!ok(triple.i) || !ok(triple.j) || !ok(triple.k) || triple.i == triple.j ||
        triple.j == triple.k || triple.i == triple.k) {
      throw DocumentError("triple", "labels must be distinct and in 1..8");
    }
    request.triple = triple;
  }
  return request;
}

json degeneracy_json(const DegeneracyReport& r) {
  return {{"coincident_pairs", r.coincident_pairs},
          {"collinear_triples", r.collinear_triples},
          {"coconic_sextuples", r.coconic_sextuples},
          {"nondegenerate", r.nondegenerate()}};
}

namespace {

std::vector<Triple> noncollinear_triples(const Config8& c) {
  std::vector<Triple> out;
  for (int i = 1; i <= 8; ++i)
    for (int j = i + 1; j <= 8; ++j)
      for (int k = j + 1; k <= 8; ++k)
        if (bracket(c(i), c(j), c(k)) != 0) out.push_back({i, j, k});
  return out;
}

json triple_json(Triple t) { return json::array({t.i, t.j, t.k}); }

}  // namespace

json compute_payload(const ComputeRequest& request) {
  const Config8& c = request.config;
  const DegeneracyReport& report = c.degeneracy();
  json out;
  out["method"] = method_name(request.method);
  out["degeneracy"] = degeneracy_json(report);
  json fallbacks = json::array();

  const auto nullspace = right_nullspace(cubic_monomial_matrix(c.points()));
  out["pencil_dimension"] = nullspace.size();
  if (nullspace.size() == 2) {
    json basis = json::array();
    for (const auto& v : nullspace) {
      json coeffs = json::array();
      for (const auto& x : v) coeffs.push_back(to_string(x));
      basis.push_back(coeffs);
    }
    out["cubic_basis"] = basis;
  }

  std::optional<ProjPoint> candidate;
  std::string method_used = method_name(request.method);

  auto determinantal = [&](bool reduced) {
    std::vector<Triple> order;
    if (request.triple) order.push_back(*request.triple);
    for (Triple t : noncollinear_triples(c))
      if (!request.triple || !(t == *request.triple)) order.push_back(t);
    for (std::size_t n = 0; n < order.size(); ++n) {
      const Triple t = order[n];
      if (reduced && bracket(c(t.i), c(t.j), c(t.k)) == 0) {
        fallbacks.push_back("triple " + std::to_string(t.i) + std::to_string(t.j) +
                            std::to_string(t.k) + " is collinear");
        continue;
      }
      const auto v = reduced ? p9_reduced_vector(c, t) : p9_determinantal_vector(c, t);
      if (v[0] == 0 && v[1] == 0 && v[2] == 0) {
        fallbacks.push_back("zero vector for triple " + std::to_string(t.i) + std::to_string(t.j) +
                            std::to_string(t.k));
        continue;
      }
      out["triple"] = triple_json(t);
      candidate = canonical(v);
      return;
    }
    // Every triple failed; fall back to the Fano sum.
    const FanoSum sum = p9_fano(c, FanoMode::reduced);
    out["fano_evaluations"] = sum.evaluations;
    const auto& v = sum.vector;
    if (v[0] != 0 || v[1] != 0 || v[2] != 0) {
      fallbacks.push_back("determinantal formula failed for every triple; used the Fano sum");
      method_used = "fano";
      candidate = canonical(v);
    }
  };

  switch (request.method) {
    case Method::det: determinantal(false); break;
    case Method::reduced: determinantal(true); break;
    case Method::fano:
    case Method::fano_full: {
      const FanoSum sum =
          p9_fano(c, request.method == Method::fano ? FanoMode::reduced : FanoMode::full);
      const bool zero = sum.vector[0] == 0 && sum.vector[1] == 0 && sum.vector[2] == 0;
      out["fano_evaluations"] = sum.evaluations;
      out["fano_zero_vector"] = zero;
      if (!zero) candidate = canonical(sum.vector);
      break;
    }
    case Method::crossratio: {
      try {
        const CrossRatioSolution s = solve_cross_ratio(c);
        candidate = s.point;
        out["relabeling"] = s.order;
      } catch (const DegenerateConfiguration& e) {
        fallbacks.push_back(e.what());
      }
      break;
    }
  }
  out["method_used"] = method_used;
  out["fallbacks"] = fallbacks;

  bool ok = false;
  if (candidate) {
    out["candidate"] = point_json(*candidate);
    if (nullspace.size() == 2) {
      const Certification cert = certify_p9(c, *candidate);
      out["certification"] = {
          {"on_pencil", cert.on_pencil},
          {"rank_at_most_8", cert.rank_at_most_8},
          {"cayley_identity", cert.cayley_identity ? json(*cert.cayley_identity) : json(nullptr)},
          {"distinct_from_inputs", cert.distinct_from_inputs},
          {"certified", cert.certified()}};
      ok = cert.certified();
    }
  }
  if (ok) out["p9"] = point_json(*candidate);
  out["hypotheses_hold"] = report.nondegenerate();
  out["status"] = ok ? "ok" : "degenerate";
  return out;
}

namespace {

json error_body(const std::string& field, const std::string& message) {
  return {{"error", message}, {"field", field}};
}

json parse_body(const std::string& body) {
  try {
    return json::parse(body);
  } catch (const json::parse_error& e) {
    throw DocumentError("body", std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace

ServiceResponse handle_compute(const std::string& body) {
  const auto start = std::chrono::steady_clock::now();
  std::optional<ComputeRequest> request;
  try {
    request.emplace(parse_compute_request(parse_body(body)));
  } catch (const DocumentError& e) {
    return {400, error_body(e.field(), e.what())};
  }
  json result = compute_payload(*request);
  const auto elapsed = std::chrono::duration_cast<std::chrono::microseconds>(
      std::chrono::steady_clock::now() - start);
  return {200, {{"result", std::move(result)}, {"meta", {{"elapsed_us", elapsed.count()}}}}};
}

ServiceResponse handle_degeneracy(const std::string& body) {
  try {
    const Config8 c = parse_points_document(parse_body(body));
    return {200, degeneracy_json(c.degeneracy())};
  } catch (const DocumentError& e) {
    return {400, error_body(e.field(), e.what())};
  }
}

ServiceResponse handle_health() { return {200, {{"status", "ok"}}}; }

struct Server::Impl {
  httplib::Server http;
};

Server::Server() : impl_(std::make_unique<Impl>()) {
  auto reply = [](httplib::Response& res, const ServiceResponse& r) {
    res.status = r.status;
    res.set_content(r.body.dump(), "application/json");
  };
  impl_->http.Post("/api/compute", [reply](const httplib::Request& req, httplib::Response& res) {
    reply(res, handle_compute(req.body));
  });
  impl_->http.Post("/api/degeneracy", [reply](const httplib::Request& req, httplib::Response& res) {
    reply(res, handle_degeneracy(req.body));
  });
  impl_->http.Get("/api/health", [reply](const httplib::Request&, httplib::Response& res) {
    reply(res, handle_health());
  });
}

Server::~Server() = default;

int Server::bind(const std::string& host, int port) {
  if (port == 0) return impl_->http.bind_to_any_port(host);
  return impl_->http.bind_to_port(host, port) ? port : -1;
}

void Server::listen() { impl_->http.listen_after_bind(); }

void Server::stop() { impl_->http.stop(); }

}  // namespace cb
