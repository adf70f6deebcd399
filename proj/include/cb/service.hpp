#pragma once

#include "cb/config.hpp"

#include "json.hpp"

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>

namespace cb {

enum class Method { det, reduced, fano, fano_full, crossratio };

std::optional<Method> parse_method(std::string_view name);
const char* method_name(Method m);

/// A malformed request or points document; field() names the offending member.
class DocumentError : public std::invalid_argument {
 public:
  DocumentError(std::string field, const std::string& problem)
      : std::invalid_argument(field + ": " + problem), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

/// {"points": [[x, y, z] x 8]} with each coordinate a string "n" or "p/q".
/// JSON numbers are also accepted; floating values convert to the exact
/// dyadic rational they denote.
Config8 parse_points_document(const nlohmann::json& doc);
nlohmann::json points_document(const Config8& c);

struct ComputeRequest {
  Config8 config;
  Method method = Method::det;
  std::optional<Triple> triple;
};

/// Request body: a points document plus optional "method" and "triple".
ComputeRequest parse_compute_request(const nlohmann::json& body);

/// Deterministic result of a computation. Carries "status" ("ok" or
/// "degenerate"), the degeneracy report, the pencil basis, certification and
/// evaluation counters. Timing is never part of this payload.
nlohmann::json compute_payload(const ComputeRequest& request);

nlohmann::json degeneracy_json(const DegeneracyReport& r);

struct ServiceResponse {
  int status;
  nlohmann::json body;
};

/// POST /api/compute: {"result": payload, "meta": {"elapsed_us": ...}};
/// 400 with {"error", "field"} on validation failure.
ServiceResponse handle_compute(const std::string& body);
/// POST /api/degeneracy: the degeneracy report of a points document.
ServiceResponse handle_degeneracy(const std::string& body);
/// GET /api/health.
ServiceResponse handle_health();

/// HTTP front end for the handlers above.
class Server {
 public:
  Server();
  ~Server();
  Server(const Server&) = delete;
  Server& operator=(const Server&) = delete;

  /// Binds host:port (port 0 picks a free port); returns the bound port or -1.
  int bind(const std::string& host, int port);
  /// Blocks until stop() is called.
  void listen();
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace cb
