// Copyright 2026 The pgames Authors.
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


#include "pgames/service.hpp"

#include <cmath>
#include <iostream>
#include <optional>

#include <json.hpp>

#include "pgames/jeopardy.hpp"
#include "pgames/kuhn.hpp"
#include "pgames/pdl_text.hpp"
#include "pgames/strategic.hpp"
#include "pgames/weakest_link.hpp"

// After Eigen: <resolv.h>, pulled in by httplib, defines a `_res` macro.
#include <httplib.h>

namespace pgames::service {

using nlohmann::json;

namespace {

class BadRequest : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Response reply(int status, const json& body) { return {status, body.dump(), "application/json"}; }

Response error(int status, const std::string& message, const std::string& field = "") {
  json body = {{"error", message}};
  if (!field.empty()) body["field"] = field;
  return reply(status, body);
}

json parse_body(std::string_view body) {
  json doc = json::parse(body, nullptr, false);
  if (doc.is_discarded()) throw BadRequest("request body is not valid JSON");
  if (!doc.is_object()) throw BadRequest("request body must be a JSON object");
  return doc;
}

std::optional<double> optional_number(const json& doc, const std::string& field) {
  auto it = doc.find(field);
  if (it == doc.end() || it->is_null()) return std::nullopt;
  if (!it->is_number()) throw ParameterError(field, field + " must be a number");
  const double v = it->get<double>();
  if (!std::isfinite(v)) throw ParameterError(field, field + " must be finite");
  return v;
}

double number(const json& doc, const std::string& field) {
  auto v = optional_number(doc, field);
  if (!v) throw ParameterError(field, field + " is required");
  return *v;
}

json strategy_json(const ActionDistribution& dist) {
  json out = json::array();
  for (const auto& entry : dist) out.push_back({{"action", entry.action}, {"prob", entry.prob}});
  return out;
}

json vector_json(const Vector<double>& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v[i]);
  return out;
}

Response advise_jeopardy(const json& doc) {
  const jeopardy::Params params{number(doc, "p1"), number(doc, "p2")};
  params.validate();
  const double player_value = number(doc, "player");
  if (player_value != 1.0 && player_value != 2.0) {
    throw ParameterError("player", "player must be 1 or 2");
  }
  const int player = static_cast<int>(player_value);
  const jeopardy::Advice advice = jeopardy::advise(player, params);
  json out = {{"strategy", strategy_json(advice.strategy)},
              {"branch", advice.branch},
              {"rule", rule_label({advice.strategy, advice.rule})},
              {"equilibrium_case", jeopardy::equilibrium_case(params)}};
  return reply(200, out);
}

Response advise_weakest_link(const json& doc) {
  using weakest_link::Vote;
  const weakest_link::Params params{number(doc, "w"), number(doc, "p1"), number(doc, "p2"),
                                    number(doc, "y1"), number(doc, "y2")};
  params.validate();
  json out = {
      {"paper_rule", weakest_link::to_string(weakest_link::decide_vote_paper(params))},
      {"full_enumeration", weakest_link::to_string(weakest_link::decide_vote_full(params))},
      {"paper_margin", weakest_link::paper_rule_margin(params)},
      {"tie_ev", weakest_link::tie_ev(params)},
      {"ev_full",
       {{"player1", weakest_link::ev_vote_full(Vote::kPlayer1, params)},
        {"player2", weakest_link::ev_vote_full(Vote::kPlayer2, params)}}},
  };
  try {
    out["ev_paper"] = {{"player1", weakest_link::ev_vote_paper(Vote::kPlayer1, params)},
                       {"player2", weakest_link::ev_vote_paper(Vote::kPlayer2, params)}};
    out["degenerate"] = false;
  } catch (const DegenerateInputError& e) {
    out["ev_paper"] = nullptr;
    out["degenerate"] = true;
    out["note"] = params.y1 == 1.0 ? "your vote is irrelevant: both opponents vote for you"
                                   : "neither split-vote case can occur: both opponents vote for each other";
  }
  out["agree"] = out["paper_rule"] == out["full_enumeration"];
  return reply(200, out);
}

std::optional<std::string> query_value(const Query& query, const std::string& key) {
  auto it = query.find(key);
  if (it == query.end()) return std::nullopt;
  return it->second;
}

Response kuhn_strategy(const Query& query) {
  const auto n_text = query_value(query, "n");
  if (!n_text) throw ParameterError("n", "n is required");
  std::size_t used = 0;
  int n = 0;
  try {
    n = std::stoi(*n_text, &used);
  } catch (const std::exception&) {
    throw ParameterError("n", "n must be an integer");
  }
  if (used != n_text->size()) throw ParameterError("n", "n must be an integer");
  const auto certify_text = query_value(query, "certify");
  bool certify = false;
  if (certify_text) {
    if (*certify_text == "true" || *certify_text == "1") {
      certify = true;
    } else if (*certify_text != "false" && *certify_text != "0") {
      throw ParameterError("certify", "certify must be true or false");
    }
  }
  const kuhn::Profile<double> p = kuhn::pdl_strategy<double>(n);
  json out = {{"n", n},
              {"bet_first", vector_json(p.a.bet_first)},
              {"call_vs_bet", vector_json(p.b.call_vs_bet)},
              {"bet_vs_check", vector_json(p.b.bet_vs_check)},
              {"call_after_check_bet", vector_json(p.a.call_after_check_bet)}};
  if (certify) {
    if (n <= kMaxCertifiedCards) {
      out["nashconv"] = kuhn::nashconv(p);
      out["certified"] = true;
    } else {
      out["certified"] = false;
      out["note"] = "nashconv is computed only for n <= " + std::to_string(kMaxCertifiedCards);
    }
  }
  return reply(200, out);
}

Response evaluate_pdl_request(const json& doc) {
  auto text = doc.find("pdl");
  if (text == doc.end() || !text->is_string()) throw ParameterError("pdl", "pdl must be a string");
  Pdl pdl = [&] {
    try {
      return parse_pdl(text->get<std::string>());
    } catch (const PdlSyntaxError&) {
      throw;
    } catch (const DomainError& e) {
      throw ParameterError("pdl", e.what());
    }
  }();
  Assignment assignment;
  auto params = doc.find("params");
  if (params != doc.end()) {
    if (!params->is_object()) throw ParameterError("params", "params must be an object");
    for (const auto& [name, value] : params->items()) {
      if (!value.is_number()) throw ParameterError("params." + name, name + " must be a number");
      assignment[name] = value.get<double>();
    }
  }
  for (const auto& name : pdl.params()) {
    if (!assignment.count(name)) throw ParameterError("params." + name, name + " has no value");
  }
  PdlEvaluation eval = [&] {
    try {
      return evaluate_pdl(pdl, assignment);
    } catch (const DomainError& e) {
      throw ParameterError("params", e.what());
    }
  }();
  json out = {{"strategy", strategy_json(eval.strategy)},
              {"rule", rule_label(eval)},
              {"rule_index", eval.rule ? json(*eval.rule + 1) : json(nullptr)},
              {"depth", pdl.depth()},
              {"width", pdl.width()}};
  return reply(200, out);
}

Response solve_two_by_two(const json& doc) {
  const double a = number(doc, "a"), c = number(doc, "c"), e = number(doc, "e"), g = number(doc, "g");
  const auto b = optional_number(doc, "b"), d = optional_number(doc, "d");
  const auto f = optional_number(doc, "f"), h = optional_number(doc, "h");
  TwoByTwoPayoffs<double> p;
  if (!b && !d && !f && !h) {
    p = TwoByTwoPayoffs<double>::zero_sum(a, c, e, g);
  } else {
    p = {a, number(doc, "b"), c, number(doc, "d"), e, number(doc, "f"), g, number(doc, "h")};
  }
  const TwoByTwoSolution<double> sol = solve_2x2_detailed(p);
  const BimatrixGame<double> game = p.game();
  const PayoffPair<double> u = expected_utility(game, sol.profile);
  json out = {{"row", vector_json(sol.profile.row)},
              {"col", vector_json(sol.profile.col)},
              {"branch", to_string(sol.branch)},
              {"zero_sum", p.is_zero_sum()},
              {"payoffs", {{"row", u.row}, {"col", u.col}}},
              {"max_regret", max_regret(game, sol.profile)}};
  return reply(200, out);
}

}  // namespace

Response handle_request(std::string_view method, std::string_view path, const Query& query,
                        std::string_view body) {
  struct Route {
    std::string_view method;
    std::string_view path;
  };
  static constexpr Route kRoutes[] = {
      {"GET", "/health"},          {"POST", "/advise/jeopardy"}, {"POST", "/advise/weakest-link"},
      {"GET", "/kuhn/strategy"},   {"POST", "/pdl/evaluate"},    {"POST", "/solve/2x2"},
  };
  bool known_path = false;
  for (const auto& route : kRoutes) known_path = known_path || route.path == path;
  if (!known_path) return error(404, "no route for " + std::string(path));
  if (method == "OPTIONS") return {204, "", "text/plain"};

  try {
    if (method == "GET" && path == "/health") return reply(200, {{"status", "ok"}});
    if (method == "GET" && path == "/kuhn/strategy") return kuhn_strategy(query);
    if (method == "POST") {
      if (path == "/advise/jeopardy") return advise_jeopardy(parse_body(body));
      if (path == "/advise/weakest-link") return advise_weakest_link(parse_body(body));
      if (path == "/pdl/evaluate") return evaluate_pdl_request(parse_body(body));
      if (path == "/solve/2x2") return solve_two_by_two(parse_body(body));
    }
    return error(405, std::string(method) + " is not supported on " + std::string(path));
  } catch (const BadRequest& e) {
    return error(400, e.what());
  } catch (const PdlSyntaxError& e) {
    json out = {{"error", e.what()}, {"field", "pdl"}, {"line", e.line()}, {"column", e.column()}};
    return reply(422, out);
  } catch (const ParameterError& e) {
    return error(422, e.what(), e.field());
  } catch (const DomainError& e) {
    return error(422, e.what());
  }
}

void serve(const std::string& host, int port) {
  httplib::Server server;
  const auto bridge = [](const httplib::Request& req, httplib::Response& res) {
    Query query(req.params.begin(), req.params.end());
    const Response r = handle_request(req.method, req.path, query, req.body);
    res.status = r.status;
    res.set_content(r.body, r.content_type);
  };
  server.Get(".*", bridge);
  server.Post(".*", bridge);
  server.Options(".*", bridge);
  server.set_default_headers({{"Access-Control-Allow-Origin", "*"},
                              {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"},
                              {"Access-Control-Allow-Headers", "Content-Type"}});
  if (!server.bind_to_port(host, port)) {
    throw DomainError("cannot listen on " + host + ":" + std::to_string(port));
  }
  std::cerr << "pgames advisor listening on " << host << ":" << port << '\n';
  server.listen_after_bind();
}

}  // namespace pgames::service
