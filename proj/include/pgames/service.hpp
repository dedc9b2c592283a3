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


// HTTP/JSON advisor. handle_request is the whole application; serve() only
// binds it to a socket.
//
//   GET  /health
//   POST /advise/jeopardy      {"p1", "p2", "player"}
//   POST /advise/weakest-link  {"w", "p1", "p2", "y1", "y2"}
//   GET  /kuhn/strategy?n=N[&certify=true]
//   POST /pdl/evaluate         {"pdl": text, "params": {name: value}}
//   POST /solve/2x2            {"a".."h"}; b, d, f, h may all be omitted for
//                              a zero-sum game
//
// Errors: 400 {"error"} for malformed JSON, 422 {"error", "field"} for an
// invalid parameter, 404 for unknown routes.

#ifndef PGAMES_SERVICE_HPP_
#define PGAMES_SERVICE_HPP_

#include <map>
#include <string>
#include <string_view>

namespace pgames::service {

struct Response {
  int status = 200;
  std::string body;
  std::string content_type = "application/json";
};

using Query = std::multimap<std::string, std::string>;

// Largest deck for which /kuhn/strategy computes NashConv.
inline constexpr int kMaxCertifiedCards = 200;

Response handle_request(std::string_view method, std::string_view path, const Query& query,
                        std::string_view body);

// Blocks until the server stops. Throws DomainError when the port cannot be
// bound.
void serve(const std::string& host, int port);

}  // namespace pgames::service

#endif  // PGAMES_SERVICE_HPP_
