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


#include "pgames/bundled.hpp"

#include <map>
#include <mutex>

#include "bundled_data.hpp"
#include "pgames/pdl_text.hpp"

namespace pgames {

namespace {

const std::map<std::string, std::string_view, std::less<>>& table() {
  static const std::map<std::string, std::string_view, std::less<>> kTable = [] {
    std::map<std::string, std::string_view, std::less<>> t;
    for (const auto& entry : internal::kBundledSheets) t.emplace(entry.name, entry.text);
    return t;
  }();
  return kTable;
}

}  // namespace

const std::vector<std::string>& bundled_names() {
  static const std::vector<std::string> kNames = [] {
    std::vector<std::string> names;
    for (const auto& entry : internal::kBundledSheets) names.emplace_back(entry.name);
    return names;
  }();
  return kNames;
}

std::string_view bundled_text(std::string_view name) {
  auto it = table().find(name);
  if (it == table().end()) throw DomainError("no bundled cheat sheet named '" + std::string(name) + "'");
  return it->second;
}

const Pdl& bundled_pdl(std::string_view name) {
  static std::mutex mu;
  static std::map<std::string, Pdl, std::less<>> cache;
  const std::string_view text = bundled_text(name);
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(name);
  if (it == cache.end()) it = cache.emplace(std::string(name), parse_pdl(text)).first;
  return it->second;
}

}  // namespace pgames
