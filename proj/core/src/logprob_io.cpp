// Copyright (c) 2026, The asrkit Authors. All rights reserved.
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

#include "asrkit/logprob_io.hpp"

#include <bit>
#include <cstdint>
#include <cstring>

#include "asrkit/error.hpp"
#include "asrkit/text_format.hpp"
#include "json.hpp"

namespace asrkit {
namespace {

constexpr std::size_t kHeaderBytes = 4 + 4 + 4 + 8;

template <class UInt>
void put_le(std::string& out, UInt value) {
  for (std::size_t i = 0; i < sizeof(UInt); ++i) {
    out.push_back(static_cast<char>((value >> (8 * i)) & 0xFF));
  }
}

template <class UInt>
UInt get_le(std::string_view bytes, std::size_t offset) {
  UInt value = 0;
  for (std::size_t i = 0; i < sizeof(UInt); ++i) {
    value |= static_cast<UInt>(static_cast<unsigned char>(bytes[offset + i])) << (8 * i);
  }
  return value;
}

}  // namespace

std::string encode_logprobs_binary(const LogProbMatrix& lp) {
  std::string out;
  out.reserve(kHeaderBytes + lp.values().size() * 4);
  put_le<std::uint32_t>(out, static_cast<std::uint32_t>(lp.frames()));
  put_le<std::uint32_t>(out, static_cast<std::uint32_t>(lp.vocab()));
  put_le<std::uint32_t>(out, static_cast<std::uint32_t>(lp.blank()));
  put_le<std::uint64_t>(out, std::bit_cast<std::uint64_t>(lp.frame_duration_s()));
  for (double v : lp.values()) {
    put_le<std::uint32_t>(out, std::bit_cast<std::uint32_t>(static_cast<float>(v)));
  }
  return out;
}

LogProbMatrix decode_logprobs_binary(std::string_view bytes) {
  if (bytes.size() < kHeaderBytes) throw ValidationError("log-prob file: truncated header");
  const auto frames = get_le<std::uint32_t>(bytes, 0);
  const auto vocab = get_le<std::uint32_t>(bytes, 4);
  const auto blank = get_le<std::uint32_t>(bytes, 8);
  const double frame_duration = std::bit_cast<double>(get_le<std::uint64_t>(bytes, 12));
  const std::size_t count = static_cast<std::size_t>(frames) * vocab;
  if (bytes.size() != kHeaderBytes + count * 4) {
    throw ValidationError("log-prob file: expected " + std::to_string(kHeaderBytes + count * 4) +
                          " bytes for " + std::to_string(frames) + "x" + std::to_string(vocab) +
                          ", got " + std::to_string(bytes.size()));
  }
  std::vector<double> values(count);
  for (std::size_t i = 0; i < count; ++i) {
    values[i] = std::bit_cast<float>(get_le<std::uint32_t>(bytes, kHeaderBytes + 4 * i));
  }
  return LogProbMatrix(frames, vocab, std::move(values), blank, frame_duration);
}

std::string encode_logprobs_json(const LogProbMatrix& lp) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t t = 0; t < lp.frames(); ++t) {
    const auto row = lp.row(t);
    rows.push_back(std::vector<double>(row.begin(), row.end()));
  }
  nlohmann::json doc = {{"blank_index", lp.blank()},
                        {"frame_duration_s", lp.frame_duration_s()},
                        {"log_probs", rows}};
  return doc.dump() + "\n";
}

LogProbMatrix decode_logprobs_json(std::string_view text) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("log-prob JSON: ") + e.what());
  }
  try {
    const auto blank = doc.at("blank_index").get<std::size_t>();
    const double frame_duration =
        doc.value("frame_duration_s", LogProbMatrix::kDefaultFrameDuration);
    const auto& rows = doc.at("log_probs");
    if (!rows.is_array() || rows.empty()) {
      throw ValidationError("log-prob JSON: 'log_probs' must be a non-empty array");
    }
    const std::size_t vocab = rows.front().size();
    std::vector<double> values;
    values.reserve(rows.size() * vocab);
    for (std::size_t t = 0; t < rows.size(); ++t) {
      if (!rows[t].is_array() || rows[t].size() != vocab) {
        throw ValidationError("log-prob JSON: row " + std::to_string(t) + " has the wrong width");
      }
      for (const auto& v : rows[t]) values.push_back(v.get<double>());
    }
    return LogProbMatrix(rows.size(), vocab, std::move(values), blank, frame_duration);
  } catch (const json::exception& e) {
    throw ValidationError(std::string("log-prob JSON: ") + e.what());
  }
}

LogProbMatrix load_logprobs_file(const std::string& path, const LogProbLoadOptions& options) {
  const std::string bytes = read_file(path);
  const bool is_json = path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0;
  LogProbMatrix lp = is_json ? decode_logprobs_json(bytes) : decode_logprobs_binary(bytes);
  if (options.check_normalization) lp.check_normalized(options.tolerance);
  return lp;
}

AlignRequest parse_align_request(std::string_view text) {
  using nlohmann::json;
  try {
    const json doc = json::parse(text);
    AlignRequest request;
    request.target = doc.at("target").get<std::vector<std::int64_t>>();
    if (auto it = doc.find("words"); it != doc.end()) {
      for (const auto& w : *it) {
        request.words.push_back({w.at("begin").get<std::size_t>(), w.at("end").get<std::size_t>(),
                                 w.value("text", std::string())});
      }
    }
    if (auto it = doc.find("segment_breaks"); it != doc.end()) {
      request.segment_breaks = it->get<std::vector<std::size_t>>();
    }
    request.task = parse_align_task(doc.value("task", std::string("asr")));
    return request;
  } catch (const json::exception& e) {
    throw ValidationError(std::string("alignment request: ") + e.what());
  }
}

}  // namespace asrkit
