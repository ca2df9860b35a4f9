/*
Copyright (c) 2026 the rocqtrans developers. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

namespace rocqtrans {

// FNV-1a, the stable 64-bit hash used for seed derivation and config
// fingerprints. Must not change across releases: stores written by one
// build have to resume under another.
std::uint64_t fnv1a64(std::string_view data);

// seed = hash(campaign seed, theorem id, round index, attempt ordinal).
// Campaigns are replayable against the scripted mock because of this.
std::uint64_t derive_seed(std::uint64_t campaign_seed, std::string_view theorem_id,
                          int round_index, int attempt_ordinal);

std::string lower_ascii(std::string_view s);
std::string trim(std::string_view s);
std::string rtrim(std::string_view s);

// True when s[pos..pos+word) equals word and both sides are non-word chars.
// Word chars are [A-Za-z0-9_'] (identifier characters in both source
// languages handled here).
bool word_at(std::string_view s, std::size_t pos, std::string_view word);

std::string read_text_file(const std::filesystem::path& p);
void write_text_file(const std::filesystem::path& p, std::string_view content);

// Current UTC time as ISO-8601 with millisecond precision.
std::string now_iso8601();

// host:port -> pair; throws ConfigError on malformed input.
std::pair<std::string, int> split_host_port(const std::string& address);

}  // namespace rocqtrans
