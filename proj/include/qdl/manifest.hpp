#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace qdl {

inline constexpr const char* kToolVersion = "0.1.0";

// FNV-1a 64-bit content digest.
std::uint64_t fnv1a64(const void* data, std::size_t len);
std::uint64_t fnv1a64(const std::string& text);
// Digest of a file's bytes; throws std::runtime_error when unreadable.
std::uint64_t fnv1a64_file(const std::string& path);
// Digest rendered the way manifests store it: 16 lowercase hex digits.
std::string digest_hex(std::uint64_t digest);

// Reproducibility sidecar written next to every artifact a command produces.
// Holds the argv, the effective seed and thread count, the tool version, and
// content digests of the input and output files. Deliberately carries no
// clock reading, so identical runs produce byte-identical manifests.
struct RunManifest {
    std::vector<std::string> argv;
    bool has_seed = false;
    std::uint64_t seed = 0;
    unsigned threads = 1;
    std::vector<std::pair<std::string, std::string>> inputs;   // path -> digest_hex
    std::vector<std::pair<std::string, std::string>> outputs;  // path -> digest_hex

    void add_input(const std::string& path);   // digests the file now
    void add_output(const std::string& path);  // digests the file now

    std::string to_json() const;
    static RunManifest from_json(const std::string& text);
};

// Sidecar path convention: "<artifact>.manifest.json".
std::string manifest_path_for(const std::string& artifact_path);
// Writes manifest JSON for `artifact_path`'s manifest sidecar; returns the
// sidecar path.
std::string write_manifest(const RunManifest& m, const std::string& artifact_path);

}  // namespace qdl
