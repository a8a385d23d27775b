#include "qdl/manifest.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace qdl {

std::uint64_t fnv1a64(const void* data, std::size_t len) {
    const auto* p = static_cast<const unsigned char*>(data);
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (std::size_t i = 0; i < len; ++i) {
        h ^= p[i];
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::uint64_t fnv1a64(const std::string& text) { return fnv1a64(text.data(), text.size()); }

std::uint64_t fnv1a64_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("fnv1a64_file: cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return fnv1a64(buf.str());
}

std::string digest_hex(std::uint64_t digest) {
    static const char* hex = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i) {
        s[static_cast<std::size_t>(i)] = hex[digest & 0xf];
        digest >>= 4;
    }
    return s;
}

void RunManifest::add_input(const std::string& path) {
    inputs.emplace_back(path, digest_hex(fnv1a64_file(path)));
}

void RunManifest::add_output(const std::string& path) {
    outputs.emplace_back(path, digest_hex(fnv1a64_file(path)));
}

std::string RunManifest::to_json() const {
    nlohmann::json j;
    j["version"] = kToolVersion;
    j["argv"] = argv;
    if (has_seed) j["seed"] = seed;
    j["threads"] = threads;
    auto files = [](const std::vector<std::pair<std::string, std::string>>& v) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& [path, digest] : v) arr.push_back({{"path", path}, {"fnv1a64", digest}});
        return arr;
    };
    j["inputs"] = files(inputs);
    j["outputs"] = files(outputs);
    return j.dump(2) + "\n";
}

RunManifest RunManifest::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    RunManifest m;
    m.argv = j.at("argv").get<std::vector<std::string>>();
    if (j.contains("seed")) {
        m.has_seed = true;
        m.seed = j.at("seed").get<std::uint64_t>();
    }
    m.threads = j.at("threads").get<unsigned>();
    auto files = [](const nlohmann::json& arr) {
        std::vector<std::pair<std::string, std::string>> v;
        for (const auto& e : arr)
            v.emplace_back(e.at("path").get<std::string>(), e.at("fnv1a64").get<std::string>());
        return v;
    };
    m.inputs = files(j.at("inputs"));
    m.outputs = files(j.at("outputs"));
    return m;
}

std::string manifest_path_for(const std::string& artifact_path) {
    return artifact_path + ".manifest.json";
}

std::string write_manifest(const RunManifest& m, const std::string& artifact_path) {
    std::string path = manifest_path_for(artifact_path);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("write_manifest: cannot write " + path);
    out << m.to_json();
    return path;
}

}  // namespace qdl
