#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace swarmsim::cli {

/// Record of what the tool produced in an output directory: the scenario
/// reference ("case:N" or a file path), the seed, the directory itself,
/// every emitted file (basenames, sorted, unique), and a hash of the exact
/// canonical spec JSON the command ran with.
struct RunManifest {
    std::string scenario;
    std::uint64_t seed = 0;
    std::string out_dir;
    std::vector<std::string> files;
    std::string spec_hash;
};

/// 64-bit FNV-1a of the bytes, as 16 lowercase hex digits.
std::string fnv1a64_hex(const std::string& bytes);

/// Pretty JSON with sorted keys and a trailing newline; byte-deterministic.
std::string manifest_to_json(const RunManifest& m);

/// Inverse of manifest_to_json; throws std::runtime_error on malformed text.
RunManifest manifest_from_json(const std::string& text);

/// Fold the file list of dir/manifest.json (when present and readable) into
/// m.files, then sort and deduplicate. Unreadable manifests are ignored.
void merge_existing_files(RunManifest& m);

/// Write m to m.out_dir/manifest.json atomically (temp file + rename).
void write_manifest(const RunManifest& m);

}  // namespace swarmsim::cli
