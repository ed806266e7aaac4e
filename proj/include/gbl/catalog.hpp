#pragma once

#include "gbl/diagram.hpp"
#include "gbl/json_io.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace gbl {

enum class EntryKind { matrix, diagram, bundle };
std::string to_string(EntryKind k);

struct CatalogEntry {
  std::string name;
  EntryKind kind = EntryKind::matrix;
  std::string description;
  std::string file;    // file name inside the catalog directory
  std::string sha256;  // of the shipped file, from the manifest
};

/// Entries in a fixed order; sha256 is empty (see load_manifest).
std::vector<CatalogEntry> catalog_entries();

/// Generates the payload of an entry from its construction. Throws Error on
/// unknown names.
Json build_catalog_entry(const std::string& name);

/// Directory holding the shipped catalog: $GBL_CATALOG_DIR if set, otherwise
/// the data directory recorded at build time.
std::filesystem::path default_catalog_dir();

/// Manifest entries with checksums, read from manifest.json in dir.
std::vector<CatalogEntry> load_manifest(const std::filesystem::path& dir);

/// Reads a shipped entry and checks it against the manifest checksum;
/// throws Error on mismatch or unknown name.
Json load_catalog_entry(const std::string& name, const std::filesystem::path& dir);

/// Writes every generated entry plus manifest.json into dir.
void write_catalog(const std::filesystem::path& dir);

/// Named diagrams used by the catalog.
LinkDiagram hopf_link(int sign = 1);
LinkDiagram borromean_rings();
LinkDiagram torus_link_2(int crossings);
/// Two-strand string link whose closure is the Whitehead link.
LinkDiagram whitehead_string_link();
LinkDiagram whitehead_link();
SeifertMatrix trefoil_matrix();
/// Single-component staircase matrix with `pairs` pairs, every free entry set to fill.
SeifertMatrix staircase_matrix(const std::vector<int>& eps, long fill);
/// Bundle of a Whitehead double of the closed link j: one pair per component,
/// both derived links equal to j with a zero-framed parallel of that component.
Bundle whitehead_double_bundle(const LinkDiagram& j, const std::vector<int>& eps);

}  // namespace gbl
