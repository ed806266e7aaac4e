#include "gbl/catalog.hpp"

#include "gbl/errors.hpp"
#include "gbl/sha256.hpp"

#include <cstdlib>

#ifndef GBL_CATALOG_DIR
#define GBL_CATALOG_DIR "data/catalog"
#endif

namespace gbl {

namespace {

struct Recipe {
  const char* name;
  EntryKind kind;
  const char* description;
};

const std::vector<Recipe>& recipes() {
  static const std::vector<Recipe> list = {
      {"hopf", EntryKind::diagram, "positive Hopf link"},
      {"hopf-negative", EntryKind::diagram, "negative Hopf link"},
      {"torus-link-2-4", EntryKind::diagram, "(2,4) torus link, linking number 2"},
      {"unlink-2", EntryKind::diagram, "two-component unlink"},
      {"unlink-3", EntryKind::diagram, "three-component unlink"},
      {"borromean", EntryKind::diagram, "Borromean rings, closure of (s1 s2^-1)^3"},
      {"beta", EntryKind::diagram, "two-strand string link whose closure is the Whitehead link"},
      {"whitehead-link", EntryKind::diagram, "Whitehead link, closure of beta"},
      {"trefoil-matrix", EntryKind::matrix, "Seifert matrix of the trefoil"},
      {"staircase-7", EntryKind::matrix, "three-pair staircase matrix, free entries 7"},
      {"wd-matrix-2", EntryKind::matrix, "Seifert matrix of a two-component Whitehead double, clasps (1,0)"},
      {"wd-matrix-3", EntryKind::matrix, "Seifert matrix of a three-component Whitehead double, clasps (1,1,1)"},
      {"l-beta", EntryKind::bundle, "two-component link built from cables of beta, with derived links"},
      {"wd-whitehead", EntryKind::bundle, "Whitehead double of the Whitehead link, with derived links"},
      {"wd-borromean", EntryKind::bundle, "Whitehead double of the Borromean rings, with derived links"},
  };
  return list;
}

LinkDiagram braid_closure(std::size_t n, const std::vector<int>& word) { return closure(braid_string_link(n, word)); }

std::string file_name(const std::string& name) { return name + ".json"; }

}  // namespace

std::string to_string(EntryKind k) {
  switch (k) {
    case EntryKind::matrix: return "matrix";
    case EntryKind::diagram: return "diagram";
    case EntryKind::bundle: return "bundle";
  }
  return "unknown";
}

LinkDiagram hopf_link(int sign) { return braid_closure(2, {sign, sign}); }

LinkDiagram borromean_rings() { return braid_closure(3, {1, -2, 1, -2, 1, -2}); }

LinkDiagram torus_link_2(int crossings) { return braid_closure(2, std::vector<int>(static_cast<std::size_t>(crossings), 1)); }

LinkDiagram whitehead_string_link() {
  // Reduced alternating five-crossing diagram: one self crossing on strand 1
  // and four crossings between the strands, two of each sign.
  std::vector<Strand> strands = {
      {"1", {{0, true}, {1, false}, {2, true}, {0, false}, {3, true}, {4, false}}},
      {"2", {{2, false}, {1, true}, {3, false}, {4, true}}},
  };
  std::vector<Crossing> crossings = {{0, 0, -1}, {1, 0, 1}, {0, 1, 1}, {0, 1, -1}, {1, 0, -1}};
  return LinkDiagram(DiagramKind::string_link, std::move(strands), std::move(crossings));
}

LinkDiagram whitehead_link() { return closure(whitehead_string_link()); }

SeifertMatrix trefoil_matrix() { return SeifertMatrix({2}, IntMatrix::from_rows({{-1, 1}, {0, -1}})); }

SeifertMatrix staircase_matrix(const std::vector<int>& eps, long fill) {
  const std::size_t r = eps.size();
  IntMatrix a(2 * r, 2 * r);
  for (std::size_t i = 0; i < r; ++i) {
    a(2 * i, 2 * i + 1) = eps[i];
    a(2 * i + 1, 2 * i) = 1 - eps[i];
    for (std::size_t j = i + 1; j < r; ++j) {
      a(2 * i, 2 * j + 1) = fill;
      a(2 * i + 1, 2 * j + 1) = fill;
      a(2 * j + 1, 2 * i) = fill;
      a(2 * j + 1, 2 * i + 1) = fill;
    }
  }
  return SeifertMatrix({2 * r}, a);
}

Bundle whitehead_double_bundle(const LinkDiagram& j, const std::vector<int>& eps) {
  Bundle b;
  b.matrix = whitehead_double_matrix(j.strand_count(), eps);
  for (const auto& label : j.labels()) {
    LinkDiagram with_copy = pushoff(j, label);
    b.derived.push_back(DerivedPair{with_copy, with_copy});
  }
  return b;
}

std::vector<CatalogEntry> catalog_entries() {
  std::vector<CatalogEntry> out;
  for (const auto& r : recipes()) out.push_back(CatalogEntry{r.name, r.kind, r.description, file_name(r.name), ""});
  return out;
}

Json build_catalog_entry(const std::string& name) {
  if (name == "hopf") return to_json(hopf_link(1));
  if (name == "hopf-negative") return to_json(hopf_link(-1));
  if (name == "torus-link-2-4") return to_json(torus_link_2(4));
  if (name == "unlink-2") return to_json(LinkDiagram::unlink(2));
  if (name == "unlink-3") return to_json(LinkDiagram::unlink(3));
  if (name == "borromean") return to_json(borromean_rings());
  if (name == "beta") return to_json(whitehead_string_link());
  if (name == "whitehead-link") return to_json(whitehead_link());
  if (name == "trefoil-matrix") return to_json(trefoil_matrix());
  if (name == "staircase-7") return to_json(staircase_matrix({1, 0, 1}, 7));
  if (name == "wd-matrix-2") return to_json(whitehead_double_matrix(2, {1, 0}));
  if (name == "wd-matrix-3") return to_json(whitehead_double_matrix(3, {1, 1, 1}));
  if (name == "l-beta") return to_json(build_l_beta_bundle(whitehead_string_link()));
  if (name == "wd-whitehead") return to_json(whitehead_double_bundle(whitehead_link(), {1, 1}));
  if (name == "wd-borromean") return to_json(whitehead_double_bundle(borromean_rings(), {1, 1, 1}));
  throw Error("no catalog entry named '" + name + "'");
}

std::filesystem::path default_catalog_dir() {
  if (const char* env = std::getenv("GBL_CATALOG_DIR"); env && *env) return env;
  return GBL_CATALOG_DIR;
}

std::vector<CatalogEntry> load_manifest(const std::filesystem::path& dir) {
  Json manifest = parse_json(read_file(dir / "manifest.json"));
  std::vector<CatalogEntry> out;
  try {
    for (const auto& e : manifest.at("entries")) {
      CatalogEntry entry;
      entry.name = e.at("name").get<std::string>();
      const std::string kind = e.at("kind").get<std::string>();
      if (kind == "matrix") {
        entry.kind = EntryKind::matrix;
      } else if (kind == "diagram") {
        entry.kind = EntryKind::diagram;
      } else if (kind == "bundle") {
        entry.kind = EntryKind::bundle;
      } else {
        throw ParseError("unknown entry kind '" + kind + "'");
      }
      entry.description = e.at("description").get<std::string>();
      entry.file = e.at("file").get<std::string>();
      entry.sha256 = e.at("sha256").get<std::string>();
      out.push_back(std::move(entry));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad catalog manifest: ") + e.what());
  }
  return out;
}

Json load_catalog_entry(const std::string& name, const std::filesystem::path& dir) {
  for (const auto& entry : load_manifest(dir)) {
    if (entry.name != name) continue;
    std::string bytes = read_file(dir / entry.file);
    std::string actual = sha256_hex(bytes);
    if (actual != entry.sha256) {
      throw Error("checksum mismatch for catalog entry '" + name + "': manifest " + entry.sha256 + ", file " + actual);
    }
    return parse_json(bytes);
  }
  throw Error("no catalog entry named '" + name + "'");
}

void write_catalog(const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  Json manifest;
  manifest["entries"] = Json::array();
  for (const auto& entry : catalog_entries()) {
    std::string bytes = dump(build_catalog_entry(entry.name));
    write_file(dir / entry.file, bytes);
    Json e;
    e["name"] = entry.name;
    e["kind"] = to_string(entry.kind);
    e["description"] = entry.description;
    e["file"] = entry.file;
    e["sha256"] = sha256_hex(bytes);
    manifest["entries"].push_back(std::move(e));
  }
  write_file(dir / "manifest.json", dump(manifest));
}

}  // namespace gbl
