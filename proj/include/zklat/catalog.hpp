#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "zklat/constructions.hpp"

namespace zklat {

struct CatalogClaims {
    bool self_dual = false;
    bool type_ii = false;
    std::optional<bool> extremal;  // absent when extremality is undefined (odd modulus)
};

struct CatalogEntry {
    std::string name;
    NegacirculantSpec spec;
    CatalogClaims claims;
    std::string source;  // "published" or "artifact-search"

    const Modulus& modulus() const noexcept { return spec.modulus; }
    std::size_t length() const noexcept { return spec.code_length(); }
    LinearCode code() const { return four_negacirculant_code(spec); }
};

/// Immutable list of named four-negacirculant codes, loaded from JSON.
class Catalog {
public:
    explicit Catalog(std::vector<CatalogEntry> entries, std::string version = {});

    static Catalog from_json(const nlohmann::json& doc);
    static Catalog from_text(std::string_view text);
    static Catalog from_file(const std::string& path);
    /// The copy compiled into the library from data/catalog.json.
    static Catalog bundled();
    /// ZKLAT_CATALOG if set, the bundled copy otherwise.
    static Catalog load_default();

    const std::vector<CatalogEntry>& entries() const noexcept { return entries_; }
    /// Throws NotFoundError for unknown names.
    const CatalogEntry& find(std::string_view name) const;
    const CatalogEntry* try_find(std::string_view name) const;

    /// Length-8 Type II seed for Z_2k, from the artifact-search entries.
    const CatalogEntry& seed_for(std::int64_t k) const;

    /// Content hash of the source text, reported alongside results.
    const std::string& version() const noexcept { return version_; }

    nlohmann::json to_json() const;

private:
    std::vector<CatalogEntry> entries_;
    std::string version_;
};

nlohmann::json entry_to_json(const CatalogEntry& e);
CatalogEntry entry_from_json(const nlohmann::json& j);

}  // namespace zklat
