#include "zklat/catalog.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "zklat/errors.hpp"

namespace zklat {

namespace detail {
extern const std::string_view kBundledCatalog;
}

namespace {

std::string fnv1a(std::string_view text) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

ResidueVector row_from_json(const nlohmann::json& j, const Modulus& mod, const char* field) {
    if (!j.is_array()) throw InputError(std::string("catalog field ") + field + " must be an array");
    std::vector<Residue> v;
    for (const auto& x : j) {
        const auto r = x.get<std::int64_t>();
        if (r < 0 || r >= mod.value())
            throw InputError(std::string("catalog field ") + field + " has residue out of range");
        v.push_back(r);
    }
    return ResidueVector(mod, std::move(v));
}

}  // namespace

CatalogEntry entry_from_json(const nlohmann::json& j) {
    try {
        const auto name = j.at("name").get<std::string>();
        std::int64_t m = 0;
        if (j.contains("modulus") && !j.at("modulus").is_null()) {
            m = j.at("modulus").get<std::int64_t>();
        } else {
            m = 2 * j.at("k").get<std::int64_t>();
        }
        const Modulus mod(m);
        if (j.contains("k") && !j.at("k").is_null() && 2 * j.at("k").get<std::int64_t>() != m)
            throw InputError("catalog entry " + name + ": k and modulus disagree");
        NegacirculantSpec spec(mod, row_from_json(j.at("rows_a"), mod, "rows_a"),
                               row_from_json(j.at("rows_b"), mod, "rows_b"));
        CatalogClaims claims;
        const auto& c = j.at("claims");
        claims.self_dual = c.value("self_dual", false);
        claims.type_ii = c.value("type_ii", false);
        if (c.contains("extremal") && !c.at("extremal").is_null()) claims.extremal = c.at("extremal").get<bool>();
        return CatalogEntry{name, std::move(spec), claims, j.value("source", std::string{})};
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("malformed catalog entry: ") + e.what());
    }
}

nlohmann::json entry_to_json(const CatalogEntry& e) {
    nlohmann::json j;
    j["name"] = e.name;
    j["modulus"] = e.modulus().value();
    j["k"] = e.modulus().is_even() ? nlohmann::json(e.modulus().k()) : nlohmann::json(nullptr);
    j["rows_a"] = std::vector<Residue>(e.spec.first_row_a.entries().begin(), e.spec.first_row_a.entries().end());
    j["rows_b"] = std::vector<Residue>(e.spec.first_row_b.entries().begin(), e.spec.first_row_b.entries().end());
    j["claims"] = {{"self_dual", e.claims.self_dual}, {"type_ii", e.claims.type_ii}};
    j["claims"]["extremal"] = e.claims.extremal ? nlohmann::json(*e.claims.extremal) : nlohmann::json(nullptr);
    j["source"] = e.source;
    return j;
}

Catalog::Catalog(std::vector<CatalogEntry> entries, std::string version)
    : entries_(std::move(entries)), version_(std::move(version)) {
    std::set<std::string> names;
    for (const auto& e : entries_)
        if (!names.insert(e.name).second) throw InputError("duplicate catalog name " + e.name);
}

Catalog Catalog::from_json(const nlohmann::json& doc) {
    if (!doc.is_array()) throw InputError("catalog must be a JSON array");
    std::vector<CatalogEntry> entries;
    for (const auto& j : doc) entries.push_back(entry_from_json(j));
    return Catalog(std::move(entries), fnv1a(doc.dump()));
}

Catalog Catalog::from_text(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(std::string("catalog is not valid JSON: ") + e.what());
    }
    auto c = from_json(doc);
    c.version_ = fnv1a(text);
    return c;
}

Catalog Catalog::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw NotFoundError("cannot open catalog file " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return from_text(ss.str());
}

Catalog Catalog::bundled() { return from_text(detail::kBundledCatalog); }

Catalog Catalog::load_default() {
    if (const char* p = std::getenv("ZKLAT_CATALOG"); p != nullptr && *p != '\0') return from_file(p);
    return bundled();
}

const CatalogEntry* Catalog::try_find(std::string_view name) const {
    for (const auto& e : entries_)
        if (e.name == name) return &e;
    return nullptr;
}

const CatalogEntry& Catalog::find(std::string_view name) const {
    if (const auto* e = try_find(name)) return *e;
    throw NotFoundError("no catalog entry named " + std::string(name));
}

const CatalogEntry& Catalog::seed_for(std::int64_t k) const {
    for (const auto& e : entries_)
        if (e.source == "artifact-search" && e.length() == 8 && e.modulus().value() == 2 * k) return e;
    throw NotFoundError("no length-8 seed code over Z_" + std::to_string(2 * k) + " in the catalog");
}

nlohmann::json Catalog::to_json() const {
    auto doc = nlohmann::json::array();
    for (const auto& e : entries_) doc.push_back(entry_to_json(e));
    return doc;
}

}  // namespace zklat
