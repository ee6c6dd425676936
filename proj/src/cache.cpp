#include "cyclesieve/cache.hpp"

#include <fstream>
#include <memory>
#include <mutex>
#include <stdexcept>

#include <json.hpp>

#include "cyclesieve/characters.hpp"
#include "cyclesieve/tableau.hpp"

namespace cyclesieve {

namespace {

constexpr int kCacheFormatVersion = 1;

std::mutex g_mutex;
std::string g_cache_dir;
std::map<int, std::unique_ptr<DegreeTables>> g_tables;

using json = nlohmann::json;

json triples_of(const DegreeTables& t, const std::vector<std::vector<Int>>& mat) {
    json rows = json::array();
    for (size_t l = 0; l < mat.size(); ++l)
        for (size_t m = 0; m < mat[l].size(); ++m) {
            if (mat[l][m] == 0) continue;
            rows.push_back({t.partitions[l].parts(), t.partitions[m].parts(),
                            mat[l][m].convert_to<long long>()});
        }
    return rows;
}

bool matrix_from_triples(const DegreeTables& t, const json& rows,
                         std::vector<std::vector<Int>>& mat) {
    size_t k = t.partitions.size();
    mat.assign(k, std::vector<Int>(k, Int(0)));
    for (const auto& row : rows) {
        if (!row.is_array() || row.size() != 3) return false;
        Partition a(row[0].get<std::vector<int>>());
        Partition b(row[1].get<std::vector<int>>());
        auto ia = t.index.find(a);
        auto ib = t.index.find(b);
        if (ia == t.index.end() || ib == t.index.end()) return false;
        mat[static_cast<size_t>(ia->second)][static_cast<size_t>(ib->second)] =
            row[2].get<long long>();
    }
    return true;
}

std::string file_for_degree(int d) {
    return g_cache_dir + "/degree_" + std::to_string(d) + ".json";
}

bool try_load(DegreeTables& t) {
    if (g_cache_dir.empty()) return false;
    std::ifstream in(file_for_degree(t.degree));
    if (!in) return false;
    try {
        json doc = json::parse(in);
        if (doc.at("format_version").get<int>() != kCacheFormatVersion) return false;
        if (doc.at("degree").get<int>() != t.degree) return false;
        return matrix_from_triples(t, doc.at("kostka"), t.kostka) &&
               matrix_from_triples(t, doc.at("character"), t.character);
    } catch (const json::exception&) {
        return false;
    } catch (const std::invalid_argument&) {
        return false;
    }
}

void try_store(const DegreeTables& t) {
    if (g_cache_dir.empty()) return;
    json doc;
    doc["format_version"] = kCacheFormatVersion;
    doc["degree"] = t.degree;
    doc["kostka"] = triples_of(t, t.kostka);
    doc["character"] = triples_of(t, t.character);
    std::ofstream out(file_for_degree(t.degree));
    if (out) out << doc.dump(1) << '\n';  // write errors are non-fatal
}

void compute(DegreeTables& t) {
    size_t k = t.partitions.size();
    t.kostka.assign(k, std::vector<Int>(k, Int(0)));
    t.character.assign(k, std::vector<Int>(k, Int(0)));
    for (size_t l = 0; l < k; ++l)
        for (size_t m = 0; m < k; ++m) {
            t.kostka[l][m] = kostka_number(t.partitions[l], t.partitions[m].parts());
            t.character[l][m] = mn_character(t.partitions[l], t.partitions[m]);
        }
}

}  // namespace

int DegreeTables::index_of(const Partition& p) const {
    auto it = index.find(p);
    if (it == index.end()) throw std::invalid_argument("DegreeTables: partition of wrong size");
    return it->second;
}

const DegreeTables& degree_tables(int d) {
    if (d < 0) throw std::invalid_argument("degree_tables: degree must be nonnegative");
    std::lock_guard<std::mutex> lock(g_mutex);
    auto it = g_tables.find(d);
    if (it != g_tables.end()) return *it->second;

    auto t = std::make_unique<DegreeTables>();
    t->degree = d;
    t->partitions = partitions_of(d);
    for (size_t i = 0; i < t->partitions.size(); ++i)
        t->index[t->partitions[i]] = static_cast<int>(i);
    t->z.reserve(t->partitions.size());
    for (const auto& p : t->partitions) t->z.push_back(z_lambda(p));

    if (!try_load(*t)) {
        compute(*t);
        try_store(*t);
    }
    auto& slot = g_tables[d];
    slot = std::move(t);
    return *slot;
}

void set_cache_directory(std::string path) {
    std::lock_guard<std::mutex> lock(g_mutex);
    g_cache_dir = std::move(path);
    g_tables.clear();  // force reload under the new policy
}

const std::string& cache_directory() {
    return g_cache_dir;
}

}  // namespace cyclesieve
