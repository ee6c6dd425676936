#pragma once

// Per-degree transition tables (Kostka numbers and the symmetric group
// character table), computed once per degree and held in memory. When a
// cache directory is configured, tables are also persisted as one JSON file
// per degree; unreadable or mismatched files are recomputed silently.

#include <map>
#include <string>
#include <vector>

#include "cyclesieve/numbers.hpp"
#include "cyclesieve/partition.hpp"

namespace cyclesieve {

struct DegreeTables {
    int degree = 0;
    std::vector<Partition> partitions;           // decreasing lexicographic
    std::map<Partition, int> index;              // partition -> row/column
    std::vector<std::vector<Int>> kostka;        // kostka[l][m] = K_{lam_l, mu_m}
    std::vector<std::vector<Int>> character;     // character[l][m] = chi^{lam_l}(mu_m)
    std::vector<Int> z;                          // z[m] = z_{mu_m}

    int index_of(const Partition& p) const;
};

// Shared, lazily built; safe to call from multiple threads.
const DegreeTables& degree_tables(int d);

// Empty string disables file persistence (the default). The directory must
// exist; files are named degree_<d>.json.
void set_cache_directory(std::string path);
const std::string& cache_directory();

}  // namespace cyclesieve
