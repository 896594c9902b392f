#pragma once

#include <cstdint>

namespace pruferlab {

// Shared knobs. Every run is deterministic: there is no seed anywhere, and
// two runs with equal configs must produce byte-identical reports.
struct RunConfig {
    int degree_bound = 2;      // D for the bounded Gaussian sweep
    int order_cap = 4096;      // largest constructible ring order
    int iso_cap = 64;          // largest order fed to isomorphism search
    long lattice_cap = 65536;  // most ideals enumerated before giving up
    long groebner_pair_cap = 10000;          // Buchberger S-pair queue
    long gaussian_budget = 400000000;        // poly pairs per Gaussian sweep
    int product_pair_limit = 60;             // corpus pairs in the product sweep
    int content_samples_per_pair = 40;       // content-split samples per product
    bool gaussian_prune = true;              // false: raw full-coefficient sweep
};

}  // namespace pruferlab
