//! Thread pool runner for the exhaustive searches. Shards share nothing and
//! are merged in shard order, so results do not depend on the thread count.

use std::ops::RangeInclusive;

use degspread_core::enumeration::{self, CensusCatalog};
use degspread_core::error::{Error, Result};
use degspread_core::SearchRecord;
use rayon::prelude::*;

pub fn pool(jobs: usize) -> Result<rayon::ThreadPool> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::InvalidArgument(format!("cannot start {jobs} worker threads: {e}")))
}

/// Census catalog of the `n`-gon, one task per shard.
pub fn catalog(pool: &rayon::ThreadPool, n: usize, force: bool) -> Result<CensusCatalog> {
    enumeration::check_polygon(n, force)?;
    let parts: Vec<Result<CensusCatalog>> = pool.install(|| {
        (0..enumeration::shard_count(n)).into_par_iter().map(|s| enumeration::catalog_shard(n, s, force)).collect()
    });
    let mut all = CensusCatalog::new(n);
    for part in parts {
        all.merge(part?);
    }
    Ok(all)
}

/// `MOP(n, k)` for each order in `range`.
pub fn mop_minima(pool: &rayon::ThreadPool, range: RangeInclusive<usize>, k: usize, force: bool) -> Result<Vec<SearchRecord>> {
    range.map(|n| Ok(catalog(pool, n, force)?.min_spread(k))).collect()
}

/// Tree minima for each order in `range`, one task per order.
pub fn tree_minima(pool: &rayon::ThreadPool, range: RangeInclusive<usize>, k: usize) -> Result<Vec<SearchRecord>> {
    pool.install(|| range.into_par_iter().map(|n| enumeration::tree_min_spread(n, k)).collect())
}
