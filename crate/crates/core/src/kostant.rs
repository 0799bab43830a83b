//! Kostant's partition function Pₙ(ν): the number of multisets of exactly n
//! positive roots summing to ν.
//!
//! The memoized recurrence walks the positive roots in the fixed table order,
//! consuming a multiplicity of the current root at each step:
//!
//! ```text
//! count(ν, k, n) = Σ_{c=0..n} count(ν − c·β_k, k+1, n−c),   count(0, ·, 0) = 1
//! ```
//!
//! with Pₙ(ν) = count(ν, 0, n). Arguments outside the root lattice or with a
//! negative coordinate count zero. Memo keys are integer root-coordinate
//! vectors packed into machine words; counts are arbitrary-precision.
//!
//! The memo sits behind a read/write lock: lookups may race with inserts, but
//! the recurrence is purely functional, so any value returned is final and
//! correct, and results are bit-identical across worker counts. A
//! single-writer table per worker with a post-hoc [`PartitionTable::merge_from`]
//! is equally supported.
//!
//! [`partition_brute_force`] is an independent oracle that never touches the
//! table: it enumerates nondecreasing index sequences directly.

use std::collections::HashMap;
use std::io::{Read, Write};
use std::sync::RwLock;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootsys::{RootSystem, Weight};

/// Bumped whenever the recurrence or key encoding changes; persisted caches
/// carrying another version are refused.
pub const RECURRENCE_VERSION: &str = "kpf-1";

const CACHE_SCHEMA: &str = "partition-cache/1";

/// Coordinates are packed 16 bits each, up to rank 8.
const MAX_PACKED_RANK: usize = 8;
const MAX_COORD: i64 = u16::MAX as i64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
struct MemoKey {
    packed: u128,
    cutoff: u8,
    parts: u32,
}

fn pack(coords: &[i64]) -> u128 {
    assert!(coords.len() <= MAX_PACKED_RANK);
    let mut p = 0u128;
    for (i, &c) in coords.iter().enumerate() {
        assert!(
            (0..=MAX_COORD).contains(&c),
            "partition argument coordinate {c} outside the supported range 0..=65535"
        );
        p |= (c as u128) << (16 * i);
    }
    p
}

fn unpack(p: u128, rank: usize) -> Vec<i64> {
    (0..rank)
        .map(|i| ((p >> (16 * i)) & 0xffff) as i64)
        .collect()
}

/// Memoized partition-function values for one root system.
#[derive(Debug)]
pub struct PartitionTable {
    system: String,
    rank: usize,
    roots: Vec<Vec<i64>>,
    heights: Vec<i64>,
    max_height: i64,
    memo: RwLock<HashMap<MemoKey, BigUint>>,
}

impl PartitionTable {
    pub fn new(rs: &RootSystem) -> PartitionTable {
        assert!(
            rs.rank() <= MAX_PACKED_RANK,
            "partition tables support rank <= {MAX_PACKED_RANK}"
        );
        let roots = rs.positive_root_coords().to_vec();
        let heights: Vec<i64> = roots.iter().map(|r| r.iter().sum()).collect();
        let max_height = *heights.last().expect("at least one positive root");
        PartitionTable {
            system: rs.label(),
            rank: rs.rank(),
            roots,
            heights,
            max_height,
            memo: RwLock::new(HashMap::new()),
        }
    }

    pub fn system(&self) -> &str {
        &self.system
    }

    pub fn len(&self) -> usize {
        self.memo.read().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Pₙ(ν) for a weight; zero off the root lattice.
    pub fn partition_weight(&self, nu: &Weight, parts: u64) -> BigUint {
        match nu.root_coords_i64() {
            Some(coords) => self.partition_coords(&coords, parts),
            None => BigUint::zero(),
        }
    }

    /// Pₙ(ν) for integral root coordinates; zero on any negative coordinate.
    pub fn partition_coords(&self, coords: &[i64], parts: u64) -> BigUint {
        assert_eq!(coords.len(), self.rank);
        if coords.iter().any(|&c| c < 0) {
            return BigUint::zero();
        }
        let height: i64 = coords.iter().sum();
        // every part has height >= 1 and <= height of the highest root
        if parts as i64 > height || (parts as i64) * self.max_height < height {
            return BigUint::zero();
        }
        self.count(coords, 0, parts as u32)
    }

    fn count(&self, coords: &[i64], cutoff: usize, parts: u32) -> BigUint {
        let height: i64 = coords.iter().sum();
        if parts == 0 {
            return if height == 0 {
                BigUint::one()
            } else {
                BigUint::zero()
            };
        }
        if height == 0 || cutoff >= self.roots.len() {
            return BigUint::zero();
        }
        // remaining roots have heights in [heights[cutoff], max_height]
        if (parts as i64) * self.max_height < height
            || (parts as i64) * self.heights[cutoff] > height
        {
            return BigUint::zero();
        }

        let key = MemoKey {
            packed: pack(coords),
            cutoff: cutoff as u8,
            parts,
        };
        if let Some(v) = self.memo.read().unwrap().get(&key) {
            return v.clone();
        }

        let beta = &self.roots[cutoff];
        let mut total = BigUint::zero();
        let mut arg = coords.to_vec();
        let mut c = 0u32;
        loop {
            total += self.count(&arg, cutoff + 1, parts - c);
            c += 1;
            if c > parts {
                break;
            }
            let mut ok = true;
            for (a, b) in arg.iter_mut().zip(beta) {
                *a -= b;
                if *a < 0 {
                    ok = false;
                }
            }
            if !ok {
                break;
            }
        }

        self.memo.write().unwrap().insert(key, total.clone());
        total
    }

    /// Absorb another table's entries (single-writer-per-worker mode).
    /// Both tables must describe the same system; colliding keys must agree,
    /// which the purely functional recurrence guarantees.
    pub fn merge_from(&self, other: &PartitionTable) {
        assert_eq!(self.system, other.system);
        let theirs = other.memo.read().unwrap();
        let mut ours = self.memo.write().unwrap();
        for (k, v) in theirs.iter() {
            if let Some(existing) = ours.get(k) {
                debug_assert_eq!(existing, v);
            } else {
                ours.insert(*k, v.clone());
            }
        }
    }

    /// Serialize the top-level memo entries (cutoff 0, i.e. the published
    /// Pₙ(ν) values) as a versioned, self-describing cache.
    pub fn save_cache<W: Write>(&self, mut out: W) -> Result<()> {
        let memo = self.memo.read().unwrap();
        let mut entries: Vec<CacheEntry> = memo
            .iter()
            .filter(|(k, _)| k.cutoff == 0)
            .map(|(k, v)| CacheEntry {
                nu: unpack(k.packed, self.rank),
                parts: k.parts,
                count: v.to_string(),
            })
            .collect();
        entries.sort_by(|a, b| (&a.nu, a.parts).cmp(&(&b.nu, b.parts)));
        let file = CacheFile {
            schema: CACHE_SCHEMA.to_string(),
            recurrence: RECURRENCE_VERSION.to_string(),
            system: self.system.clone(),
            entries,
        };
        let json = serde_json::to_string(&file).map_err(|e| Error::CacheCorrupt(e.to_string()))?;
        out.write_all(json.as_bytes())
            .map_err(|e| Error::CacheCorrupt(e.to_string()))?;
        Ok(())
    }

    /// Load entries saved by [`save_cache`](Self::save_cache), refusing
    /// version or system mismatches. Returns the number of entries inserted.
    pub fn load_cache<R: Read>(&self, mut input: R) -> Result<usize> {
        let mut buf = String::new();
        input
            .read_to_string(&mut buf)
            .map_err(|e| Error::CacheCorrupt(e.to_string()))?;
        let file: CacheFile =
            serde_json::from_str(&buf).map_err(|e| Error::CacheCorrupt(e.to_string()))?;
        if file.schema != CACHE_SCHEMA || file.recurrence != RECURRENCE_VERSION {
            return Err(Error::CacheMismatch(format!(
                "cache carries {}/{}, engine expects {}/{}",
                file.schema, file.recurrence, CACHE_SCHEMA, RECURRENCE_VERSION
            )));
        }
        if file.system != self.system {
            return Err(Error::CacheMismatch(format!(
                "cache built for {}, table describes {}",
                file.system, self.system
            )));
        }
        let mut inserted = 0;
        let mut memo = self.memo.write().unwrap();
        for e in &file.entries {
            if e.nu.len() != self.rank || e.nu.iter().any(|&c| !(0..=MAX_COORD).contains(&c)) {
                return Err(Error::CacheCorrupt(format!(
                    "entry has malformed coordinates {:?}",
                    e.nu
                )));
            }
            let count: BigUint = e
                .count
                .parse()
                .map_err(|_| Error::CacheCorrupt(format!("bad count {:?}", e.count)))?;
            let key = MemoKey {
                packed: pack(&e.nu),
                cutoff: 0,
                parts: e.parts,
            };
            if let Some(existing) = memo.get(&key) {
                if *existing != count {
                    return Err(Error::CacheCorrupt(format!(
                        "entry for {:?} parts {} disagrees with the in-memory value",
                        e.nu, e.parts
                    )));
                }
            } else {
                memo.insert(key, count);
                inserted += 1;
            }
        }
        Ok(inserted)
    }
}

#[derive(Serialize, Deserialize)]
struct CacheFile {
    schema: String,
    recurrence: String,
    system: String,
    entries: Vec<CacheEntry>,
}

#[derive(Serialize, Deserialize)]
struct CacheEntry {
    nu: Vec<i64>,
    parts: u32,
    count: String,
}

/// Domain caps for the brute-force oracle.
#[derive(Debug, Clone, Copy)]
pub struct OracleCaps {
    pub max_parts: u64,
    /// Height cap as a multiple of the highest-root height.
    pub max_height_multiple: u64,
}

impl Default for OracleCaps {
    fn default() -> Self {
        OracleCaps {
            max_parts: 12,
            max_height_multiple: 12,
        }
    }
}

/// Exhaustive oracle: enumerates nondecreasing sequences of `parts`
/// positive-root indices and counts those summing to ν, never touching
/// [`PartitionTable`].
pub fn partition_brute_force(
    rs: &RootSystem,
    nu: &Weight,
    parts: u64,
    caps: OracleCaps,
) -> Result<BigUint> {
    if parts > caps.max_parts {
        return Err(Error::OracleTooLarge(format!(
            "parts {parts} exceeds cap {}",
            caps.max_parts
        )));
    }
    let roots = rs.positive_root_coords();
    let top_height: i64 = roots.last().unwrap().iter().sum();
    let height = rs.height(nu);
    let cap_height = num_rational::BigRational::from(num_bigint::BigInt::from(
        caps.max_height_multiple as i64 * top_height,
    ));
    if height > cap_height {
        return Err(Error::OracleTooLarge(format!(
            "height {height} exceeds cap {cap_height}"
        )));
    }
    let Some(coords) = nu.root_coords_i64() else {
        return Ok(BigUint::zero());
    };
    if coords.iter().any(|&c| c < 0) {
        return Ok(BigUint::zero());
    }

    fn search(
        roots: &[Vec<i64>],
        top_height: i64,
        remaining: &mut [i64],
        rem_height: i64,
        start: usize,
        parts_left: u64,
    ) -> u64 {
        if parts_left == 0 {
            return u64::from(rem_height == 0);
        }
        if rem_height < parts_left as i64 || rem_height > parts_left as i64 * top_height {
            return 0;
        }
        let mut found = 0;
        for idx in start..roots.len() {
            let beta = &roots[idx];
            let beta_height: i64 = beta.iter().sum();
            let mut ok = true;
            for (r, b) in remaining.iter_mut().zip(beta) {
                *r -= b;
                if *r < 0 {
                    ok = false;
                }
            }
            if ok {
                found += search(
                    roots,
                    top_height,
                    remaining,
                    rem_height - beta_height,
                    idx,
                    parts_left - 1,
                );
            }
            for (r, b) in remaining.iter_mut().zip(beta) {
                *r += b;
            }
        }
        found
    }

    let mut remaining = coords.clone();
    let rem_height: i64 = coords.iter().sum();
    Ok(BigUint::from(search(
        roots,
        top_height,
        &mut remaining,
        rem_height,
        0,
        parts,
    )))
}
