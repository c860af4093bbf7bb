//! Ideal points of the character variety from residue tuples.
//!
//! For an admissible expansion `[n1..nN]` the ideal points attached to it are
//! the classes of tuples `(k1..kN)`, `ki` a nonzero residue mod `|ni|`, not all
//! equal to `|ni|/2`, under the group generated by global negation and
//! alternating negation `kj -> (-1)^j kj`.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use thiserror::Error;

use crate::confrac::{self, ContinuedFraction};
use crate::exactnum::Rational;
use crate::surfaces::{self, BranchedSurface, SurfaceError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdealPointError {
    #[error("expansion {0} is not admissible")]
    NotAdmissible(ContinuedFraction),
    #[error(transparent)]
    Surface(#[from] SurfaceError),
}

/// Where the alternating sign starts. `FromOne` negates positions 1, 3, 5, ...
/// (1-based); `FromZero` negates 2, 4, .... The two differ by a global
/// negation, so they generate the same group and give the same classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum AltIndexing {
    #[default]
    FromOne,
    FromZero,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IdealPointClass {
    /// Lexicographically least tuple of the orbit, entries in `1..|ni|`.
    pub residues: Vec<u64>,
}

fn moduli(cf: &ContinuedFraction) -> Result<Vec<u64>, IdealPointError> {
    if !cf.is_admissible() {
        return Err(IdealPointError::NotAdmissible(cf.clone()));
    }
    Ok(cf.entries().iter().map(|a| a.unsigned_abs()).collect())
}

fn is_valid(k: &[u64], m: &[u64]) -> bool {
    k.iter().zip(m).any(|(&ki, &mi)| mi % 2 == 1 || 2 * ki != mi)
}

/// All tuples with nonzero entries that are not entirely at `|ni|/2`.
fn valid_tuples(m: &[u64]) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    if m.is_empty() {
        return out;
    }
    let mut k: Vec<u64> = alloc::vec![1; m.len()];
    loop {
        if is_valid(&k, m) {
            out.push(k.clone());
        }
        // mixed-radix increment over 1..m_i-1
        let mut i = m.len();
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if k[i] + 1 < m[i] {
                k[i] += 1;
                break;
            }
            k[i] = 1;
        }
    }
}

fn neg(k: &[u64], m: &[u64]) -> Vec<u64> {
    k.iter().zip(m).map(|(&ki, &mi)| (mi - ki) % mi).collect()
}

fn alt(k: &[u64], m: &[u64], indexing: AltIndexing) -> Vec<u64> {
    let negate_even_slot = matches!(indexing, AltIndexing::FromOne);
    k.iter()
        .zip(m)
        .enumerate()
        .map(|(i, (&ki, &mi))| {
            // i is 0-based: slot i is position i + 1
            if (i % 2 == 0) == negate_even_slot {
                (mi - ki) % mi
            } else {
                ki
            }
        })
        .collect()
}

/// The orbit of `k` under the sign group (at most 4 elements).
pub fn orbit(k: &[u64], moduli: &[u64], indexing: AltIndexing) -> BTreeSet<Vec<u64>> {
    let a = alt(k, moduli, indexing);
    let mut set = BTreeSet::new();
    set.insert(neg(&a, moduli));
    set.insert(a);
    set.insert(neg(k, moduli));
    set.insert(k.to_vec());
    set
}

/// Classes of residue tuples for an admissible expansion, each represented by
/// the least element of its orbit, in sorted order.
pub fn ideal_point_classes(
    cf: &ContinuedFraction,
    indexing: AltIndexing,
) -> Result<Vec<IdealPointClass>, IdealPointError> {
    let m = moduli(cf)?;
    let reps: BTreeSet<Vec<u64>> = valid_tuples(&m)
        .into_iter()
        .map(|k| orbit(&k, &m, indexing).into_iter().next().expect("orbit contains k"))
        .collect();
    Ok(reps.into_iter().map(|residues| IdealPointClass { residues }).collect())
}

/// Independent count: sweep the valid tuples, marking whole orbits.
pub fn count_classes_by_orbits(cf: &ContinuedFraction, indexing: AltIndexing) -> Result<usize, IdealPointError> {
    let m = moduli(cf)?;
    let mut seen: BTreeSet<Vec<u64>> = BTreeSet::new();
    let mut count = 0;
    for k in valid_tuples(&m) {
        if seen.contains(&k) {
            continue;
        }
        count += 1;
        // walk the orbit by applying generators until closed
        let mut stack = alloc::vec![k];
        while let Some(t) = stack.pop() {
            if !seen.insert(t.clone()) {
                continue;
            }
            stack.push(neg(&t, &m));
            stack.push(alt(&t, &m, indexing));
        }
    }
    Ok(count)
}

/// Total ideal-point count per boundary slope over all admissible expansions
/// of `p/q`. Slopes whose expansions carry no ideal points are omitted.
pub fn detected_slopes_with_counts(p_over_q: &Rational) -> Result<BTreeMap<i64, usize>, IdealPointError> {
    let mut out = BTreeMap::new();
    for cf in confrac::enumerate_admissible(p_over_q).map_err(SurfaceError::from)? {
        let surface = BranchedSurface::new(&cf, p_over_q)?;
        let slope = surfaces::boundary_slope(&surface)?;
        let n = ideal_point_classes(&cf, AltIndexing::default())?.len();
        if n > 0 {
            *out.entry(slope).or_insert(0) += n;
        }
    }
    Ok(out)
}
