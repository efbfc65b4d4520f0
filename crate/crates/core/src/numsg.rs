//! Finitely generated numerical semigroups.
//!
//! Membership is decided through the Apéry set with respect to the smallest
//! generator: `apery[r]` is the least member congruent to `r`, found by a
//! shortest-path sweep over the residue classes.

use std::cmp::Reverse;
use std::collections::{BTreeSet, BinaryHeap};

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SemigroupError {
    #[error("a semigroup needs at least one generator")]
    Empty,
    #[error("generators must be positive")]
    ZeroGenerator,
    #[error("generators have gcd {0}, the gap set would be infinite")]
    NotCoprime(u64),
    #[error("parameter s must be at least 1")]
    BadParameter,
    #[error("gap ledger check failed: {0}")]
    LedgerMismatch(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SemigroupDescriptor {
    generators: Vec<u64>,
    #[serde(skip)]
    apery: Vec<u64>,
    gaps: Vec<u64>,
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl SemigroupDescriptor {
    pub fn new(generators: &[u64]) -> Result<SemigroupDescriptor, SemigroupError> {
        if generators.is_empty() {
            return Err(SemigroupError::Empty);
        }
        if generators.contains(&0) {
            return Err(SemigroupError::ZeroGenerator);
        }
        let g = generators.iter().fold(0, |acc, &x| gcd(acc, x));
        if g != 1 {
            return Err(SemigroupError::NotCoprime(g));
        }
        let m = *generators.iter().min().unwrap();
        let apery = apery_set(generators, m);
        let mut gaps = Vec::new();
        for (r, &a) in apery.iter().enumerate() {
            gaps.extend((r as u64..a).step_by(m as usize));
        }
        gaps.sort_unstable();
        Ok(SemigroupDescriptor { generators: generators.to_vec(), apery, gaps })
    }

    pub fn generators(&self) -> &[u64] {
        &self.generators
    }

    pub fn gaps(&self) -> &[u64] {
        &self.gaps
    }

    pub fn genus(&self) -> u64 {
        self.gaps.len() as u64
    }

    /// Largest gap, or -1 when every natural number is a member.
    pub fn frobenius_number(&self) -> i64 {
        self.gaps.last().map_or(-1, |&g| g as i64)
    }

    pub fn multiplicity(&self) -> u64 {
        self.apery.len() as u64
    }

    /// Apéry set with respect to the multiplicity, indexed by residue.
    pub fn apery(&self) -> &[u64] {
        &self.apery
    }

    pub fn contains(&self, n: u64) -> bool {
        let m = self.apery.len() as u64;
        n >= self.apery[(n % m) as usize]
    }

    /// Symmetric iff the Frobenius number is `2g - 1`.
    pub fn is_symmetric(&self) -> bool {
        self.frobenius_number() == 2 * self.genus() as i64 - 1
    }

    /// Members up to and including `bound`.
    pub fn members_up_to(&self, bound: u64) -> Vec<u64> {
        (0..=bound).filter(|&n| self.contains(n)).collect()
    }
}

fn apery_set(generators: &[u64], m: u64) -> Vec<u64> {
    let mut dist = vec![u64::MAX; m as usize];
    dist[0] = 0;
    let mut heap = BinaryHeap::from([Reverse((0u64, 0usize))]);
    while let Some(Reverse((d, r))) = heap.pop() {
        if d > dist[r] {
            continue;
        }
        for &g in generators {
            let nd = d + g;
            let nr = ((r as u64 + g) % m) as usize;
            if nd < dist[nr] {
                dist[nr] = nd;
                heap.push(Reverse((nd, nr)));
            }
        }
    }
    dist
}

/// Sorted gap list of the semigroup generated by `generators`.
pub fn gaps(generators: &[u64]) -> Result<Vec<u64>, SemigroupError> {
    Ok(SemigroupDescriptor::new(generators)?.gaps)
}

/// Symmetry test straight from the definition: `m in H <=> F - m not in H`
/// for every `0 <= m <= F`.
pub fn is_symmetric(sg: &SemigroupDescriptor) -> bool {
    let f = sg.frobenius_number();
    if f < 0 {
        return true;
    }
    (0..=f as u64).all(|m| sg.contains(m) != sg.contains(f as u64 - m))
}

/// `{ sum a_i w_i : a_i >= 0, sum a_i <= budget }`.
pub fn weighted_order_set(weights: &[u64], budget: u32) -> BTreeSet<u64> {
    let mut level: BTreeSet<u64> = BTreeSet::from([0]);
    let mut all = level.clone();
    for _ in 0..budget {
        level = level.iter().flat_map(|&v| weights.iter().map(move |&w| v + w)).collect();
        all.extend(level.iter().copied());
    }
    all
}

/// The explicit Apéry-type ledger for `<q, q+2q0-1, q+2q0, q+2q0+1>` with
/// `q0 = 2^s`, `q = 2 q0^2`.
#[derive(Clone, Debug, Serialize)]
pub struct GapLedger {
    pub s: u32,
    pub q0: u64,
    pub q: u64,
    pub generators: Vec<u64>,
    /// Family label and its members; family `L0 = {0}` covers residue zero.
    pub families: Vec<(String, Vec<u64>)>,
    pub complete_residue_system: bool,
    pub minimal_in_class: bool,
    pub genus_from_ledger: u64,
    pub genus_formula: u64,
    pub genus_from_gaps: u64,
}

impl GapLedger {
    pub fn members(&self) -> impl Iterator<Item = u64> + '_ {
        self.families.iter().flat_map(|(_, v)| v.iter().copied())
    }
}

pub fn suzuki_gap_ledger(s: u32) -> Result<GapLedger, SemigroupError> {
    if s == 0 || s > 20 {
        return Err(SemigroupError::BadParameter);
    }
    let q0 = 1u64 << s;
    let q = 2 * q0 * q0;
    let generators = vec![q, q + 2 * q0 - 1, q + 2 * q0, q + 2 * q0 + 1];
    let mut families: Vec<(String, Vec<u64>)> = vec![("L0".into(), vec![0])];
    for i in 1..q0 {
        let base = i * q + i * (2 * q0 - 1);
        families.push((format!("L{i}"), (0..=2 * i).map(|j| base + j).collect()));
    }
    families.push((format!("L{q0}"), (0..q0).map(|j| q0 * q + q - q0 + j).collect()));
    families.push((format!("L{}", q0 + 1), (0..q0).map(|j| (q0 + 1) * q + 1 + j).collect()));
    for i in 2..=q0 / 2 {
        let a = (q0 + i) * q + (2 * i - 3) * q0 + i - 1;
        let b = (q0 + i) * q + (2 * i - 2) * q0 + i;
        let mut v: Vec<u64> = (0..=q0 + 1 - 2 * i).map(|j| a + j).collect();
        v.extend((0..q0).map(|j| b + j));
        families.push((format!("L{}", q0 + i), v));
    }
    for i in 1..q0 / 2 {
        let base = (3 * q0 / 2 + i) * q + (q0 / 2 + i - 1) * (2 * q0 - 1) + q0 + 2 * i - 1;
        families.push((format!("L{}", 3 * q0 / 2 + i), (0..q0 - 2 * i).map(|j| base + j).collect()));
    }

    let h = SemigroupDescriptor::new(&generators)?;
    let members: Vec<u64> = families.iter().flat_map(|(_, v)| v.iter().copied()).collect();
    let residues: BTreeSet<u64> = members.iter().map(|&l| l % q).collect();
    let complete_residue_system = members.len() as u64 == q && residues.len() as u64 == q;
    let minimal_in_class = members.iter().all(|&l| h.contains(l) && (l < q || !h.contains(l - q)));
    let genus_from_ledger: u64 = members.iter().map(|&l| l / q).sum();
    let genus_formula = q0 * (q - 1) - q0 * q0 / 4;
    let ledger = GapLedger {
        s,
        q0,
        q,
        generators,
        families,
        complete_residue_system,
        minimal_in_class,
        genus_from_ledger,
        genus_formula,
        genus_from_gaps: h.genus(),
    };
    if !complete_residue_system {
        return Err(SemigroupError::LedgerMismatch("families do not form a complete residue system".into()));
    }
    if !minimal_in_class {
        return Err(SemigroupError::LedgerMismatch("some family member is not the least in its class".into()));
    }
    if genus_from_ledger != genus_formula || genus_from_ledger != ledger.genus_from_gaps {
        return Err(SemigroupError::LedgerMismatch(format!(
            "genus: ledger {genus_from_ledger}, formula {genus_formula}, gaps {}",
            ledger.genus_from_gaps
        )));
    }
    Ok(ledger)
}

/// Generators of the Weierstrass semigroup at a rational point of the
/// Suzuki curve: `<q, q+q0, q+2q0, q+2q0+1>`.
pub fn suzuki_point_semigroup(s: u32) -> Vec<u64> {
    let q0 = 1u64 << s;
    let q = 2 * q0 * q0;
    vec![q, q + q0, q + 2 * q0, q + 2 * q0 + 1]
}
