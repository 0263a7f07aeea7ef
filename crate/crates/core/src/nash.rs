//! Containments between closed contact strata, codimension and discrepancy,
//! the one-box chain through a plane partition, and Nash valuations of
//! Schubert varieties.

use std::collections::HashSet;

use num::integer::gcd;
use serde::Serialize;

use crate::error::{invalid, Error, Result};
use crate::networks::plucker_profile;
use crate::partitions::{GrassmannShape, Partition};
use crate::planepartitions::{ExtNat, PlanePartition};

/// Upper bound on plane partitions visited by the plateau-chain search.
pub const PLATEAU_SEARCH_LIMIT: usize = 200_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Relation {
    Contains,
    NotContains,
    Unknown,
}

/// Evidence attached to a verdict.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Witness {
    Equal,
    /// A Plücker coordinate whose order drops from `β` to `β'`.
    PluckerViolation {
        index: Vec<usize>,
        order: ExtNat,
        order2: ExtNat,
    },
    /// Distinct strata of equal or decreasing codimension cannot be nested.
    VolumeObstruction { volume: ExtNat, volume2: ExtNat },
    /// In `G(2,4)` the Plücker order decides containment.
    PluckerOrder,
    WeightExponents {
        exponents: Vec<Vec<ExtNat>>,
        exponents2: Vec<Vec<ExtNat>>,
    },
    /// Successive one-box additions at positive-fall plateau corners.
    PlateauChain { chain: Vec<PlanePartition> },
    None,
}

/// Whether `C̄_β ⊇ C̄_β'`, with evidence.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ContainmentVerdict {
    pub relation: Relation,
    pub witness: Witness,
}

impl ContainmentVerdict {
    fn new(relation: Relation, witness: Witness) -> Self {
        Self { relation, witness }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Discrepancy {
    pub codim: u64,
    /// gcd of the non-zero Plücker orders.
    pub multiplicity: u64,
    pub discrepancy: u64,
}

fn same_shape(a: &PlanePartition, b: &PlanePartition) -> Result<()> {
    if a.shape() != b.shape() {
        return Err(Error::ShapeMismatch(format!(
            "{} vs {}",
            a.shape(),
            b.shape()
        )));
    }
    Ok(())
}

/// The first Plücker coordinate `I` with `ord_β(I) > ord_β'(I)`, if any.
fn plucker_violation(beta: &PlanePartition, beta2: &PlanePartition) -> Option<Witness> {
    plucker_profile(beta)
        .into_iter()
        .zip(plucker_profile(beta2))
        .find(|((_, a), (_, b))| a > b)
        .map(|((i, a), (_, b))| Witness::PluckerViolation {
            index: i.entries().to_vec(),
            order: a,
            order2: b,
        })
}

/// `β ⊴ β'`: every Plücker coordinate has order at `β` at most its order at `β'`.
pub fn plucker_leq(beta: &PlanePartition, beta2: &PlanePartition) -> Result<bool> {
    same_shape(beta, beta2)?;
    Ok(plucker_violation(beta, beta2).is_none())
}

/// Distinct nested strata must strictly increase in codimension; two infinite
/// volumes are left undecided.
fn volume_allows(beta: &PlanePartition, beta2: &PlanePartition) -> bool {
    if beta == beta2 {
        return true;
    }
    match (beta.volume(), beta2.volume()) {
        (ExtNat::Inf, ExtNat::Inf) => true,
        (v, v2) => v < v2,
    }
}

/// Necessary condition for `C̄_β ⊇ C̄_β'`: Plücker order plus the volume obstruction.
pub fn necessary_containment(beta: &PlanePartition, beta2: &PlanePartition) -> Result<bool> {
    Ok(plucker_leq(beta, beta2)? && volume_allows(beta, beta2))
}

/// `c(β) ≤ c(β')` entrywise, which implies `C̄_β ⊇ C̄_β'`.
pub fn sufficient_by_weight_exponents(
    beta: &PlanePartition,
    beta2: &PlanePartition,
) -> Result<bool> {
    same_shape(beta, beta2)?;
    Ok(beta
        .weight_exponents()
        .entrywise_leq(&beta2.weight_exponents()))
}

/// Whether `β'` is `β` plus one box at a plateau corner of positive fall.
pub fn is_plateau_cover(beta: &PlanePartition, beta2: &PlanePartition) -> bool {
    if beta.shape() != beta2.shape() {
        return false;
    }
    beta.plateaux().into_iter().any(|p| {
        p.fall > ExtNat::ZERO
            && beta.get(p.a, p.b).is_finite()
            && beta
                .with_entry(p.a, p.b, beta.get(p.a, p.b) + ExtNat::Fin(1))
                .is_ok_and(|next| &next == beta2)
    })
}

/// One-box plateau moves from `β` that stay entrywise below `bound`.
fn plateau_moves(beta: &PlanePartition, bound: &PlanePartition) -> Vec<PlanePartition> {
    beta.plateaux()
        .into_iter()
        .filter(|p| p.fall > ExtNat::ZERO && beta.get(p.a, p.b).is_finite())
        .filter_map(|p| {
            let up = beta.get(p.a, p.b) + ExtNat::Fin(1);
            (up <= bound.get(p.a, p.b))
                .then(|| beta.with_entry(p.a, p.b, up).ok())
                .flatten()
        })
        .collect()
}

/// A chain of plateau covers from `β` to `β'`, found by depth-first search.
pub fn plateau_chain(beta: &PlanePartition, beta2: &PlanePartition) -> Result<Option<Vec<PlanePartition>>> {
    same_shape(beta, beta2)?;
    if beta == beta2 || !beta.entrywise_leq(beta2) {
        return Ok(None);
    }
    let shape = beta.shape();
    let reachable_inf = shape
        .cell_iter()
        .all(|(i, j)| !beta2.get(i, j).is_inf() || beta.get(i, j).is_inf());
    if !reachable_inf {
        return Ok(None);
    }
    let mut visited: HashSet<PlanePartition> = HashSet::new();
    let mut path = vec![beta.clone()];
    let mut stack = vec![plateau_moves(beta, beta2)];
    visited.insert(beta.clone());
    while let Some(frontier) = stack.last_mut() {
        match frontier.pop() {
            None => {
                stack.pop();
                path.pop();
            }
            Some(next) => {
                if &next == beta2 {
                    path.push(next);
                    return Ok(Some(path));
                }
                if visited.len() >= PLATEAU_SEARCH_LIMIT || !visited.insert(next.clone()) {
                    continue;
                }
                stack.push(plateau_moves(&next, beta2));
                path.push(next);
            }
        }
    }
    Ok(None)
}

/// `β'` is reached from `β` by a chain of plateau covers.
pub fn sufficient_by_plateau(beta: &PlanePartition, beta2: &PlanePartition) -> Result<bool> {
    Ok(plateau_chain(beta, beta2)?.is_some())
}

fn is_g24(shape: GrassmannShape) -> bool {
    shape.k() == 2 && shape.n() == 4
}

/// Exact containment test for `G(2,4)`, where the Plücker order decides.
pub fn g24_containment(beta: &PlanePartition, beta2: &PlanePartition) -> Result<ContainmentVerdict> {
    same_shape(beta, beta2)?;
    if !is_g24(beta.shape()) {
        return invalid(format!(
            "closed-form containment is only available for G(2,4), got {}",
            beta.shape()
        ));
    }
    if beta == beta2 {
        return Ok(ContainmentVerdict::new(Relation::Contains, Witness::Equal));
    }
    Ok(match plucker_violation(beta, beta2) {
        Some(w) => ContainmentVerdict::new(Relation::NotContains, w),
        None => ContainmentVerdict::new(Relation::Contains, Witness::PluckerOrder),
    })
}

/// Decides `C̄_β ⊇ C̄_β'` where one of the known criteria applies, and
/// answers `Unknown` otherwise.
pub fn compare(beta: &PlanePartition, beta2: &PlanePartition) -> Result<ContainmentVerdict> {
    same_shape(beta, beta2)?;
    use Relation::*;
    if beta == beta2 {
        return Ok(ContainmentVerdict::new(Contains, Witness::Equal));
    }
    if let Some(w) = plucker_violation(beta, beta2) {
        return Ok(ContainmentVerdict::new(NotContains, w));
    }
    if !volume_allows(beta, beta2) {
        return Ok(ContainmentVerdict::new(
            NotContains,
            Witness::VolumeObstruction {
                volume: beta.volume(),
                volume2: beta2.volume(),
            },
        ));
    }
    if is_g24(beta.shape()) {
        return Ok(ContainmentVerdict::new(Contains, Witness::PluckerOrder));
    }
    if sufficient_by_weight_exponents(beta, beta2)? {
        return Ok(ContainmentVerdict::new(
            Contains,
            Witness::WeightExponents {
                exponents: beta.weight_exponents().rows(),
                exponents2: beta2.weight_exponents().rows(),
            },
        ));
    }
    if let Some(chain) = plateau_chain(beta, beta2)? {
        return Ok(ContainmentVerdict::new(
            Contains,
            Witness::PlateauChain { chain },
        ));
    }
    Ok(ContainmentVerdict::new(Unknown, Witness::None))
}

/// Codimension of `C_β`: the number of boxes.
pub fn codim(beta: &PlanePartition) -> ExtNat {
    beta.volume()
}

/// Codimension, multiplicity and discrepancy of the valuation `ord_β`.
pub fn discrepancy_data(beta: &PlanePartition) -> Result<Discrepancy> {
    let codim = beta
        .volume()
        .finite()
        .ok_or_else(|| Error::InvalidInput("discrepancy needs a finite plane partition".into()))?;
    let multiplicity = plucker_profile(beta)
        .into_iter()
        .filter_map(|(_, v)| v.finite())
        .fold(0u64, gcd);
    Ok(Discrepancy {
        codim,
        multiplicity,
        discrepancy: codim - multiplicity,
    })
}

/// The chain `β⁰ = ∅ ⊂ … ⊂ β^N` of one-box additions through `β` at index `|β|`,
/// ending at the constant box of height `h = β_{1,1}`.
pub fn codim_chain(beta: &PlanePartition) -> Result<Vec<PlanePartition>> {
    let entries = beta
        .finite_entries()
        .ok_or_else(|| Error::InvalidInput("codimension chain needs a finite plane partition".into()))?;
    let shape = beta.shape();
    let cols = shape.cols();
    let h = beta.height().finite().unwrap_or(0);
    let n_steps = h as usize * shape.cells();
    let as_pp = |v: &[u64]| {
        let rows: Vec<Vec<u64>> = v.chunks(cols).map(|c| c.to_vec()).collect();
        PlanePartition::from_finite(shape, &rows)
    };
    let mut cur = vec![0u64; shape.cells()];
    let mut chain = vec![as_pp(&cur)?];
    // lowest floor first, then lexicographically smallest pillar
    while let Some(pos) = (0..cur.len())
        .filter(|&p| cur[p] < entries[p])
        .min_by_key(|&p| (cur[p], p))
    {
        cur[pos] += 1;
        chain.push(as_pp(&cur)?);
    }
    // then fill towards the constant box, smallest pillar first
    while let Some(pos) = (0..cur.len()).find(|&p| cur[p] < h) {
        cur[pos] += 1;
        chain.push(as_pp(&cur)?);
    }
    if chain.len() != n_steps + 1 {
        return Err(Error::Internal(format!(
            "chain has {} steps, expected {n_steps}",
            chain.len() - 1
        )));
    }
    Ok(chain)
}

/// For each singular component `λ^s` of `Ω_λ`: `∞` on `λ`, `1` on `λ^s ∖ λ`,
/// `0` elsewhere. Empty exactly when `Ω_λ` is smooth.
pub fn nash_valuations(lambda: &Partition) -> Result<Vec<PlanePartition>> {
    if lambda.is_empty() {
        return invalid("Nash valuations need a non-empty partition");
    }
    let shape = lambda.shape();
    lambda
        .singular_components()
        .into_iter()
        .map(|comp| {
            let rows: Vec<Vec<ExtNat>> = (1..=shape.k())
                .map(|i| {
                    (1..=shape.cols())
                        .map(|j| {
                            if lambda.contains_cell(i, j) {
                                ExtNat::Inf
                            } else if comp.contains_cell(i, j) {
                                ExtNat::Fin(1)
                            } else {
                                ExtNat::ZERO
                            }
                        })
                        .collect()
                })
                .collect();
            PlanePartition::new(shape, &rows)
        })
        .collect()
}
