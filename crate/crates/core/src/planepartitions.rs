//! Plane partitions over `ℕ ∪ {∞}`, essential profiles, floors, weight exponents,
//! plateaux and orders of contact along Schubert varieties.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::Add;

use serde::de::{self, Deserializer, Visitor};
use serde::ser::Serializer;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::partitions::{GrassmannShape, Partition};

/// A non-negative integer or `∞`. `Fin(_) < Inf`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ExtNat {
    Fin(u64),
    Inf,
}

impl ExtNat {
    pub const ZERO: ExtNat = ExtNat::Fin(0);

    pub fn is_finite(self) -> bool {
        matches!(self, ExtNat::Fin(_))
    }

    pub fn is_inf(self) -> bool {
        self == ExtNat::Inf
    }

    pub fn finite(self) -> Option<u64> {
        match self {
            ExtNat::Fin(v) => Some(v),
            ExtNat::Inf => None,
        }
    }

    /// `self - rhs` with `∞ - x = ∞`. Fails when the result would be negative
    /// or when subtracting `∞` from a finite value.
    pub fn checked_sub(self, rhs: ExtNat) -> Result<ExtNat> {
        match (self, rhs) {
            (ExtNat::Inf, _) => Ok(ExtNat::Inf),
            (ExtNat::Fin(a), ExtNat::Fin(b)) if a >= b => Ok(ExtNat::Fin(a - b)),
            _ => invalid(format!("cannot subtract {rhs} from {self}")),
        }
    }

    pub fn parse(text: &str) -> Result<ExtNat> {
        let t = text.trim();
        match t {
            "inf" | "∞" | "Inf" | "INF" => Ok(ExtNat::Inf),
            _ => t
                .parse::<u64>()
                .map(ExtNat::Fin)
                .map_err(|_| Error::InvalidInput(format!("bad entry {t:?}"))),
        }
    }
}

impl Default for ExtNat {
    fn default() -> Self {
        ExtNat::ZERO
    }
}

impl From<u64> for ExtNat {
    fn from(v: u64) -> Self {
        ExtNat::Fin(v)
    }
}

impl Add for ExtNat {
    type Output = ExtNat;
    fn add(self, rhs: ExtNat) -> ExtNat {
        match (self, rhs) {
            (ExtNat::Fin(a), ExtNat::Fin(b)) => ExtNat::Fin(a + b),
            _ => ExtNat::Inf,
        }
    }
}

impl std::iter::Sum for ExtNat {
    fn sum<I: Iterator<Item = ExtNat>>(iter: I) -> ExtNat {
        iter.fold(ExtNat::ZERO, |a, b| a + b)
    }
}

impl fmt::Display for ExtNat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtNat::Fin(v) => write!(f, "{v}"),
            ExtNat::Inf => write!(f, "inf"),
        }
    }
}

impl Serialize for ExtNat {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            ExtNat::Fin(v) => s.serialize_u64(*v),
            ExtNat::Inf => s.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for ExtNat {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        struct V;
        impl Visitor<'_> for V {
            type Value = ExtNat;
            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a non-negative integer or \"inf\"")
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<ExtNat, E> {
                Ok(ExtNat::Fin(v))
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<ExtNat, E> {
                u64::try_from(v)
                    .map(ExtNat::Fin)
                    .map_err(|_| E::custom("negative entry"))
            }
            fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<ExtNat, E> {
                ExtNat::parse(v).map_err(E::custom)
            }
        }
        d.deserialize_any(V)
    }
}

/// A `k × (n-k)` matrix of [`ExtNat`] with 1-based accessors and zero
/// extension outside the box.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct Grid {
    shape: GrassmannShape,
    entries: Vec<ExtNat>,
}

impl Grid {
    fn zero(shape: GrassmannShape) -> Self {
        Self {
            shape,
            entries: vec![ExtNat::ZERO; shape.cells()],
        }
    }

    fn from_rows(shape: GrassmannShape, rows: &[Vec<ExtNat>]) -> Result<Self> {
        if rows.len() != shape.k() || rows.iter().any(|r| r.len() != shape.cols()) {
            return Err(Error::ShapeMismatch(format!(
                "expected a {}x{} matrix for {shape}",
                shape.k(),
                shape.cols()
            )));
        }
        Ok(Self {
            shape,
            entries: rows.concat(),
        })
    }

    fn get(&self, i: usize, j: usize) -> ExtNat {
        if i == 0 || j == 0 || i > self.shape.k() || j > self.shape.cols() {
            return ExtNat::ZERO;
        }
        self.entries[(i - 1) * self.shape.cols() + (j - 1)]
    }

    fn set(&mut self, i: usize, j: usize, v: ExtNat) {
        let cols = self.shape.cols();
        self.entries[(i - 1) * cols + (j - 1)] = v;
    }

    fn rows(&self) -> Vec<Vec<ExtNat>> {
        self.entries
            .chunks(self.shape.cols())
            .map(|c| c.to_vec())
            .collect()
    }

    fn diagonal_sum(&self, i: usize, j: usize) -> ExtNat {
        (0..)
            .map(|d| (i + d, j + d))
            .take_while(|&(a, b)| a <= self.shape.k() && b <= self.shape.cols())
            .map(|(a, b)| self.get(a, b))
            .sum()
    }
}

impl fmt::Display for Grid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows()
            .iter()
            .map(|r| {
                r.iter()
                    .map(|e| e.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect();
        write!(f, "{}", rows.join("; "))
    }
}

fn parse_rows(text: &str) -> Result<Vec<Vec<ExtNat>>> {
    text.split(';')
        .map(|row| {
            row.split_whitespace()
                .map(ExtNat::parse)
                .collect::<Result<Vec<_>>>()
        })
        .collect()
}

/// A plane partition in the `k × (n-k)` box: entries in `ℕ ∪ {∞}`, weakly
/// decreasing along rows and columns.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PlanePartition {
    grid: Grid,
}

impl PlanePartition {
    /// Validates monotonicity; the error names the first offending cell pair.
    pub fn new(shape: GrassmannShape, rows: &[Vec<ExtNat>]) -> Result<Self> {
        let grid = Grid::from_rows(shape, rows)?;
        for (i, j) in shape.cell_iter() {
            let v = grid.get(i, j);
            if j < shape.cols() && grid.get(i, j + 1) > v {
                return Err(Error::InvalidPlanePartition {
                    row: i,
                    col: j,
                    detail: format!("entry ({i},{}) exceeds ({i},{j})", j + 1),
                });
            }
            if i < shape.k() && grid.get(i + 1, j) > v {
                return Err(Error::InvalidPlanePartition {
                    row: i,
                    col: j,
                    detail: format!("entry ({},{j}) exceeds ({i},{j})", i + 1),
                });
            }
        }
        Ok(Self { grid })
    }

    /// Convenience constructor from finite entries.
    pub fn from_finite(shape: GrassmannShape, rows: &[Vec<u64>]) -> Result<Self> {
        let rows: Vec<Vec<ExtNat>> = rows
            .iter()
            .map(|r| r.iter().map(|&v| ExtNat::Fin(v)).collect())
            .collect();
        Self::new(shape, &rows)
    }

    pub fn zero(shape: GrassmannShape) -> Self {
        Self {
            grid: Grid::zero(shape),
        }
    }

    /// Parses `"2 2; 2 1"`, with `inf` for `∞`.
    pub fn parse(shape: GrassmannShape, text: &str) -> Result<Self> {
        Self::new(shape, &parse_rows(text)?)
    }

    pub fn shape(&self) -> GrassmannShape {
        self.grid.shape
    }

    /// `β_{i,j}` (1-based), zero outside the box.
    pub fn get(&self, i: usize, j: usize) -> ExtNat {
        self.grid.get(i, j)
    }

    pub fn rows(&self) -> Vec<Vec<ExtNat>> {
        self.grid.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.grid.entries.iter().all(|&e| e == ExtNat::ZERO)
    }

    pub fn is_finite(&self) -> bool {
        self.grid.entries.iter().all(|e| e.is_finite())
    }

    /// Finite entries as a row-major vector; `None` if some entry is `∞`.
    pub fn finite_entries(&self) -> Option<Vec<u64>> {
        self.grid.entries.iter().map(|e| e.finite()).collect()
    }

    /// `|β|`, infinite if any entry is.
    pub fn volume(&self) -> ExtNat {
        self.grid.entries.iter().copied().sum()
    }

    /// `β_{1,1}`.
    pub fn height(&self) -> ExtNat {
        self.get(1, 1)
    }

    /// `β_{a,b} + β_{a+1,b+1} + …`.
    pub fn diagonal_sum(&self, a: usize, b: usize) -> ExtNat {
        self.grid.diagonal_sum(a, b)
    }

    /// Pointwise `β ≤ β'`.
    pub fn entrywise_leq(&self, other: &PlanePartition) -> bool {
        self.grid
            .entries
            .iter()
            .zip(&other.grid.entries)
            .all(|(a, b)| a <= b)
    }

    /// The copy of `β` with `β_{i,j}` replaced, if the result is still a plane partition.
    pub fn with_entry(&self, i: usize, j: usize, v: ExtNat) -> Result<PlanePartition> {
        let mut grid = self.grid.clone();
        grid.set(i, j, v);
        PlanePartition::new(self.shape(), &grid.rows())
    }

    /// The order of contact with `Ω_λ`: the minimum over Schubert conditions
    /// `(a,b)` of `λ` of the diagonal sum from `(a,b)`.
    pub fn ord_schubert(&self, lambda: &Partition) -> Result<ExtNat> {
        if lambda.shape() != self.shape() {
            return Err(Error::ShapeMismatch(format!(
                "{} vs {}",
                lambda.shape(),
                self.shape()
            )));
        }
        if lambda.is_empty() {
            return invalid("order along the empty partition is identically 0");
        }
        Ok(lambda
            .schubert_conditions()
            .into_iter()
            .map(|(a, b)| self.diagonal_sum(a, b))
            .min()
            .expect("non-empty partition has a corner"))
    }

    pub fn essential_profile(&self) -> EssentialProfile {
        let shape = self.shape();
        let mut grid = Grid::zero(shape);
        for (i, j) in shape.cell_iter() {
            grid.set(i, j, self.diagonal_sum(i, j));
        }
        EssentialProfile { grid }
    }

    pub fn from_essential(alpha: &EssentialProfile) -> Result<PlanePartition> {
        alpha.validate()?;
        let shape = alpha.shape();
        let mut grid = Grid::zero(shape);
        for (i, j) in shape.cell_iter() {
            let v = alpha.get(i, j).checked_sub(alpha.get(i + 1, j + 1))?;
            grid.set(i, j, v);
        }
        PlanePartition::new(shape, &grid.rows())
            .map_err(|e| Error::InvalidEssentialProfile(e.to_string()))
    }

    /// `α_λ` for every non-empty `λ` in the box.
    pub fn contact_profile(&self) -> BTreeMap<Partition, ExtNat> {
        let alpha = self.essential_profile();
        self.shape()
            .partitions()
            .into_iter()
            .filter(|l| !l.is_empty())
            .map(|l| {
                let v = l
                    .cells()
                    .map(|(i, j)| alpha.get(i, j))
                    .min()
                    .expect("non-empty");
                (l, v)
            })
            .collect()
    }

    /// `c(β)`, the exponents placed on the network.
    pub fn weight_exponents(&self) -> WeightExponents {
        let shape = self.shape();
        let (k, cols) = (shape.k(), shape.cols());
        let mut grid = Grid::zero(shape);
        for (i, j) in shape.cell_iter() {
            let here = self.get(i, j);
            let v = match (k - i).cmp(&(cols - j)) {
                Ordering::Equal => Ok(here),
                Ordering::Less => here.checked_sub(self.get(i, j + 1)),
                Ordering::Greater => here.checked_sub(self.get(i + 1, j)),
            };
            grid.set(i, j, v.expect("plane partition monotonicity"));
        }
        WeightExponents { grid }
    }

    /// The floor `μ^s = {β ≥ s}` for `s ≥ 1`.
    pub fn floor(&self, s: u64) -> Partition {
        let v = ExtNat::Fin(s);
        Partition::from_cells(self.shape(), |i, j| self.get(i, j) >= v)
    }

    /// The distinct non-empty floors from the bottom, each with its multiplicity.
    /// `∞` entries contribute a final floor `β^∞` with infinite multiplicity.
    pub fn floors(&self) -> Vec<(Partition, ExtNat)> {
        let mut levels: Vec<u64> = self
            .grid
            .entries
            .iter()
            .filter_map(|e| e.finite())
            .filter(|&v| v > 0)
            .collect();
        levels.sort_unstable();
        levels.dedup();
        let mut out = Vec::new();
        let mut prev = 0u64;
        for &lv in &levels {
            out.push((self.floor(lv), ExtNat::Fin(lv - prev)));
            prev = lv;
        }
        let top = self.infinite_part();
        if !top.is_empty() {
            out.push((top, ExtNat::Inf));
        }
        out
    }

    /// Inverse of [`PlanePartition::floors`]: stacks nested floors with multiplicities,
    /// bottom floor first.
    pub fn from_floors(shape: GrassmannShape, chain: &[(Partition, ExtNat)]) -> Result<Self> {
        for w in chain.windows(2) {
            if !w[0].0.contains(&w[1].0) {
                return Err(Error::InvalidChain(format!(
                    "floor {} does not contain {}",
                    w[0].0, w[1].0
                )));
            }
        }
        let mut grid = Grid::zero(shape);
        for (mu, mult) in chain {
            if mu.shape() != shape {
                return Err(Error::ShapeMismatch(format!("{} vs {shape}", mu.shape())));
            }
            for (i, j) in mu.cells() {
                grid.set(i, j, grid.get(i, j) + *mult);
            }
        }
        PlanePartition::new(shape, &grid.rows())
    }

    fn infinite_part(&self) -> Partition {
        Partition::from_cells(self.shape(), |i, j| self.get(i, j).is_inf())
    }

    /// `(β^∞, β^1)`: the home and the center of `ord_β`.
    pub fn home_center(&self) -> (Partition, Partition) {
        (self.infinite_part(), self.floor(1))
    }

    /// Every plateau corner of `β`, in row-major order.
    pub fn plateaux(&self) -> Vec<Plateau> {
        let shape = self.shape();
        shape
            .cell_iter()
            .filter_map(|(a, b)| {
                let height = if (a, b) == (1, 1) {
                    ExtNat::Inf
                } else {
                    let h = self.get(1, 1);
                    let flat = (1..=a).all(|i| {
                        (1..=b).all(|j| (i, j) == (a, b) || self.get(i, j) == h)
                    });
                    if !flat {
                        return None;
                    }
                    h
                };
                let here = self.get(a, b);
                let fall = match height {
                    ExtNat::Fin(_) => height.checked_sub(here).ok()?,
                    ExtNat::Inf if here.is_inf() => ExtNat::ZERO,
                    ExtNat::Inf => ExtNat::Inf,
                };
                Some(Plateau {
                    a,
                    b,
                    height,
                    fall,
                })
            })
            .collect()
    }
}

impl fmt::Display for PlanePartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.grid.fmt(f)
    }
}

impl Serialize for PlanePartition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.rows().serialize(s)
    }
}

/// A plateau corner `(a, b)` of height `h` and fall `h - β_{a,b}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Plateau {
    pub a: usize,
    pub b: usize,
    pub height: ExtNat,
    pub fall: ExtNat,
}

/// The essential contact profile `α_{i,j}`: orders of contact with the
/// rectangular Schubert varieties.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EssentialProfile {
    grid: Grid,
}

impl EssentialProfile {
    pub fn new(shape: GrassmannShape, rows: &[Vec<ExtNat>]) -> Result<Self> {
        let p = Self {
            grid: Grid::from_rows(shape, rows)?,
        };
        p.validate()?;
        Ok(p)
    }

    /// Builds without checking the inequalities; [`PlanePartition::from_essential`]
    /// validates.
    pub fn new_unchecked(shape: GrassmannShape, rows: &[Vec<ExtNat>]) -> Result<Self> {
        Ok(Self {
            grid: Grid::from_rows(shape, rows)?,
        })
    }

    pub fn parse(shape: GrassmannShape, text: &str) -> Result<Self> {
        Self::new(shape, &parse_rows(text)?)
    }

    pub fn shape(&self) -> GrassmannShape {
        self.grid.shape
    }

    pub fn get(&self, i: usize, j: usize) -> ExtNat {
        self.grid.get(i, j)
    }

    pub fn rows(&self) -> Vec<Vec<ExtNat>> {
        self.grid.rows()
    }

    /// Monotonicity plus the two supermodularity families, with `α = 0`
    /// outside the box. `∞` sums compare as `∞`.
    pub fn validate(&self) -> Result<()> {
        let shape = self.shape();
        let g = |i, j| self.get(i, j);
        let fail = |msg: String| Err(Error::InvalidEssentialProfile(msg));
        for (i, j) in shape.cell_iter() {
            if g(i, j) < g(i + 1, j) || g(i, j) < g(i, j + 1) {
                return fail(format!("not monotone at ({i},{j})"));
            }
            if g(i, j) + g(i + 2, j + 1) < g(i + 1, j) + g(i + 1, j + 1) {
                return fail(format!("column supermodularity fails at ({i},{j})"));
            }
            if g(i, j) + g(i + 1, j + 2) < g(i, j + 1) + g(i + 1, j + 1) {
                return fail(format!("row supermodularity fails at ({i},{j})"));
            }
        }
        Ok(())
    }
}

impl fmt::Display for EssentialProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.grid.fmt(f)
    }
}

impl Serialize for EssentialProfile {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.rows().serialize(s)
    }
}

/// The weight exponents `c(β)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeightExponents {
    grid: Grid,
}

impl WeightExponents {
    pub fn shape(&self) -> GrassmannShape {
        self.grid.shape
    }

    pub fn get(&self, i: usize, j: usize) -> ExtNat {
        self.grid.get(i, j)
    }

    pub fn rows(&self) -> Vec<Vec<ExtNat>> {
        self.grid.rows()
    }

    pub fn entrywise_leq(&self, other: &WeightExponents) -> bool {
        self.grid
            .entries
            .iter()
            .zip(&other.grid.entries)
            .all(|(a, b)| a <= b)
    }
}

impl fmt::Display for WeightExponents {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.grid.fmt(f)
    }
}

/// Every plane partition in the box with finite entries at most `h`.
pub fn enumerate_plane_partitions(shape: GrassmannShape, h: u64) -> Vec<PlanePartition> {
    let (k, cols) = (shape.k(), shape.cols());
    let mut out = Vec::new();
    let mut cur = vec![0u64; k * cols];
    fn rec(
        idx: usize,
        k: usize,
        cols: usize,
        h: u64,
        cur: &mut Vec<u64>,
        out: &mut Vec<Vec<u64>>,
    ) {
        if idx == k * cols {
            out.push(cur.clone());
            return;
        }
        let (i, j) = (idx / cols, idx % cols);
        let mut cap = h;
        if i > 0 {
            cap = cap.min(cur[idx - cols]);
        }
        if j > 0 {
            cap = cap.min(cur[idx - 1]);
        }
        for v in 0..=cap {
            cur[idx] = v;
            rec(idx + 1, k, cols, h, cur, out);
        }
        cur[idx] = 0;
    }
    let mut raw = Vec::new();
    rec(0, k, cols, h, &mut cur, &mut raw);
    for entries in raw {
        let grid = Grid {
            shape,
            entries: entries.into_iter().map(ExtNat::Fin).collect(),
        };
        out.push(PlanePartition { grid });
    }
    out
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use proptest::prelude::*;

    fn g(k: usize, n: usize) -> GrassmannShape {
        GrassmannShape::new(k, n).unwrap()
    }

    fn pp(shape: GrassmannShape, text: &str) -> PlanePartition {
        PlanePartition::parse(shape, text).unwrap()
    }

    fn part(shape: GrassmannShape, parts: &[usize]) -> Partition {
        Partition::new(shape, parts).unwrap()
    }

    #[test]
    fn extnat_arithmetic() {
        use ExtNat::*;
        assert_eq!(Inf + Fin(3), Inf);
        assert_eq!(Inf.checked_sub(Fin(3)).unwrap(), Inf);
        assert!(Fin(1).checked_sub(Fin(2)).is_err());
        assert!(Fin(1).checked_sub(Inf).is_err());
        assert_eq!(Inf.min(Fin(4)), Fin(4));
        assert_eq!(serde_json::to_string(&Inf).unwrap(), "\"inf\"");
        let v: Vec<ExtNat> = serde_json::from_str("[3, \"inf\"]").unwrap();
        assert_eq!(v, vec![Fin(3), Inf]);
    }

    #[test]
    fn validation() {
        let s = g(2, 4);
        assert!(PlanePartition::parse(s, "0 0; 0 0").unwrap().is_zero());
        assert!(PlanePartition::parse(s, "3 2; 1 1").is_ok());
        match PlanePartition::parse(s, "1 2; 0 0") {
            Err(Error::InvalidPlanePartition { row, col, .. }) => assert_eq!((row, col), (1, 1)),
            other => panic!("unexpected {other:?}"),
        }
        assert!(PlanePartition::parse(s, "1 1 1; 0 0 0").is_err());
        assert!(PlanePartition::parse(s, "inf 1; 1 inf").is_err());
        assert_eq!(pp(s, "inf 1; 1 1").to_string(), "inf 1; 1 1");
    }

    #[test]
    fn ord_schubert_examples() {
        let s = g(2, 4);
        let b = pp(s, "2 2; 2 1");
        assert_eq!(b.ord_schubert(&part(s, &[1])).unwrap(), ExtNat::Fin(3));
        assert_eq!(b.ord_schubert(&part(s, &[2, 1])).unwrap(), ExtNat::Fin(2));
        assert_eq!(
            PlanePartition::zero(s).ord_schubert(&part(s, &[2])).unwrap(),
            ExtNat::ZERO
        );
        assert!(b.ord_schubert(&Partition::empty(s)).is_err());
    }

    #[test]
    fn essential_examples() {
        let s = g(2, 4);
        let b = pp(s, "2 2; 2 1");
        let a = b.essential_profile();
        assert_eq!(a.to_string(), "3 2; 2 1");
        assert_eq!(PlanePartition::from_essential(&a).unwrap(), b);
        assert_eq!(
            pp(s, "inf 1; 1 1").essential_profile().get(1, 1),
            ExtNat::Inf
        );
        assert!(PlanePartition::zero(s).essential_profile().rows().concat().iter().all(|e| *e == ExtNat::ZERO));
    }

    #[test]
    fn essential_violation_found_by_search() {
        // Search 2x2 matrices with entries ≤ 2 for a monotone one that breaks
        // supermodularity; every such matrix must be rejected.
        let s = g(2, 4);
        let mut rejected_monotone = 0;
        for a in 0..=2u64 {
            for b in 0..=a {
                for c in 0..=a {
                    for d in 0..=b.min(c) {
                        let rows = vec![
                            vec![ExtNat::Fin(a), ExtNat::Fin(b)],
                            vec![ExtNat::Fin(c), ExtNat::Fin(d)],
                        ];
                        let alpha = EssentialProfile::new_unchecked(s, &rows).unwrap();
                        let ok = a >= c + d && a >= b + d;
                        assert_eq!(alpha.validate().is_ok(), ok);
                        if !ok {
                            rejected_monotone += 1;
                            assert!(PlanePartition::from_essential(&alpha).is_err());
                        }
                    }
                }
            }
        }
        assert!(rejected_monotone > 0);
        let bad = EssentialProfile::new_unchecked(
            s,
            &[vec![ExtNat::Fin(1), ExtNat::Fin(1)], vec![ExtNat::Fin(1), ExtNat::Fin(1)]],
        )
        .unwrap();
        assert!(bad.validate().is_err());
    }

    #[test]
    fn contact_profile_example() {
        let s = g(2, 4);
        let b = pp(s, "2 2; 2 1");
        let cp = b.contact_profile();
        assert_eq!(cp[&part(s, &[2, 2])], ExtNat::Fin(1));
        for (l, v) in &cp {
            assert_eq!(b.ord_schubert(l).unwrap(), *v);
        }
        assert!(PlanePartition::zero(s)
            .contact_profile()
            .values()
            .all(|v| *v == ExtNat::ZERO));
    }

    #[test]
    fn weight_exponent_examples() {
        let s = g(2, 4);
        assert_eq!(pp(s, "2 2; 2 1").weight_exponents().to_string(), "2 1; 1 1");
        assert_eq!(PlanePartition::zero(s).weight_exponents().to_string(), "0 0; 0 0");
    }

    #[test]
    fn weight_exponent_layout_g36() {
        // the displayed G(3,6) layout: β on the diagonal, β_{i,j} - β_{i+1,j}
        // above it and β_{i,j} - β_{i,j+1} below it
        let s = g(3, 6);
        let b = pp(s, "9 7 4; 6 5 2; 3 1 0");
        let c = b.weight_exponents();
        assert_eq!(c.to_string(), "9 2 2; 1 5 2; 2 1 0");
    }

    #[test]
    fn floors_examples() {
        let s = g(2, 4);
        let b = pp(s, "2 2; 2 1");
        let f = b.floors();
        assert_eq!(
            f,
            vec![
                (part(s, &[2, 2]), ExtNat::Fin(1)),
                (part(s, &[2, 1]), ExtNat::Fin(1))
            ]
        );
        assert_eq!(PlanePartition::from_floors(s, &f).unwrap(), b);
        let mu = part(s, &[2, 1]);
        let triple = PlanePartition::from_floors(s, &[(mu.clone(), ExtNat::Fin(3))]).unwrap();
        assert_eq!(triple.to_string(), "3 3; 3 0");
        assert!(PlanePartition::from_floors(
            s,
            &[(part(s, &[1]), ExtNat::Fin(1)), (part(s, &[2]), ExtNat::Fin(1))]
        )
        .is_err());
        let one = pp(s, "1 1; 1 0");
        assert_eq!(one.floors(), vec![(part(s, &[2, 1]), ExtNat::Fin(1))]);
    }

    #[test]
    fn home_center_examples() {
        let s = g(2, 4);
        assert_eq!(
            pp(s, "inf 1; 1 1").home_center(),
            (part(s, &[1]), part(s, &[2, 2]))
        );
        assert_eq!(
            PlanePartition::zero(s).home_center(),
            (Partition::empty(s), Partition::empty(s))
        );
        assert_eq!(
            pp(s, "2 1; 0 0").home_center(),
            (Partition::empty(s), part(s, &[2]))
        );
    }

    #[test]
    fn plateau_examples() {
        let s = g(2, 4);
        let b = pp(s, "2 2; 2 1");
        let pl = b.plateaux();
        assert_eq!(pl[0].a, 1);
        assert_eq!(pl[0].b, 1);
        assert_eq!(pl[0].height, ExtNat::Inf);
        assert_eq!(pl[0].fall, ExtNat::Inf);
        let p22 = pl.iter().find(|p| (p.a, p.b) == (2, 2)).unwrap();
        assert_eq!((p22.height, p22.fall), (ExtNat::Fin(2), ExtNat::Fin(1)));
        let inf = pp(s, "inf 1; 1 1").plateaux();
        assert_eq!(inf[0].fall, ExtNat::ZERO);
    }

    #[test]
    fn plateau_figure_reconstruction() {
        // three plateaux of height 3 with corners at (1,4), (3,3) and (4,1)
        let s = g(4, 8);
        let b = pp(s, "3 3 3 2; 3 3 3 1; 3 3 2 1; 2 1 1 0");
        let corners: Vec<(usize, usize)> = b
            .plateaux()
            .into_iter()
            .filter(|p| p.height.is_finite() && p.fall > ExtNat::ZERO)
            .map(|p| {
                assert_eq!(p.height, ExtNat::Fin(3));
                (p.a, p.b)
            })
            .collect();
        assert_eq!(corners, vec![(1, 4), (3, 3), (4, 1)]);
    }

    #[test]
    fn enumeration_counts() {
        // MacMahon box formula for a 2x2 box, heights ≤ 2: 20
        assert_eq!(enumerate_plane_partitions(g(2, 4), 2).len(), 20);
        assert_eq!(enumerate_plane_partitions(g(1, 3), 3).len(), 10);
    }

    pub(crate) fn arb_plane_partition(max_n: usize, max_h: u64) -> impl Strategy<Value = PlanePartition> {
        (2..=max_n)
            .prop_flat_map(move |n| (1..n, Just(n)))
            .prop_flat_map(move |(k, n)| {
                let s = GrassmannShape::new(k, n).unwrap();
                proptest::collection::vec(0..=max_h, s.cells()).prop_map(move |raw| {
                    sort_to_plane_partition(s, raw)
                })
            })
    }

    /// Turns arbitrary entries into a plane partition by cumulative minima from
    /// the bottom-right corner.
    pub(crate) fn sort_to_plane_partition(s: GrassmannShape, raw: Vec<u64>) -> PlanePartition {
        let (k, cols) = (s.k(), s.cols());
        let mut m = raw;
        for i in (0..k).rev() {
            for j in (0..cols).rev() {
                let mut v = m[i * cols + j];
                if i + 1 < k {
                    v = v.max(m[(i + 1) * cols + j]);
                }
                if j + 1 < cols {
                    v = v.max(m[i * cols + j + 1]);
                }
                m[i * cols + j] = v;
            }
        }
        let rows: Vec<Vec<u64>> = m.chunks(cols).map(|c| c.to_vec()).collect();
        PlanePartition::from_finite(s, &rows).unwrap()
    }

    proptest! {
        #[test]
        fn essential_round_trip(b in arb_plane_partition(8, 6)) {
            let a = b.essential_profile();
            prop_assert!(a.validate().is_ok());
            prop_assert_eq!(PlanePartition::from_essential(&a).unwrap(), b);
        }

        #[test]
        fn contact_profile_uses_schubert_conditions(b in arb_plane_partition(7, 4)) {
            let cp = b.contact_profile();
            let alpha = b.essential_profile();
            for (l, v) in &cp {
                let via = l.schubert_conditions().into_iter().map(|(a, bb)| alpha.get(a, bb)).min().unwrap();
                prop_assert_eq!(via, *v);
            }
        }

        #[test]
        fn volume_equals_floor_sizes(b in arb_plane_partition(8, 5)) {
            let total: u64 = b
                .floors()
                .iter()
                .map(|(mu, m)| mu.size() as u64 * m.finite().unwrap())
                .sum();
            prop_assert_eq!(ExtNat::Fin(total), b.volume());
            prop_assert_eq!(PlanePartition::from_floors(b.shape(), &b.floors()).unwrap(), b);
        }

        #[test]
        fn weight_exponents_are_non_negative(b in arb_plane_partition(8, 6)) {
            // construction would panic on a negative difference
            let c = b.weight_exponents();
            prop_assert_eq!(c.shape(), b.shape());
        }
    }
}
