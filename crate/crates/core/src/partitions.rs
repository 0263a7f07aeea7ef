//! Linear partitions in the `k × (n-k)` box, multi-indexes, Bruhat order,
//! Schubert conditions and outside corners.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};

/// The pair `(k, n)` of a Grassmannian `G(k,n)`, with `0 < k < n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GrassmannShape {
    k: usize,
    n: usize,
}

impl GrassmannShape {
    pub fn new(k: usize, n: usize) -> Result<Self> {
        if k == 0 || k >= n {
            return invalid(format!("need 0 < k < n, got k={k}, n={n}"));
        }
        Ok(Self { k, n })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of columns `n - k` of the box.
    pub fn cols(&self) -> usize {
        self.n - self.k
    }

    /// Number of cells `k(n-k)` of the box.
    pub fn cells(&self) -> usize {
        self.k * self.cols()
    }

    /// All cells `(i, j)` of the box in row-major order, 1-based.
    pub fn cell_iter(&self) -> impl Iterator<Item = (usize, usize)> {
        let cols = self.cols();
        (1..=self.k).flat_map(move |i| (1..=cols).map(move |j| (i, j)))
    }

    /// Every partition fitting in the box, including the empty one.
    pub fn partitions(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut parts = Vec::with_capacity(self.k);
        fill_partitions(self, &mut parts, self.cols(), &mut out);
        out
    }

    /// Every multi-index `[i_1 < … < i_k]` in `1..=n`, in lexicographic order.
    pub fn multi_indices(&self) -> Vec<MultiIndex> {
        let mut out = Vec::new();
        let mut current = Vec::with_capacity(self.k);
        fill_subsets(1, self.n, self.k, &mut current, &mut |s| {
            out.push(MultiIndex {
                entries: s.to_vec(),
                shape: *self,
            })
        });
        out
    }
}

impl fmt::Display for GrassmannShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "G({},{})", self.k, self.n)
    }
}

fn fill_partitions(
    shape: &GrassmannShape,
    parts: &mut Vec<usize>,
    max_part: usize,
    out: &mut Vec<Partition>,
) {
    out.push(Partition {
        parts: parts.clone(),
        shape: *shape,
    });
    if parts.len() == shape.k {
        return;
    }
    for p in 1..=max_part {
        parts.push(p);
        fill_partitions(shape, parts, p, out);
        parts.pop();
    }
}

/// Calls `f` on every strictly increasing `size`-subset of `lo..=hi`.
pub(crate) fn fill_subsets(
    lo: usize,
    hi: usize,
    size: usize,
    current: &mut Vec<usize>,
    f: &mut impl FnMut(&[usize]),
) {
    if current.len() == size {
        f(current);
        return;
    }
    let remaining = size - current.len();
    let mut v = lo;
    while v + remaining <= hi + 1 {
        current.push(v);
        fill_subsets(v + 1, hi, size, current, f);
        current.pop();
        v += 1;
    }
}

/// All strictly increasing `size`-subsets of `lo..=hi`.
pub(crate) fn subsets(lo: usize, hi: usize, size: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(size);
    fill_subsets(lo, hi, size, &mut cur, &mut |s| out.push(s.to_vec()));
    out
}

/// A weakly decreasing list of positive parts fitting in the `k × (n-k)` box.
///
/// Trailing zeros are stripped on construction, so two partitions with the
/// same diagram compare equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Partition {
    parts: Vec<usize>,
    shape: GrassmannShape,
}

impl Partition {
    pub fn new(shape: GrassmannShape, parts: &[usize]) -> Result<Self> {
        let mut parts: Vec<usize> = parts.to_vec();
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return invalid(format!("parts {parts:?} are not weakly decreasing"));
        }
        if parts.len() > shape.k {
            return invalid(format!(
                "partition {parts:?} has more than k={} parts",
                shape.k
            ));
        }
        if let Some(&p) = parts.first() {
            if p > shape.cols() {
                return invalid(format!(
                    "part {p} exceeds n-k={} in {shape}",
                    shape.cols()
                ));
            }
        }
        Ok(Self { parts, shape })
    }

    pub fn empty(shape: GrassmannShape) -> Self {
        Self {
            parts: Vec::new(),
            shape,
        }
    }

    /// The rectangle `(b^a)`.
    pub fn rectangle(shape: GrassmannShape, a: usize, b: usize) -> Result<Self> {
        Self::new(shape, &vec![b; a])
    }

    /// The full box `((n-k)^k)`.
    pub fn full(shape: GrassmannShape) -> Self {
        Self {
            parts: vec![shape.cols(); shape.k],
            shape,
        }
    }

    /// Builds the partition whose diagram is the set of cells where `pred` holds.
    /// The predicate must describe an order ideal of the box.
    pub(crate) fn from_cells(shape: GrassmannShape, pred: impl Fn(usize, usize) -> bool) -> Self {
        let parts: Vec<usize> = (1..=shape.k)
            .map(|i| (1..=shape.cols()).take_while(|&j| pred(i, j)).count())
            .collect();
        Self::new(shape, &parts).expect("cell predicate must describe a diagram")
    }

    /// Parses the comma-separated text form, e.g. `"3,3,1"`.
    pub fn parse(shape: GrassmannShape, text: &str) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() {
            return invalid("empty partition text");
        }
        let parts = text
            .split(',')
            .map(|s| {
                s.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidInput(format!("bad part {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(shape, &parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn shape(&self) -> GrassmannShape {
        self.shape
    }

    /// The `i`-th part (1-based), zero past the last part.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return self.shape.cols();
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    /// Number of boxes `|λ|`.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn num_parts(&self) -> usize {
        self.parts.len()
    }

    pub fn is_rectangular(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] == w[1])
    }

    /// Whether the cell `(i, j)` (1-based) belongs to the diagram.
    pub fn contains_cell(&self, i: usize, j: usize) -> bool {
        i >= 1 && j >= 1 && j <= self.part(i)
    }

    /// Cells of the diagram in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (1..=p).map(move |j| (i + 1, j)))
    }

    /// Diagram containment `self ⊇ other`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.parts.len() <= self.parts.len()
            && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    /// Union of diagrams.
    pub fn union(&self, other: &Partition) -> Result<Partition> {
        self.check_shape(other)?;
        let len = self.parts.len().max(other.parts.len());
        let parts: Vec<usize> = (1..=len)
            .map(|i| self.part(i).max(other.part(i)))
            .collect();
        Partition::new(self.shape, &parts)
    }

    fn check_shape(&self, other: &Partition) -> Result<()> {
        if self.shape != other.shape {
            return Err(Error::ShapeMismatch(format!(
                "{} vs {}",
                self.shape, other.shape
            )));
        }
        Ok(())
    }

    /// Bruhat order on Schubert varieties written on partitions: `λ ≤ μ` iff the
    /// diagram of `λ` is contained in the diagram of `μ`.
    pub fn bruhat_leq(&self, other: &Partition) -> Result<bool> {
        self.check_shape(other)?;
        Ok(other.contains(self))
    }

    /// The multi-index `I` with `i_s = s + λ_{k+1-s}`.
    pub fn multi_index(&self) -> MultiIndex {
        let k = self.shape.k;
        let entries = (1..=k).map(|s| s + self.part(k + 1 - s)).collect();
        MultiIndex {
            entries,
            shape: self.shape,
        }
    }

    /// Inverse of [`Partition::multi_index`].
    pub fn from_multi_index(index: &MultiIndex) -> Partition {
        let k = index.shape.k;
        let parts: Vec<usize> = (1..=k)
            .map(|i| {
                let s = k + 1 - i;
                index.entries[s - 1] - s
            })
            .collect();
        Partition::new(index.shape, &parts).expect("validated multi-index")
    }

    /// Maximal rectangles `(b^a) ⊆ λ`, returned as `(a, b)` from North-East to
    /// South-West (increasing `a`). These are the South-East corners of the diagram.
    pub fn schubert_conditions(&self) -> Vec<(usize, usize)> {
        (1..=self.parts.len())
            .filter(|&i| self.part(i) > self.part(i + 1))
            .map(|i| (i, self.part(i)))
            .collect()
    }

    /// Proper and virtual outside corners, ordered with `a` increasing and `b`
    /// decreasing.
    pub fn outside_corners(&self) -> Vec<Corner> {
        let k = self.shape.k;
        let cols = self.shape.cols();
        let proper: Vec<Corner> = self
            .schubert_conditions()
            .into_iter()
            .map(|(a, b)| Corner {
                a,
                b,
                kind: CornerKind::Proper,
            })
            .collect();
        let mut corners = Vec::with_capacity(proper.len() + 2);
        if !proper.iter().any(|c| c.b == cols) {
            corners.push(Corner {
                a: 0,
                b: cols,
                kind: CornerKind::Virtual,
            });
        }
        let has_bottom = proper.iter().any(|c| c.a == k);
        corners.extend(proper);
        if !has_bottom {
            corners.push(Corner {
                a: k,
                b: 0,
                kind: CornerKind::Virtual,
            });
        }
        corners
    }

    /// Partitions `λ^s` whose Schubert varieties are the irreducible components of
    /// the singular locus of `Ω_λ`. Empty exactly when `Ω_λ` is smooth.
    pub fn singular_components(&self) -> Vec<Partition> {
        let corners = self.outside_corners();
        if corners.len() < 3 {
            return Vec::new();
        }
        corners[1..corners.len() - 1]
            .iter()
            .map(|c| {
                let rim = Partition::rectangle(self.shape, c.a + 1, c.b + 1)
                    .expect("interior corners leave room for the rim");
                self.union(&rim).expect("same shape")
            })
            .collect()
    }

    /// Number of cells of the box touching the diagram (along an edge or at a
    /// vertex) but not in it. Defined for non-empty `λ` with at most `k-1` parts,
    /// each at most `n-k-1`.
    pub fn rim_size(&self) -> Result<usize> {
        let k = self.shape.k;
        let cols = self.shape.cols();
        if self.is_empty() {
            return invalid("rim size is not defined for the empty partition");
        }
        if self.parts.len() > k - 1 || self.part(1) > cols.saturating_sub(1) {
            return invalid(format!(
                "rim size needs at most {} parts of size at most {}",
                k - 1,
                cols.saturating_sub(1)
            ));
        }
        let count = self
            .shape
            .cell_iter()
            .filter(|&(i, j)| !self.contains_cell(i, j))
            .filter(|&(i, j)| {
                // the up-left neighbour is the only one that matters for an order ideal
                i >= 1 && j >= 1 && self.contains_cell(i.max(2) - 1, j.max(2) - 1)
            })
            .count();
        Ok(count)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "()");
        }
        let text: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", text.join(","))
    }
}

/// A multi-index `[i_1 < … < i_k]` with entries in `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MultiIndex {
    entries: Vec<usize>,
    shape: GrassmannShape,
}

impl MultiIndex {
    pub fn new(shape: GrassmannShape, entries: &[usize]) -> Result<Self> {
        if entries.len() != shape.k {
            return invalid(format!(
                "multi-index {entries:?} must have exactly k={} entries",
                shape.k
            ));
        }
        if entries.iter().any(|&e| e == 0 || e > shape.n) {
            return invalid(format!(
                "multi-index {entries:?} has entries outside 1..={}",
                shape.n
            ));
        }
        if entries.windows(2).any(|w| w[0] >= w[1]) {
            return invalid(format!("multi-index {entries:?} is not strictly increasing"));
        }
        Ok(Self {
            entries: entries.to_vec(),
            shape,
        })
    }

    /// Parses `"[1,3,6]"` (brackets optional).
    pub fn parse(shape: GrassmannShape, text: &str) -> Result<Self> {
        let inner = text
            .trim()
            .trim_start_matches('[')
            .trim_end_matches(']')
            .trim();
        if inner.is_empty() {
            return invalid("empty multi-index");
        }
        let entries = inner
            .split(',')
            .map(|s| {
                s.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidInput(format!("bad multi-index entry {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(shape, &entries)
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn shape(&self) -> GrassmannShape {
        self.shape
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text: Vec<String> = self.entries.iter().map(|p| p.to_string()).collect();
        write!(f, "[{}]", text.join(","))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CornerKind {
    Proper,
    Virtual,
}

/// An outside corner `(a, b)`; virtual corners are `(0, n-k)` and `(k, 0)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Corner {
    pub a: usize,
    pub b: usize,
    pub kind: CornerKind,
}
