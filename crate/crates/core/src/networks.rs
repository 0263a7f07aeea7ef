//! The planar network `Γ₀`, essential weightings, weight matrices and
//! Lindström evaluation over series or the tropical semiring.

use num::{BigInt, BigRational};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::partitions::{GrassmannShape, MultiIndex};
use crate::planepartitions::{ExtNat, PlanePartition};
use crate::powerseries::{ArcMatrix, SeriesMatrix, TruncatedSeries};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Edge {
    from: usize,
    to: usize,
    slot: Option<usize>,
}

/// A planar network on the `k × (n-k)` grid. Sources sit at the right end of
/// each row and sinks at the bottom of each column. Edges are stored with an
/// optional weight slot; vertices likewise.
#[derive(Clone, Debug)]
pub struct PlanarNetwork {
    shape: GrassmannShape,
    edges: Vec<Edge>,
    vertex_slot: Vec<Option<usize>>,
    slots: usize,
    /// Outgoing edge indices per vertex.
    out: Vec<Vec<usize>>,
    topo: Vec<usize>,
}

impl PlanarNetwork {
    /// The network `Γ₀` with the essential slot for `w_{ij}` at index
    /// `(i-1)(n-k) + (j-1)`.
    pub fn gamma0(shape: GrassmannShape) -> Self {
        let (k, cols) = (shape.k(), shape.cols());
        let mut edges = Vec::new();
        let mut vertex_slot = vec![None; k * cols + k + cols];
        let slot = |i: usize, j: usize| (i - 1) * cols + (j - 1);
        let node = |i: usize, j: usize| grid_node(shape, i, j);
        for i in 1..=k {
            edges.push(Edge {
                from: node(i, cols + 1),
                to: node(i, cols),
                slot: None,
            });
        }
        for j in 1..=cols {
            edges.push(Edge {
                from: node(k, j),
                to: node(k + 1, j),
                slot: None,
            });
        }
        for (i, j) in shape.cell_iter() {
            let (rows_left, cols_left) = (k - i, cols - j);
            if j < cols {
                edges.push(Edge {
                    from: node(i, j + 1),
                    to: node(i, j),
                    slot: (rows_left < cols_left).then(|| slot(i, j)),
                });
            }
            if i < k {
                edges.push(Edge {
                    from: node(i, j),
                    to: node(i + 1, j),
                    slot: (rows_left > cols_left).then(|| slot(i, j)),
                });
            }
            if rows_left == cols_left {
                vertex_slot[node(i, j)] = Some(slot(i, j));
            }
        }
        Self::assemble(shape, edges, vertex_slot, k * cols)
    }

    /// `Γ₀` plus one diagonal edge `v_{a,b+1} → v_{a+1,b}`, whose weight lives
    /// in the extra slot `k(n-k)`. Position `(a, n-k+1)` is source `a` and
    /// `(k+1, b)` is sink `b`.
    pub fn gamma1(shape: GrassmannShape, a: usize, b: usize) -> Result<Self> {
        if a == 0 || b == 0 || a > shape.k() || b > shape.cols() {
            return Err(Error::InvalidInput(format!(
                "diagonal edge position ({a},{b}) is outside the box"
            )));
        }
        let base = Self::gamma0(shape);
        let mut edges = base.edges;
        let extra = shape.cells();
        edges.push(Edge {
            from: grid_node(shape, a, b + 1),
            to: grid_node(shape, a + 1, b),
            slot: Some(extra),
        });
        Ok(Self::assemble(shape, edges, base.vertex_slot, extra + 1))
    }

    fn assemble(
        shape: GrassmannShape,
        edges: Vec<Edge>,
        vertex_slot: Vec<Option<usize>>,
        slots: usize,
    ) -> Self {
        let nodes = vertex_slot.len();
        let mut out = vec![Vec::new(); nodes];
        let mut indeg = vec![0usize; nodes];
        for (e, edge) in edges.iter().enumerate() {
            out[edge.from].push(e);
            indeg[edge.to] += 1;
        }
        let mut stack: Vec<usize> = (0..nodes).filter(|&v| indeg[v] == 0).collect();
        let mut topo = Vec::with_capacity(nodes);
        while let Some(v) = stack.pop() {
            topo.push(v);
            for &e in &out[v] {
                let t = edges[e].to;
                indeg[t] -= 1;
                if indeg[t] == 0 {
                    stack.push(t);
                }
            }
        }
        assert_eq!(topo.len(), nodes, "planar network must be acyclic");
        Self {
            shape,
            edges,
            vertex_slot,
            slots,
            out,
            topo,
        }
    }

    pub fn shape(&self) -> GrassmannShape {
        self.shape
    }

    pub fn num_sources(&self) -> usize {
        self.shape.k()
    }

    pub fn num_sinks(&self) -> usize {
        self.shape.cols()
    }

    pub fn num_internal_vertices(&self) -> usize {
        self.shape.cells()
    }

    /// Edges between internal vertices.
    pub fn num_internal_edges(&self) -> usize {
        let internal = self.shape.cells();
        self.edges
            .iter()
            .filter(|e| e.from < internal && e.to < internal)
            .count()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    /// Number of weight slots (`k(n-k)` for `Γ₀`).
    pub fn num_slots(&self) -> usize {
        self.slots
    }

    fn source(&self, i: usize) -> usize {
        grid_node(self.shape, i, self.shape.cols() + 1)
    }

    fn sink(&self, j: usize) -> usize {
        grid_node(self.shape, self.shape.k() + 1, j)
    }

    /// The weight matrix `x_{ij} = Σ_{paths i → j} w_p`, computed by dynamic
    /// programming over the acyclic network.
    pub fn weight_matrix(&self, w: &EssentialWeighting) -> Result<SeriesMatrix> {
        self.check_weighting(w)?;
        let p = w.precision();
        let (k, cols) = (self.shape.k(), self.shape.cols());
        let mut x = SeriesMatrix::zero(k, cols, p);
        for i in 1..=k {
            let mut acc: Vec<Option<TruncatedSeries>> = vec![None; self.vertex_slot.len()];
            acc[self.source(i)] = Some(TruncatedSeries::one(p));
            for &v in &self.topo {
                let Some(mut here) = acc[v].take() else {
                    continue;
                };
                if let Some(s) = self.vertex_slot[v] {
                    here = &here * &w.weights[s];
                }
                for &e in &self.out[v] {
                    let edge = self.edges[e];
                    let add = match edge.slot {
                        Some(s) => &here * &w.weights[s],
                        None => here.clone(),
                    };
                    acc[edge.to] = Some(match acc[edge.to].take() {
                        Some(prev) => &prev + &add,
                        None => add,
                    });
                }
                acc[v] = Some(here);
            }
            for j in 1..=cols {
                if let Some(v) = &acc[self.sink(j)] {
                    x.set(i - 1, j - 1, v.clone());
                }
            }
        }
        Ok(x)
    }

    /// All vertex-disjoint families joining the sources `rows` to the sinks
    /// `cols` (both 1-based, increasing, paired in order). Each family is the
    /// list of weight slots it picks up.
    pub fn path_families(&self, rows: &[usize], cols: &[usize]) -> Result<Vec<Vec<usize>>> {
        if rows.len() != cols.len() {
            return Err(Error::InvalidInput(format!(
                "minor needs equal index counts, got {} rows and {} columns",
                rows.len(),
                cols.len()
            )));
        }
        let sorted = |v: &[usize], hi: usize| {
            v.windows(2).all(|w| w[0] < w[1]) && v.iter().all(|&x| x >= 1 && x <= hi)
        };
        if !sorted(rows, self.shape.k()) || !sorted(cols, self.shape.cols()) {
            return Err(Error::InvalidInput(
                "minor indices must be increasing and inside the network".into(),
            ));
        }
        let mut families = Vec::new();
        let mut used = vec![false; self.vertex_slot.len()];
        let mut slots = Vec::new();
        self.families_from(0, rows, cols, &mut used, &mut slots, &mut families);
        Ok(families)
    }

    fn families_from(
        &self,
        idx: usize,
        rows: &[usize],
        cols: &[usize],
        used: &mut Vec<bool>,
        slots: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if idx == rows.len() {
            out.push(slots.clone());
            return;
        }
        let start = self.source(rows[idx]);
        let target = self.sink(cols[idx]);
        self.extend_path(start, target, idx, rows, cols, used, slots, out);
    }

    #[allow(clippy::too_many_arguments)]
    fn extend_path(
        &self,
        v: usize,
        target: usize,
        idx: usize,
        rows: &[usize],
        cols: &[usize],
        used: &mut Vec<bool>,
        slots: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if used[v] {
            return;
        }
        used[v] = true;
        let mark = slots.len();
        if let Some(s) = self.vertex_slot[v] {
            slots.push(s);
        }
        if v == target {
            self.families_from(idx + 1, rows, cols, used, slots, out);
        } else {
            for &e in &self.out[v] {
                let edge = self.edges[e];
                let m2 = slots.len();
                if let Some(s) = edge.slot {
                    slots.push(s);
                }
                self.extend_path(edge.to, target, idx, rows, cols, used, slots, out);
                slots.truncate(m2);
            }
        }
        slots.truncate(mark);
        used[v] = false;
    }

    /// The minor `[rows|cols]` of the weight matrix as a sum over
    /// non-intersecting path families. The empty minor is `1`.
    pub fn lindstrom_minor(
        &self,
        w: &EssentialWeighting,
        rows: &[usize],
        cols: &[usize],
    ) -> Result<TruncatedSeries> {
        self.check_weighting(w)?;
        let p = w.precision();
        let mut total = TruncatedSeries::zero(p);
        for fam in self.path_families(rows, cols)? {
            let mut term = TruncatedSeries::one(p);
            for s in fam {
                term = &term * &w.weights[s];
            }
            total = &total + &term;
        }
        Ok(total)
    }

    /// Minimum over families of the summed slot exponents; `∞` if no family exists.
    pub fn tropical_minor(
        &self,
        exponents: &[ExtNat],
        rows: &[usize],
        cols: &[usize],
    ) -> Result<ExtNat> {
        if exponents.len() != self.slots {
            return Err(Error::ShapeMismatch(format!(
                "expected {} exponents, got {}",
                self.slots,
                exponents.len()
            )));
        }
        Ok(self
            .path_families(rows, cols)?
            .iter()
            .map(|fam| fam.iter().map(|&s| exponents[s]).sum::<ExtNat>())
            .min()
            .unwrap_or(ExtNat::Inf))
    }

    fn check_weighting(&self, w: &EssentialWeighting) -> Result<()> {
        if w.weights.len() != self.slots {
            return Err(Error::ShapeMismatch(format!(
                "network has {} weight slots, weighting has {}",
                self.slots,
                w.weights.len()
            )));
        }
        Ok(())
    }
}

/// Node id of grid position `(i, j)`; `j = n-k+1` are sources, `i = k+1` sinks.
fn grid_node(shape: GrassmannShape, i: usize, j: usize) -> usize {
    let (k, cols) = (shape.k(), shape.cols());
    if j == cols + 1 {
        k * cols + (i - 1)
    } else if i == k + 1 {
        k * cols + k + (j - 1)
    } else {
        (i - 1) * cols + (j - 1)
    }
}

/// Series weights on the slots of a network.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EssentialWeighting {
    weights: Vec<TruncatedSeries>,
}

impl EssentialWeighting {
    /// Weights `w_{ij}` given as a `k × (n-k)` grid.
    pub fn from_grid(shape: GrassmannShape, rows: Vec<Vec<TruncatedSeries>>) -> Result<Self> {
        if rows.len() != shape.k() || rows.iter().any(|r| r.len() != shape.cols()) {
            return Err(Error::ShapeMismatch(format!(
                "weighting for {shape} must be {}x{}",
                shape.k(),
                shape.cols()
            )));
        }
        Self::from_slots(rows.concat())
    }

    /// Weights in slot order, including any extra slots of a modified network.
    pub fn from_slots(weights: Vec<TruncatedSeries>) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::InvalidInput("empty weighting".into()));
        }
        let p = weights.iter().map(|w| w.precision()).min().unwrap_or(0);
        Ok(Self {
            weights: weights.into_iter().map(|w| w.truncate(p)).collect(),
        })
    }

    /// `w_{ij} = t^{c_{ij}} u_{ij}` for the weight exponents of a finite `β`.
    pub fn for_plane_partition(
        beta: &PlanePartition,
        precision: usize,
        units: UnitSource,
    ) -> Result<Self> {
        let c = beta.weight_exponents();
        let shape = beta.shape();
        let mut rng = units.rng();
        let mut weights = Vec::with_capacity(shape.cells());
        for (i, j) in shape.cell_iter() {
            let e = c
                .get(i, j)
                .finite()
                .ok_or(Error::UnsupportedAtFinitePrecision)?;
            let u = match &mut rng {
                None => TruncatedSeries::one(precision),
                Some(r) => random_unit(r, precision),
            };
            let shift = TruncatedSeries::monomial(
                precision,
                e as usize,
                BigRational::from_integer(BigInt::from(1)),
            );
            weights.push(&shift * &u);
        }
        Self::from_slots(weights)
    }

    pub fn precision(&self) -> usize {
        self.weights.iter().map(|w| w.precision()).min().unwrap_or(0)
    }

    pub fn weights(&self) -> &[TruncatedSeries] {
        &self.weights
    }
}

/// How the units `u_{ij}` of a generic weighting are chosen.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum UnitSource {
    /// Every unit is `1`.
    Ones,
    /// Integer series with constant term in `1..=9` and other coefficients in
    /// `-9..=9`, drawn from a seeded generator.
    Seeded(u64),
}

impl UnitSource {
    fn rng(self) -> Option<ChaCha8Rng> {
        match self {
            UnitSource::Ones => None,
            UnitSource::Seeded(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
        }
    }
}

pub(crate) fn random_unit(rng: &mut impl Rng, precision: usize) -> TruncatedSeries {
    let mut c: Vec<i64> = (0..=precision).map(|_| rng.gen_range(-9..=9)).collect();
    c[0] = rng.gen_range(1..=9);
    TruncatedSeries::from_ints(precision, &c)
}

/// Minimum over vertex-disjoint families in `Γ₀` of the summed weight
/// exponents `c(β)`: the order of the minor `[rows|cols]` at the generic point
/// of the contact stratum.
pub fn tropical_minor_order(beta: &PlanePartition, rows: &[usize], cols: &[usize]) -> Result<ExtNat> {
    let net = PlanarNetwork::gamma0(beta.shape());
    let c = beta.weight_exponents();
    net.tropical_minor(&c.rows().concat(), rows, cols)
}

/// The minor of the left block matching the Plücker coordinate `I` on the
/// opposite big cell: entries `≤ n-k` are columns, and an entry `n-k+c`
/// removes row `k+1-c`.
pub fn dehomogenize(index: &MultiIndex) -> (Vec<usize>, Vec<usize>) {
    let shape = index.shape();
    let (k, cols) = (shape.k(), shape.cols());
    let left: Vec<usize> = index.entries().iter().copied().filter(|&e| e <= cols).collect();
    let dropped: Vec<usize> = index
        .entries()
        .iter()
        .filter(|&&e| e > cols)
        .map(|&e| k + 1 - (e - cols))
        .collect();
    let rows: Vec<usize> = (1..=k).filter(|r| !dropped.contains(r)).collect();
    (rows, left)
}

/// Order of the Plücker coordinate `I` at the generic point of `C_β`.
pub fn plucker_ord(beta: &PlanePartition, index: &MultiIndex) -> Result<ExtNat> {
    if index.shape() != beta.shape() {
        return Err(Error::ShapeMismatch(format!(
            "{} vs {}",
            index.shape(),
            beta.shape()
        )));
    }
    let (rows, cols) = dehomogenize(index);
    tropical_minor_order(beta, &rows, &cols)
}

/// Orders of every Plücker coordinate, in lexicographic multi-index order.
pub fn plucker_profile(beta: &PlanePartition) -> Vec<(MultiIndex, ExtNat)> {
    let net = PlanarNetwork::gamma0(beta.shape());
    let c = beta.weight_exponents().rows().concat();
    beta.shape()
        .multi_indices()
        .into_iter()
        .map(|i| {
            let (rows, cols) = dehomogenize(&i);
            let v = net
                .tropical_minor(&c, &rows, &cols)
                .expect("valid de-homogenized indices");
            (i, v)
        })
        .collect()
}

/// The arc `(X(Γ₀, w) | Δ')` with `w_{ij} = t^{c_{ij}} u_{ij}`.
pub fn generic_arc(beta: &PlanePartition, precision: usize, units: UnitSource) -> Result<ArcMatrix> {
    if !beta.is_finite() {
        return Err(Error::UnsupportedAtFinitePrecision);
    }
    let shape = beta.shape();
    let w = EssentialWeighting::for_plane_partition(beta, precision, units)?;
    let x = PlanarNetwork::gamma0(shape).weight_matrix(&w)?;
    ArcMatrix::new(shape, attach_antidiagonal(shape, &x, precision))
}

/// Appends the antidiagonal identity block `Δ'` to a `k × (n-k)` matrix.
pub fn attach_antidiagonal(shape: GrassmannShape, x: &SeriesMatrix, precision: usize) -> SeriesMatrix {
    let (k, cols) = (shape.k(), shape.cols());
    let mut m = SeriesMatrix::zero(k, shape.n(), precision);
    for r in 0..k {
        for c in 0..cols {
            m.set(r, c, x.get(r, c).truncate(precision));
        }
        m.set(r, cols + (k - 1 - r), TruncatedSeries::one(precision));
    }
    m
}
