//! Truncated power series over the rationals, series matrices, determinantal
//! orders and invariant factor profiles of arcs.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{BigInt, BigRational, One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{invalid, Error, Result};
use crate::partitions::{subsets, GrassmannShape, MultiIndex};
use crate::planepartitions::{EssentialProfile, ExtNat, PlanePartition};

/// An order of vanishing, possibly only known to be at least some bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Order {
    Exact(u64),
    /// All stored coefficients vanish; the true order is at least this value.
    AtLeast(u64),
    /// The identically zero element, e.g. a minor larger than the matrix.
    Infinite,
}

impl Order {
    /// Minimum that stays conservative when a lower bound is involved.
    pub fn min(self, other: Order) -> Order {
        use Order::*;
        match (self, other) {
            (Infinite, x) | (x, Infinite) => x,
            (Exact(a), Exact(b)) => Exact(a.min(b)),
            (Exact(a), AtLeast(b)) | (AtLeast(b), Exact(a)) => {
                if a < b {
                    Exact(a)
                } else {
                    AtLeast(b)
                }
            }
            (AtLeast(a), AtLeast(b)) => AtLeast(a.min(b)),
        }
    }

    pub fn exact(self) -> Option<ExtNat> {
        match self {
            Order::Exact(v) => Some(ExtNat::Fin(v)),
            Order::Infinite => Some(ExtNat::Inf),
            Order::AtLeast(_) => None,
        }
    }
}

impl Add for Order {
    type Output = Order;
    fn add(self, rhs: Order) -> Order {
        use Order::*;
        match (self, rhs) {
            (Infinite, _) | (_, Infinite) => Infinite,
            (Exact(a), Exact(b)) => Exact(a + b),
            (Exact(a), AtLeast(b)) | (AtLeast(a), Exact(b)) | (AtLeast(a), AtLeast(b)) => {
                AtLeast(a + b)
            }
        }
    }
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Order::Exact(v) => write!(f, "{v}"),
            Order::AtLeast(v) => write!(f, ">={v}"),
            Order::Infinite => write!(f, "inf"),
        }
    }
}

impl Serialize for Order {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Order::Exact(v) => s.serialize_u64(*v),
            other => s.serialize_str(&other.to_string()),
        }
    }
}

/// `c_0 + c_1 t + … + c_m t^m` modulo `t^{m+1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    coeffs: Vec<BigRational>,
}

impl TruncatedSeries {
    pub fn zero(precision: usize) -> Self {
        Self {
            coeffs: vec![BigRational::zero(); precision + 1],
        }
    }

    pub fn one(precision: usize) -> Self {
        Self::monomial(precision, 0, BigRational::one())
    }

    /// `c · t^d`, vanishing when `d` exceeds the precision.
    pub fn monomial(precision: usize, degree: usize, c: BigRational) -> Self {
        let mut s = Self::zero(precision);
        if degree <= precision {
            s.coeffs[degree] = c;
        }
        s
    }

    /// Builds from integer coefficients `c_0, c_1, …`, truncating past the precision.
    pub fn from_ints(precision: usize, coeffs: &[i64]) -> Self {
        let mut s = Self::zero(precision);
        for (d, &c) in coeffs.iter().enumerate().take(precision + 1) {
            s.coeffs[d] = BigRational::from_integer(BigInt::from(c));
        }
        s
    }

    pub fn from_coeffs(precision: usize, coeffs: Vec<BigRational>) -> Self {
        let mut s = Self::zero(precision);
        for (d, c) in coeffs.into_iter().enumerate().take(precision + 1) {
            s.coeffs[d] = c;
        }
        s
    }

    pub fn precision(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, d: usize) -> BigRational {
        self.coeffs.get(d).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn truncate(&self, precision: usize) -> Self {
        let mut c = self.coeffs.clone();
        c.resize(precision + 1, BigRational::zero());
        Self { coeffs: c }
    }

    /// Index of the first non-zero coefficient, or `AtLeast(m+1)`.
    pub fn order(&self) -> Order {
        match self.coeffs.iter().position(|c| !c.is_zero()) {
            Some(d) => Order::Exact(d as u64),
            None => Order::AtLeast(self.coeffs.len() as u64),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_unit(&self) -> bool {
        !self.coeffs[0].is_zero()
    }

    /// Multiplicative inverse of a unit.
    pub fn inverse(&self) -> Result<Self> {
        if !self.is_unit() {
            return invalid("series with zero constant term is not invertible");
        }
        let m = self.precision();
        let c0_inv = self.coeffs[0].recip();
        let mut inv = vec![BigRational::zero(); m + 1];
        inv[0] = c0_inv.clone();
        for d in 1..=m {
            let mut acc = BigRational::zero();
            for e in 1..=d {
                acc += &self.coeffs[e] * &inv[d - e];
            }
            inv[d] = -acc * &c0_inv;
        }
        Ok(Self { coeffs: inv })
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Parses an integer-coefficient polynomial in `t`, e.g. `"t^2 - 3*t^3 + 1"`.
    pub fn parse(text: &str, precision: usize) -> Result<Self> {
        let bad = |why: &str| Error::InvalidInput(format!("bad series {text:?}: {why}"));
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad("empty"));
        }
        let mut out = Self::zero(precision);
        let mut terms: Vec<String> = Vec::new();
        let mut cur = String::new();
        for ch in compact.chars() {
            if (ch == '+' || ch == '-') && !cur.is_empty() && !cur.ends_with('^') {
                terms.push(std::mem::take(&mut cur));
            }
            cur.push(ch);
        }
        terms.push(cur);
        for term in terms {
            let (sign, body) = match term.strip_prefix('-') {
                Some(rest) => (-1i64, rest),
                None => (1, term.strip_prefix('+').unwrap_or(&term)),
            };
            if body.is_empty() {
                return Err(bad("dangling sign"));
            }
            let (coeff_text, degree) = match body.find('t') {
                None => (body, 0usize),
                Some(pos) => {
                    let c = body[..pos].trim_end_matches('*');
                    let rest = &body[pos + 1..];
                    let d = if rest.is_empty() {
                        1
                    } else {
                        rest.strip_prefix('^')
                            .ok_or_else(|| bad("expected '^' after t"))?
                            .parse::<usize>()
                            .map_err(|_| bad("bad exponent"))?
                    };
                    (c, d)
                }
            };
            let coeff: BigInt = if coeff_text.is_empty() {
                BigInt::one()
            } else {
                coeff_text
                    .parse::<BigInt>()
                    .map_err(|_| bad("bad coefficient"))?
            };
            if degree <= precision {
                out.coeffs[degree] += BigRational::from_integer(coeff * sign);
            }
        }
        Ok(out)
    }
}

fn fmt_coeff(c: &BigRational) -> String {
    if c.is_integer() {
        c.to_integer().to_string()
    } else {
        format!("({c})")
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { "-" } else { "+" })?;
            }
            first = false;
            let unit = abs.is_one();
            match d {
                0 => write!(f, "{}", fmt_coeff(&abs))?,
                _ => {
                    if !unit {
                        write!(f, "{}", fmt_coeff(&abs))?;
                    }
                    if d == 1 {
                        write!(f, "t")?;
                    } else {
                        write!(f, "t^{d}")?;
                    }
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn add(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let m = self.precision().min(rhs.precision());
        TruncatedSeries {
            coeffs: (0..=m).map(|d| &self.coeffs[d] + &rhs.coeffs[d]).collect(),
        }
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn sub(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let m = self.precision().min(rhs.precision());
        TruncatedSeries {
            coeffs: (0..=m).map(|d| &self.coeffs[d] - &rhs.coeffs[d]).collect(),
        }
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn neg(self) -> TruncatedSeries {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let m = self.precision().min(rhs.precision());
        let mut coeffs = vec![BigRational::zero(); m + 1];
        for (a, ca) in self.coeffs.iter().enumerate().take(m + 1) {
            if ca.is_zero() {
                continue;
            }
            for (b, cb) in rhs.coeffs.iter().enumerate().take(m + 1 - a) {
                if !cb.is_zero() {
                    coeffs[a + b] += ca * cb;
                }
            }
        }
        TruncatedSeries { coeffs }
    }
}

/// A matrix of truncated series, indexed from 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<TruncatedSeries>,
}

impl SeriesMatrix {
    pub fn new(entries: Vec<Vec<TruncatedSeries>>) -> Result<Self> {
        let rows = entries.len();
        let cols = entries.first().map_or(0, |r| r.len());
        if rows == 0 || cols == 0 || entries.iter().any(|r| r.len() != cols) {
            return invalid("series matrix rows must be non-empty and of equal length");
        }
        Ok(Self {
            rows,
            cols,
            entries: entries.concat(),
        })
    }

    pub fn zero(rows: usize, cols: usize, precision: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![TruncatedSeries::zero(precision); rows * cols],
        }
    }

    pub fn identity(size: usize, precision: usize) -> Self {
        let mut m = Self::zero(size, size, precision);
        for i in 0..size {
            m.set(i, i, TruncatedSeries::one(precision));
        }
        m
    }

    /// Parses rows separated by `;` and entries separated by `,`.
    pub fn parse(text: &str, precision: usize) -> Result<Self> {
        let rows = text
            .split(';')
            .map(|row| {
                row.split(',')
                    .map(|e| TruncatedSeries::parse(e, precision))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(rows)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn precision(&self) -> usize {
        self.entries.iter().map(|e| e.precision()).min().unwrap_or(0)
    }

    pub fn get(&self, r: usize, c: usize) -> &TruncatedSeries {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: TruncatedSeries) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn row_vecs(&self) -> Vec<Vec<TruncatedSeries>> {
        self.entries.chunks(self.cols).map(|c| c.to_vec()).collect()
    }

    pub fn mul(&self, rhs: &SeriesMatrix) -> Result<SeriesMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::ShapeMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let p = self.precision().min(rhs.precision());
        let mut out = SeriesMatrix::zero(self.rows, rhs.cols, p);
        for i in 0..self.rows {
            for j in 0..rhs.cols {
                let mut acc = TruncatedSeries::zero(p);
                for l in 0..self.cols {
                    acc = &acc + &(self.get(i, l) * rhs.get(l, j));
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }

    /// Sub-matrix on the given (0-based) row and column lists.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> SeriesMatrix {
        let entries = rows
            .iter()
            .flat_map(|&r| cols.iter().map(move |&c| self.get(r, c).clone()))
            .collect();
        SeriesMatrix {
            rows: rows.len(),
            cols: cols.len(),
            entries,
        }
    }

    fn check_indices(&self, rows: &[usize], cols: &[usize]) -> Result<()> {
        if rows.len() != cols.len() {
            return invalid(format!(
                "minor needs equal index counts, got {} rows and {} columns",
                rows.len(),
                cols.len()
            ));
        }
        if rows.iter().any(|&r| r >= self.rows) || cols.iter().any(|&c| c >= self.cols) {
            return invalid("minor index out of range");
        }
        Ok(())
    }

    /// Determinant of the selected square sub-matrix (0-based indices).
    pub fn minor(&self, rows: &[usize], cols: &[usize]) -> Result<TruncatedSeries> {
        self.check_indices(rows, cols)?;
        Ok(minors_of_rows(self, rows, cols)
            .remove(&full_mask(cols.len()))
            .expect("full subset present"))
    }

    pub fn minor_order(&self, rows: &[usize], cols: &[usize]) -> Result<Order> {
        Ok(self.minor(rows, cols)?.order())
    }

    /// Minimum order over all `r × r` minors, or `Infinite` when `r` exceeds
    /// the matrix size.
    pub fn determinantal_order_ideal(&self, r: usize) -> Order {
        let all_cols: Vec<usize> = (0..self.cols).collect();
        self.determinantal_order_on_columns(r, &all_cols)
    }

    /// As [`SeriesMatrix::determinantal_order_ideal`] restricted to a column list.
    pub fn determinantal_order_on_columns(&self, r: usize, cols: &[usize]) -> Order {
        if r == 0 {
            return Order::Exact(0);
        }
        if r > self.rows || r > cols.len() {
            return Order::Infinite;
        }
        let mut best = Order::Infinite;
        for row_set in subsets(0, self.rows - 1, r) {
            for (mask, det) in minors_of_rows(self, &row_set, cols) {
                if mask.count_ones() as usize == r {
                    best = best.min(det.order());
                }
            }
        }
        best
    }

    /// Inverse of a square matrix whose determinant is a unit.
    pub fn inverse(&self) -> Result<SeriesMatrix> {
        if self.rows != self.cols {
            return invalid("only square matrices are invertible");
        }
        let n = self.rows;
        let idx: Vec<usize> = (0..n).collect();
        let det = self.minor(&idx, &idx)?;
        let det_inv = det.inverse()?;
        let p = self.precision();
        let mut out = SeriesMatrix::zero(n, n, p);
        for i in 0..n {
            for j in 0..n {
                // adjugate entry (i, j) is the (j, i) cofactor
                let rows: Vec<usize> = idx.iter().copied().filter(|&r| r != j).collect();
                let cols: Vec<usize> = idx.iter().copied().filter(|&c| c != i).collect();
                let cof = if n == 1 {
                    TruncatedSeries::one(p)
                } else {
                    self.minor(&rows, &cols)?
                };
                let cof = if (i + j) % 2 == 1 { -&cof } else { cof };
                out.set(i, j, &cof * &det_inv);
            }
        }
        Ok(out)
    }
}

fn full_mask(len: usize) -> u64 {
    (1u64 << len) - 1
}

/// Determinants of the leading `t` rows of `rows` against every `t`-subset of
/// `cols` (keyed by a bitmask over positions in `cols`), built by expanding
/// along the last row.
fn minors_of_rows(
    m: &SeriesMatrix,
    rows: &[usize],
    cols: &[usize],
) -> HashMap<u64, TruncatedSeries> {
    assert!(cols.len() < 64, "too many columns for minor enumeration");
    let p = m.precision();
    let mut level: HashMap<u64, TruncatedSeries> = HashMap::new();
    level.insert(0, TruncatedSeries::one(p));
    for (t, &r) in rows.iter().enumerate() {
        let mut next: HashMap<u64, TruncatedSeries> = HashMap::new();
        for (&mask, det) in &level {
            for (pos, &c) in cols.iter().enumerate() {
                let bit = 1u64 << pos;
                if mask & bit != 0 {
                    continue;
                }
                let new_mask = mask | bit;
                // position of the new column inside the enlarged subset
                let rank = (new_mask & (bit - 1)).count_ones() as usize;
                let term = &(m.get(r, c) * det);
                let term = if (rank + t) % 2 == 1 { -term } else { term.clone() };
                next.entry(new_mask)
                    .and_modify(|acc| *acc = &*acc + &term)
                    .or_insert(term);
            }
        }
        level = next;
    }
    level
}

impl fmt::Display for SeriesMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .row_vecs()
            .iter()
            .map(|r| r.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(", "))
            .collect();
        write!(f, "{}", rows.join("; "))
    }
}

/// A `k × n` series matrix viewed as an arc (or jet) on `G(k,n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArcMatrix {
    shape: GrassmannShape,
    matrix: SeriesMatrix,
}

impl ArcMatrix {
    pub fn new(shape: GrassmannShape, matrix: SeriesMatrix) -> Result<Self> {
        if matrix.rows() != shape.k() || matrix.cols() != shape.n() {
            return Err(Error::ShapeMismatch(format!(
                "arc for {shape} must be {}x{}, got {}x{}",
                shape.k(),
                shape.n(),
                matrix.rows(),
                matrix.cols()
            )));
        }
        Ok(Self { shape, matrix })
    }

    /// Parses `"t^2+t^3, t^2, 0, 1; t^2, t, 1, 0"`.
    pub fn parse(shape: GrassmannShape, text: &str, precision: usize) -> Result<Self> {
        Self::new(shape, SeriesMatrix::parse(text, precision)?)
    }

    pub fn shape(&self) -> GrassmannShape {
        self.shape
    }

    pub fn matrix(&self) -> &SeriesMatrix {
        &self.matrix
    }

    pub fn precision(&self) -> usize {
        self.matrix.precision()
    }

    /// The left `k × (n-k)` block.
    pub fn left_block(&self) -> SeriesMatrix {
        let rows: Vec<usize> = (0..self.shape.k()).collect();
        let cols: Vec<usize> = (0..self.shape.cols()).collect();
        self.matrix.submatrix(&rows, &cols)
    }

    fn all_rows(&self) -> Vec<usize> {
        (0..self.shape.k()).collect()
    }

    /// Order of the maximal minor on the columns of `I`.
    pub fn plucker_order(&self, index: &MultiIndex) -> Result<Order> {
        if index.shape() != self.shape {
            return Err(Error::ShapeMismatch(format!(
                "{} vs {}",
                index.shape(),
                self.shape
            )));
        }
        let cols: Vec<usize> = index.entries().iter().map(|e| e - 1).collect();
        self.matrix.minor_order(&self.all_rows(), &cols)
    }

    /// Whether some maximal minor is a unit.
    pub fn is_arc(&self) -> bool {
        let rows = self.all_rows();
        subsets(0, self.shape.n() - 1, self.shape.k())
            .iter()
            .any(|cols| self.matrix.minor(&rows, cols).is_ok_and(|m| m.is_unit()))
    }

    /// Whether the last `k` columns form a unit minor.
    pub fn in_opposite_big_cell(&self) -> bool {
        let rows = self.all_rows();
        let cols: Vec<usize> = (self.shape.cols()..self.shape.n()).collect();
        self.matrix
            .minor(&rows, &cols)
            .is_ok_and(|m| m.is_unit())
    }

    /// Whether the right `k × k` block is exactly the antidiagonal `Δ'`.
    pub fn has_antidiagonal_right_block(&self) -> bool {
        let (k, cols) = (self.shape.k(), self.shape.cols());
        (0..k).all(|r| {
            (0..k).all(|c| {
                let e = self.matrix.get(r, cols + c);
                if r + c == k - 1 {
                    *e == TruncatedSeries::one(e.precision())
                } else {
                    e.is_zero()
                }
            })
        })
    }

    /// Row-reduces an arc in the opposite big cell so its right block is `Δ'`.
    pub fn normalize_big_cell(&self) -> Result<ArcMatrix> {
        if !self.in_opposite_big_cell() {
            return invalid("arc is not in the opposite big cell");
        }
        let (k, cols) = (self.shape.k(), self.shape.cols());
        let p = self.precision();
        let rows = self.all_rows();
        let right: Vec<usize> = (cols..self.shape.n()).collect();
        let r_inv = self.matrix.submatrix(&rows, &right).inverse()?;
        let mut delta = SeriesMatrix::zero(k, k, p);
        for r in 0..k {
            delta.set(r, k - 1 - r, TruncatedSeries::one(p));
        }
        let left_mul = delta.mul(&r_inv)?;
        ArcMatrix::new(self.shape, left_mul.mul(&self.matrix)?)
    }

    /// Right-multiplies by random constant upper-triangular matrices with
    /// integer entries until the result lies in the opposite big cell.
    pub fn borel_translate(&self, seed: u64) -> Result<ArcMatrix> {
        if !self.is_arc() {
            return Err(Error::NotAnArc);
        }
        let n = self.shape.n();
        let p = self.precision();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..64 {
            let mut b = SeriesMatrix::zero(n, n, p);
            for i in 0..n {
                for j in i..n {
                    let mut v: i64 = rng.gen_range(-1000..=1000);
                    if i == j && v == 0 {
                        v = 1;
                    }
                    b.set(i, j, TruncatedSeries::from_ints(p, &[v]));
                }
            }
            let cand = ArcMatrix::new(self.shape, self.matrix.mul(&b)?)?;
            if cand.in_opposite_big_cell() {
                return Ok(cand);
            }
        }
        Err(Error::Internal(
            "random Borel translates never reached the opposite big cell".into(),
        ))
    }

    /// `α_{a,b}` as an [`Order`]: the minimum order of the `(k+1-a)`-minors on
    /// the first `k-a+b` columns.
    pub fn essential_order(&self, a: usize, b: usize) -> Order {
        let k = self.shape.k();
        let size = k + 1 - a;
        let cols: Vec<usize> = (0..k - a + b).collect();
        self.matrix.determinantal_order_on_columns(size, &cols)
    }

    /// The essential contact profile of the arc.
    pub fn essential_profile(&self) -> Result<EssentialProfile> {
        if !self.is_arc() {
            return Err(Error::NotAnArc);
        }
        let shape = self.shape;
        let mut rows = vec![vec![ExtNat::ZERO; shape.cols()]; shape.k()];
        for (a, b) in shape.cell_iter() {
            let ord = self.essential_order(a, b);
            rows[a - 1][b - 1] = ord.exact().ok_or_else(|| {
                let i = a + shape.cols() - b;
                Error::PrecisionExceeded(format!(
                    "d_{{{i},{b}}} (profile entry ({a},{b})) is {ord} at precision {}",
                    self.precision()
                ))
            })?;
        }
        EssentialProfile::new_unchecked(shape, &rows)
    }

    /// The invariant factor profile `β` of the arc.
    pub fn invariant_factor_profile(&self) -> Result<PlanePartition> {
        let alpha = self.essential_profile()?;
        PlanePartition::from_essential(&alpha)
            .map_err(|e| Error::Internal(format!("arc profile is not a plane partition: {e}")))
    }

    /// Whether the arc lies in the image of the network parametrization of `β`:
    /// it must be in the opposite big cell, have profile `β`, and each final
    /// minor of the left block must realize the matching essential order.
    pub fn is_generic_form(&self, beta: &PlanePartition) -> Result<bool> {
        if beta.shape() != self.shape {
            return Err(Error::ShapeMismatch(format!(
                "{} vs {}",
                beta.shape(),
                self.shape
            )));
        }
        if !self.in_opposite_big_cell() {
            return Ok(false);
        }
        let norm = if self.has_antidiagonal_right_block() {
            self.clone()
        } else {
            self.normalize_big_cell()?
        };
        if &norm.invariant_factor_profile()? != beta {
            return Ok(false);
        }
        let alpha = beta.essential_profile();
        let x = norm.left_block();
        let (k, cols) = (self.shape.k(), self.shape.cols());
        for (i, j) in self.shape.cell_iter() {
            let r = (k - i).min(cols - j);
            let rows: Vec<usize> = (i - 1..i + r).collect();
            let cs: Vec<usize> = (j - 1..j + r).collect();
            let matches = match (x.minor_order(&rows, &cs)?, alpha.get(i, j)) {
                (Order::Exact(v), ExtNat::Fin(a)) => v == a,
                _ => false,
            };
            if !matches {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

impl fmt::Display for ArcMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.matrix.fmt(f)
    }
}
