//! Log canonical thresholds and Arnold multiplicities of pairs `(G(k,n), Ω_λ)`.

use num::integer::lcm;
use num::{BigInt, BigRational, One, Signed, Zero};
use serde::Serialize;

use crate::error::{invalid, Error, Result};
use crate::partitions::{GrassmannShape, Partition};
use crate::planepartitions::{enumerate_plane_partitions, ExtNat, PlanePartition};
use crate::simplex::{LpSolution, RationalLp, Relation};

fn q(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

fn var(shape: GrassmannShape, i: usize, j: usize) -> usize {
    (i - 1) * shape.cols() + (j - 1)
}

/// Coefficient vector of the diagonal sum starting at `(a, b)`.
fn diagonal(shape: GrassmannShape, a: usize, b: usize) -> Vec<BigRational> {
    let mut c = vec![BigRational::zero(); shape.cells()];
    let (mut i, mut j) = (a, b);
    while i <= shape.k() && j <= shape.cols() {
        c[var(shape, i, j)] = q(1);
        i += 1;
        j += 1;
    }
    c
}

/// The program maximizing `ord(λ)` over normalized plane partitions on which
/// all corner diagonal sums agree.
#[derive(Clone, Debug)]
pub struct SvPolytopeLp {
    lambda: Partition,
    lp: RationalLp,
    equalities: usize,
}

impl SvPolytopeLp {
    pub fn build(lambda: &Partition) -> Result<Self> {
        if lambda.is_empty() {
            return invalid("the program needs a non-empty partition");
        }
        let shape = lambda.shape();
        let cells = shape.cells();
        let mut lp = RationalLp::new(cells);
        for (i, j) in shape.cell_iter() {
            for (i2, j2) in [(i + 1, j), (i, j + 1)] {
                if i2 <= shape.k() && j2 <= shape.cols() {
                    let mut c = vec![BigRational::zero(); cells];
                    c[var(shape, i, j)] = q(1);
                    c[var(shape, i2, j2)] = q(-1);
                    lp.add_constraint(c, Relation::Ge, q(0))?;
                }
            }
        }
        lp.add_constraint(vec![q(1); cells], Relation::Eq, q(1))?;
        let corners = lambda.schubert_conditions();
        let first = diagonal(shape, corners[0].0, corners[0].1);
        for &(a, b) in &corners[1..] {
            let other = diagonal(shape, a, b);
            let c = first.iter().zip(&other).map(|(x, y)| x - y).collect();
            lp.add_constraint(c, Relation::Eq, q(0))?;
        }
        lp.set_objective(first)?;
        Ok(Self {
            lambda: lambda.clone(),
            lp,
            equalities: corners.len() - 1,
        })
    }

    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }

    pub fn lp(&self) -> &RationalLp {
        &self.lp
    }

    /// Number of equalities equating corner diagonal sums.
    pub fn num_corner_equalities(&self) -> usize {
        self.equalities
    }
}

/// Optimum of the program together with its vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ArnoldResult {
    #[serde(serialize_with = "ser_rational")]
    pub arnold: BigRational,
    #[serde(serialize_with = "ser_rational")]
    pub lct: BigRational,
    /// Optimal vertex as a `k × (n-k)` matrix of rationals.
    #[serde(serialize_with = "ser_rational_rows")]
    pub vertex: Vec<Vec<BigRational>>,
    /// The vertex scaled by the lcm of its denominators.
    pub witness: PlanePartition,
}

/// `p/q` form, also for integers.
pub fn rational_string(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

fn ser_rational<S: serde::Serializer>(r: &BigRational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&rational_string(r))
}

fn ser_rational_rows<S: serde::Serializer>(
    rows: &[Vec<BigRational>],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    let text: Vec<Vec<String>> = rows
        .iter()
        .map(|r| r.iter().map(rational_string).collect())
        .collect();
    text.serialize(s)
}

/// Scales a non-negative rational vector to the smallest integer multiple.
fn scale_to_integers(x: &[BigRational]) -> Vec<BigInt> {
    let den = x
        .iter()
        .fold(BigInt::one(), |acc, v| lcm(acc, v.denom().clone()));
    x.iter()
        .map(|v| (v * BigRational::from_integer(den.clone())).to_integer())
        .collect()
}

/// The Arnold multiplicity of `(G(k,n), Ω_λ)`, its reciprocal and the optimal vertex.
pub fn arnold_multiplicity(lambda: &Partition) -> Result<ArnoldResult> {
    let program = SvPolytopeLp::build(lambda)?;
    let (value, vertex) = match program.lp.solve_max() {
        LpSolution::Optimal { value, vertex } => (value, vertex),
        other => {
            return Err(Error::Internal(format!(
                "program for {lambda} did not reach an optimum: {other:?}"
            )))
        }
    };
    if !value.is_positive() {
        return Err(Error::Internal(format!(
            "non-positive optimum for {lambda}"
        )));
    }
    let shape = lambda.shape();
    let rows: Vec<Vec<BigRational>> = vertex.chunks(shape.cols()).map(|c| c.to_vec()).collect();
    let scaled: Vec<Vec<ExtNat>> = scale_to_integers(&vertex)
        .chunks(shape.cols())
        .map(|c| {
            c.iter()
                .map(|v| {
                    u64::try_from(v)
                        .map(ExtNat::Fin)
                        .map_err(|_| Error::Internal("vertex entry out of range".into()))
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;
    let witness = PlanePartition::new(shape, &scaled)
        .map_err(|e| Error::Internal(format!("optimal vertex is not a plane partition: {e}")))?;
    Ok(ArnoldResult {
        lct: value.recip(),
        arnold: value,
        vertex: rows,
        witness,
    })
}

/// `lct(G(k,n), Ω_λ)`.
pub fn lct(lambda: &Partition) -> Result<BigRational> {
    Ok(arnold_multiplicity(lambda)?.lct)
}

/// Closed form for the rectangle `(b^a)`: the minimum over `s = 0..r` of
/// `(a+s)(b+s)/(s+1)`, with `r = min(k-a, n-k-b)`.
pub fn lct_rectangular(shape: GrassmannShape, a: usize, b: usize) -> Result<BigRational> {
    if a == 0 || b == 0 || a > shape.k() || b > shape.cols() {
        return invalid(format!("rectangle ({b}^{a}) does not fit in {shape}"));
    }
    let r = (shape.k() - a).min(shape.cols() - b);
    Ok((0..=r)
        .map(|s| {
            BigRational::new(
                BigInt::from((a + s) * (b + s)),
                BigInt::from(s + 1),
            )
        })
        .min()
        .expect("at least one term"))
}

/// `lct = |λ|` exactly when `|λ|` is at most the rim size.
pub fn lct_equals_codim(lambda: &Partition) -> Result<bool> {
    Ok(lambda.size() <= lambda.rim_size()?)
}

/// Maximum of `ord_β(Ω_λ) / |β|` over non-empty plane partitions of height at
/// most `h`, with a maximizer.
pub fn brute_force_arnold(lambda: &Partition, h: u64) -> Result<(BigRational, PlanePartition)> {
    let all = enumerate_plane_partitions(lambda.shape(), h);
    brute_force_over(lambda, &all)
}

/// As [`brute_force_arnold`] over a precomputed list of plane partitions.
pub fn brute_force_over(
    lambda: &Partition,
    candidates: &[PlanePartition],
) -> Result<(BigRational, PlanePartition)> {
    if lambda.is_empty() {
        return invalid("the ratio needs a non-empty partition");
    }
    let mut best: Option<(u64, u64, &PlanePartition)> = None;
    for beta in candidates {
        let vol = match beta.volume() {
            ExtNat::Fin(0) => continue,
            ExtNat::Fin(v) => v,
            ExtNat::Inf => return invalid("candidates must be finite"),
        };
        let ord = beta
            .ord_schubert(lambda)?
            .finite()
            .expect("finite plane partition");
        let better = match best {
            None => true,
            Some((o, v, _)) => ord * v > o * vol,
        };
        if better {
            best = Some((ord, vol, beta));
        }
    }
    let (o, v, beta) = best.ok_or_else(|| Error::InvalidInput("no candidates".into()))?;
    Ok((
        BigRational::new(BigInt::from(o), BigInt::from(v)),
        beta.clone(),
    ))
}

/// The points `μ / |μ|` for non-empty partitions `μ`, as row-major vectors.
pub fn sv_extremal_points(shape: GrassmannShape) -> Vec<Vec<BigRational>> {
    shape
        .partitions()
        .into_iter()
        .filter(|m| !m.is_empty())
        .map(|m| {
            let size = BigRational::from_integer(BigInt::from(m.size()));
            shape
                .cell_iter()
                .map(|(i, j)| {
                    if m.contains_cell(i, j) {
                        size.recip()
                    } else {
                        BigRational::zero()
                    }
                })
                .collect()
        })
        .collect()
}

/// Arnold multiplicity for every non-empty partition of the shape.
pub fn lct_table(shape: GrassmannShape) -> Result<Vec<(Partition, ArnoldResult)>> {
    shape
        .partitions()
        .into_iter()
        .filter(|l| !l.is_empty())
        .map(|l| arnold_multiplicity(&l).map(|r| (l, r)))
        .collect()
}
