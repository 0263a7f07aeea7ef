//! Acceptance suite. Runs every criterion, prints one line per criterion and
//! exits non-zero if any fails.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use grassarc::lct::{arnold_multiplicity, brute_force_arnold, lct, lct_rectangular};
use grassarc::nash::{
    codim_chain, compare, is_plateau_cover, nash_valuations, plucker_leq, sufficient_by_plateau,
    Relation, Witness,
};
use grassarc::networks::{
    generic_arc, plucker_ord, tropical_minor_order, EssentialWeighting, PlanarNetwork, UnitSource,
};
use grassarc::{
    ArcMatrix, ExtNat, GrassmannShape, MultiIndex, Order, Partition, PlanePartition, Rational,
};
use num::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = std::result::Result<(), String>;
type Criterion = (&'static str, fn() -> Check);

fn g(k: usize, n: usize) -> GrassmannShape {
    GrassmannShape::new(k, n).unwrap()
}

fn int(v: usize) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// Every shape `G(k,n)` with `1 <= k < n <= max_n`.
fn shapes(max_n: usize) -> Vec<GrassmannShape> {
    (2..=max_n)
        .flat_map(|n| (1..n).map(move |k| g(k, n)))
        .collect()
}

/// A random finite plane partition of height at most `h`: random entries,
/// clipped by the running minimum of the upper and left neighbours.
fn random_pp(rng: &mut ChaCha8Rng, shape: GrassmannShape, h: u64) -> PlanePartition {
    let cols = shape.cols();
    let mut rows = vec![vec![0u64; cols]; shape.k()];
    for i in 0..shape.k() {
        for j in 0..cols {
            let mut v = rng.gen_range(0..=h);
            if i > 0 {
                v = v.min(rows[i - 1][j]);
            }
            if j > 0 {
                v = v.min(rows[i][j - 1]);
            }
            rows[i][j] = v;
        }
    }
    PlanePartition::from_finite(shape, &rows).unwrap()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration) -> Check {
    let took = start.elapsed();
    ensure(took < limit, || format!("took {took:?}, limit {limit:?}"))
}

fn c1_lct_g7_16() -> Check {
    let start = Instant::now();
    let s = g(7, 16);
    let closed = lct_rectangular(s, 3, 3).map_err(|e| e.to_string())?;
    let lam = Partition::new(s, &[3, 3, 3]).unwrap();
    let lp = lct(&lam).map_err(|e| e.to_string())?;
    ensure(closed == int(8), || format!("closed form gave {closed}"))?;
    ensure(lp == int(8), || format!("program gave {lp}"))?;
    within(start, Duration::from_secs(5))
}

fn c2_rectangles() -> Check {
    let start = Instant::now();
    for s in shapes(10) {
        for a in 1..=s.k() {
            for b in 1..=s.cols() {
                let lam = Partition::rectangle(s, a, b).unwrap();
                let lp = lct(&lam).map_err(|e| e.to_string())?;
                let closed = lct_rectangular(s, a, b).map_err(|e| e.to_string())?;
                ensure(lp == closed, || format!("({b}^{a}) in {s}: {lp} vs {closed}"))?;
            }
        }
    }
    within(start, Duration::from_secs(60))
}

fn c3_brute_force() -> Check {
    let start = Instant::now();
    for s in [g(2, 4), g(2, 5), g(3, 6)] {
        for lam in s.partitions().into_iter().filter(|l| !l.is_empty()) {
            let lp = arnold_multiplicity(&lam).map_err(|e| e.to_string())?.arnold;
            let (brute, _) = brute_force_arnold(&lam, 6).map_err(|e| e.to_string())?;
            ensure(lp == brute, || format!("{lam} in {s}: {lp} vs {brute}"))?;
        }
    }
    within(start, Duration::from_secs(600))
}

fn c4_multi_floor_vertex() -> Check {
    let s = g(5, 10);
    let lam = Partition::new(s, &[5, 4, 4, 4, 1]).unwrap();
    let r = arnold_multiplicity(&lam).map_err(|e| e.to_string())?;
    let w = &r.witness;
    let distinct: BTreeSet<Partition> = w.floors().into_iter().map(|(p, _)| p).collect();
    let ord = w.ord_schubert(&lam).unwrap().finite().unwrap();
    let vol = w.volume().finite().unwrap();
    ensure(
        Rational::new(BigInt::from(ord), BigInt::from(vol)) == r.arnold,
        || "witness does not realize the optimum".into(),
    )?;
    ensure(distinct.len() >= 2, || format!("witness {w} has one floor"))
}

fn c5_rim_criterion() -> Check {
    for s in shapes(8) {
        for lam in s.partitions() {
            if lam.is_empty() || lam.num_parts() > s.k() - 1 || lam.part(1) + 1 > s.cols() {
                continue;
            }
            let l = lct(&lam).map_err(|e| e.to_string())?;
            let rim = lam.rim_size().map_err(|e| e.to_string())?;
            let lhs = l == int(lam.size());
            let rhs = lam.size() <= rim;
            ensure(lhs == rhs, || {
                format!("{lam} in {s}: lct {l}, size {}, rim {rim}", lam.size())
            })?;
        }
    }
    Ok(())
}

fn c6_invariant_factor_examples() -> Check {
    let s = g(2, 4);
    let cases = [
        ("t^2, 0, 0, 1; 0, t, 1, 0", "2 2; 2 1"),
        ("t^2+t^3, t^2, 0, 1; t^2, t, 1, 0", "2 2; 2 1"),
        ("0, t^2, 0, 1; t^2, 0, 1, 0", "2 2; 2 2"),
    ];
    for (arc, expected) in cases {
        let a = ArcMatrix::parse(s, arc, 8).map_err(|e| e.to_string())?;
        let got = a.invariant_factor_profile().map_err(|e| e.to_string())?;
        let want = PlanePartition::parse(s, expected).unwrap();
        ensure(got == want, || format!("{arc}: {got} vs {want}"))?;
    }
    Ok(())
}

fn c7_profile_round_trip() -> Check {
    let all = shapes(7);
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for trial in 0..500u64 {
        let s = all[trial as usize % all.len()];
        let beta = random_pp(&mut rng, s, 4);
        let prec = beta.volume().finite().unwrap() as usize + 2;
        let arc = generic_arc(&beta, prec, UnitSource::Seeded(trial)).map_err(|e| e.to_string())?;
        let got = arc.invariant_factor_profile().map_err(|e| e.to_string())?;
        ensure(got == beta, || format!("trial {trial} in {s}: {beta} gave {got}"))?;
    }
    Ok(())
}

/// All pairs of equal-size increasing index sets.
fn square_minors(rows: usize, cols: usize) -> Vec<(Vec<usize>, Vec<usize>)> {
    let subsets = |m: usize| -> Vec<Vec<usize>> {
        (0u32..1 << m)
            .map(|mask| (1..=m).filter(|&i| mask >> (i - 1) & 1 == 1).collect())
            .collect()
    };
    let rs = subsets(rows);
    let cs = subsets(cols);
    let mut out = Vec::new();
    for r in &rs {
        for c in cs.iter().filter(|c| c.len() == r.len() && !c.is_empty()) {
            out.push((r.clone(), c.clone()));
        }
    }
    out
}

fn zero_based(v: &[usize]) -> Vec<usize> {
    v.iter().map(|x| x - 1).collect()
}

fn c8_lindstrom() -> Check {
    for s in shapes(7) {
        let net = PlanarNetwork::gamma0(s);
        let minors = square_minors(s.k(), s.cols());
        let mut rng = ChaCha8Rng::seed_from_u64(8 + s.n() as u64 * 16 + s.k() as u64);
        for trial in 0..200u64 {
            let beta = random_pp(&mut rng, s, 3);
            let w = EssentialWeighting::for_plane_partition(&beta, 6, UnitSource::Seeded(trial))
                .map_err(|e| e.to_string())?;
            let m = net.weight_matrix(&w).map_err(|e| e.to_string())?;
            for (r, c) in &minors {
                let det = m.minor(&zero_based(r), &zero_based(c)).map_err(|e| e.to_string())?;
                let paths = net.lindstrom_minor(&w, r, c).map_err(|e| e.to_string())?;
                ensure(det == paths, || format!("{s} trial {trial} [{r:?}|{c:?}]"))?;
            }
        }
    }
    Ok(())
}

fn c9_tropical() -> Check {
    for s in shapes(7) {
        let net = PlanarNetwork::gamma0(s);
        let minors = square_minors(s.k(), s.cols());
        let mut rng = ChaCha8Rng::seed_from_u64(9 + s.n() as u64 * 16 + s.k() as u64);
        for trial in 0..200u64 {
            let beta = random_pp(&mut rng, s, 3);
            let prec = beta.volume().finite().unwrap() as usize + 2;
            let w = EssentialWeighting::for_plane_partition(&beta, prec, UnitSource::Seeded(trial))
                .map_err(|e| e.to_string())?;
            let m = net.weight_matrix(&w).map_err(|e| e.to_string())?;
            let (r, c) = &minors[rng.gen_range(0..minors.len())];
            let trop = tropical_minor_order(&beta, r, c).map_err(|e| e.to_string())?;
            let sym = m.minor_order(&zero_based(r), &zero_based(c)).map_err(|e| e.to_string())?;
            let agree = match (trop, sym) {
                (ExtNat::Fin(t), Order::Exact(o)) => t == o,
                (ExtNat::Inf, Order::Infinite | Order::AtLeast(_)) => {
                    m.minor(&zero_based(r), &zero_based(c)).unwrap().is_zero()
                }
                _ => false,
            };
            ensure(agree, || format!("{s} {beta} [{r:?}|{c:?}]: {trop} vs {sym}"))?;
        }
    }
    Ok(())
}

fn c10_g24_table() -> Check {
    let s = g(2, 4);
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    for _ in 0..100 {
        let b = random_pp(&mut rng, s, 6);
        let e = |i, j| b.get(i, j).finite().unwrap();
        let table: [(&[usize], u64); 6] = [
            (&[1, 2], e(1, 1) + e(2, 2)),
            (&[1, 3], e(1, 1).min(e(1, 2) + e(2, 1) - e(2, 2))),
            (&[1, 4], e(2, 1)),
            (&[2, 3], e(1, 2)),
            (&[2, 4], e(2, 2)),
            (&[3, 4], 0),
        ];
        for (idx, want) in table {
            let i = MultiIndex::new(s, idx).unwrap();
            let got = plucker_ord(&b, &i).map_err(|e| e.to_string())?;
            ensure(got == ExtNat::Fin(want), || format!("{b} {i}: {got} vs {want}"))?;
        }
    }
    Ok(())
}

/// Up to `steps` random plateau covers starting at `beta`.
fn random_plateau_walk(rng: &mut ChaCha8Rng, beta: &PlanePartition, steps: usize) -> PlanePartition {
    let mut cur = beta.clone();
    for _ in 0..steps {
        let moves: Vec<PlanePartition> = cur
            .plateaux()
            .into_iter()
            .filter(|p| p.fall > ExtNat::ZERO)
            .filter_map(|p| cur.with_entry(p.a, p.b, cur.get(p.a, p.b) + ExtNat::Fin(1)).ok())
            .filter(|next| is_plateau_cover(&cur, next))
            .collect();
        if moves.is_empty() {
            break;
        }
        cur = moves[rng.gen_range(0..moves.len())].clone();
    }
    cur
}

fn c11_nash_consistency() -> Check {
    let mut positives = 0;
    for s in shapes(6) {
        let mut rng = ChaCha8Rng::seed_from_u64(11 + s.n() as u64 * 16 + s.k() as u64);
        for trial in 0..300 {
            let beta = random_pp(&mut rng, s, 3);
            let beta2 = if trial % 2 == 0 {
                let steps = rng.gen_range(1..=4);
                random_plateau_walk(&mut rng, &beta, steps)
            } else {
                random_pp(&mut rng, s, 3)
            };
            if sufficient_by_plateau(&beta, &beta2).map_err(|e| e.to_string())? {
                positives += 1;
                ensure(plucker_leq(&beta, &beta2).unwrap(), || {
                    format!("{beta} -> {beta2}: Plücker order violated")
                })?;
                ensure(beta.volume() < beta2.volume(), || {
                    format!("{beta} -> {beta2}: volume does not increase")
                })?;
            }
        }
    }
    ensure(positives > 0, || "no plateau containments were sampled".into())?;
    let s = g(3, 6);
    let b = PlanePartition::parse(s, "3 2 1; 2 1 1; 1 1 0").unwrap();
    let b2 = PlanePartition::parse(s, "2 2 1; 2 2 1; 1 1 0").unwrap();
    ensure(plucker_leq(&b, &b2).unwrap(), || "pair is not Plücker-ordered".into())?;
    let v = compare(&b, &b2).map_err(|e| e.to_string())?;
    ensure(
        v.relation == Relation::NotContains
            && matches!(v.witness, Witness::VolumeObstruction { .. }),
        || format!("pair verdict {v:?}"),
    )
}

fn c12_codim_chain() -> Check {
    let all = shapes(7);
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for trial in 0..100 {
        let s = all[trial % all.len()];
        let beta = random_pp(&mut rng, s, 3);
        let h = beta.height().finite().unwrap() as usize;
        let chain = codim_chain(&beta).map_err(|e| e.to_string())?;
        let steps = chain.len() - 1;
        ensure(steps == h * s.cells(), || format!("{beta}: {steps} steps"))?;
        let vol = beta.volume().finite().unwrap() as usize;
        ensure(chain[vol] == beta, || format!("{beta}: not at index {vol}"))?;
        for (x, w) in chain.windows(2).enumerate() {
            ensure(is_plateau_cover(&w[0], &w[1]), || {
                format!("{beta}: step {x} {} -> {} is not a plateau cover", w[0], w[1])
            })?;
        }
    }
    Ok(())
}

fn c13_nash_valuations() -> Check {
    let s = g(2, 4);
    let vals = nash_valuations(&Partition::new(s, &[1]).unwrap()).map_err(|e| e.to_string())?;
    let want = PlanePartition::parse(s, "inf 1; 1 1").unwrap();
    ensure(vals == vec![want], || format!("(1) in G(2,4) gave {vals:?}"))?;
    for s in shapes(7) {
        for lam in s.partitions().into_iter().filter(|l| !l.is_empty()) {
            let vals = nash_valuations(&lam).map_err(|e| e.to_string())?;
            let comps = lam.singular_components();
            ensure(vals.len() == comps.len(), || {
                format!("{lam} in {s}: {} valuations, {} components", vals.len(), comps.len())
            })?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    // the libtest flags passed by `cargo test` are ignored
    let criteria: [Criterion; 13] = [
        ("lct of (3,3,3) in G(7,16) is 8", c1_lct_g7_16),
        ("rectangular closed form, n <= 10", c2_rectangles),
        ("program vs brute force, height 6", c3_brute_force),
        ("multi-floor optimal vertex in G(5,10)", c4_multi_floor_vertex),
        ("rim size criterion, n <= 8", c5_rim_criterion),
        ("invariant factor examples", c6_invariant_factor_examples),
        ("profile round trip of generic arcs", c7_profile_round_trip),
        ("Lindstrom equivalence", c8_lindstrom),
        ("tropical soundness", c9_tropical),
        ("G(2,4) Plucker order table", c10_g24_table),
        ("Nash consistency", c11_nash_consistency),
        ("codimension chains", c12_codim_chain),
        ("Nash valuations", c13_nash_valuations),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        let took = start.elapsed();
        match outcome {
            Ok(()) => println!("criterion {:>2} PASS  {name} ({took:.2?})", i + 1),
            Err(e) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {e}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
