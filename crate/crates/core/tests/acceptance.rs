//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each,
//! and exits nonzero if any fails.

use std::f64::consts::PI;
use std::time::Instant;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use qball::algebra::{Strategy, DEFAULT_STEP_BUDGET};
use qball::dynsys::{apply_map, boundedness_probe, Boundedness};
use qball::verify::{
    diagonal_decomposition_check, joint_spectrum, relation_residuals, series_orbit_table,
    symbolic_numeric_bridge, weight_diagnostics, DEFAULT_BRIDGE_SEED, DEFAULT_MARGIN,
};
use qball::{algebra, Letter, MapTag, Point3, Rep, Series, SeriesTag, Word, WordPoly};

const QS: [f64; 3] = [0.3, 0.5, 0.8];
const MARGIN: usize = DEFAULT_MARGIN;

fn phase_grid() -> Vec<f64> {
    let mut g: Vec<f64> = (0..5).map(|k| 2.0 * PI * k as f64 / 5.0).collect();
    g.push(1.0);
    g
}

/// Every phase vector over the grid, for every series and q.
fn jobs() -> Vec<Series> {
    let grid = phase_grid();
    let mut out = Vec::new();
    for tag in SeriesTag::ALL {
        let phase_sets: Vec<Vec<f64>> = match tag.phase_arity() {
            0 => vec![vec![]],
            1 => grid.iter().map(|p| vec![*p]).collect(),
            _ => grid.iter().flat_map(|a| grid.iter().map(move |b| vec![*a, *b])).collect(),
        };
        for q in QS {
            for phases in &phase_sets {
                out.push(Series::new(tag, phases.clone(), q).unwrap());
            }
        }
    }
    out
}

fn build(spec: Series) -> Rep {
    let n = spec.series.default_cutoff(MARGIN);
    Rep::build(spec, n).unwrap()
}

struct Outcome {
    pass: bool,
    detail: String,
}

fn relation_suite() -> Outcome {
    let jobs = jobs();
    let worst: Vec<(f64, String)> = jobs
        .par_iter()
        .map(|spec| {
            let rep = build(spec.clone());
            relation_residuals(&rep, MARGIN, 1e-10)
                .unwrap()
                .into_iter()
                .map(|r| (r.residual, format!("{} q={} phases={:?} relation {}", spec.series, spec.q, spec.phases, r.id)))
                .fold((0.0, String::new()), |a, b| if b.0 > a.0 { b } else { a })
        })
        .collect();
    let (max, at) = worst.into_iter().fold((0.0, String::new()), |a, b| if b.0 > a.0 { b } else { a });
    Outcome { pass: max < 1e-10, detail: format!("{} runs, max residual {max:.2e} ({at})", jobs.len()) }
}

fn symbolic_consistency() -> Outcome {
    let alg = algebra();
    let relations_zero = alg.relations().iter().filter(|r| alg.relation_defect(r).is_zero()).count();
    let cross_zero = alg.cross_identities().iter().filter(|r| alg.relation_defect(r).is_zero()).count();
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let words: Vec<Word> = (0..1000)
        .map(|_| {
            let len = rng.gen_range(0..=6);
            Word::from_letters((0..len).map(|_| Letter::ALL[rng.gen_range(0..8)]))
        })
        .collect();
    let agree = words
        .par_iter()
        .filter(|w| {
            let run = |s| alg.reduce_with(WordPoly::word((*w).clone()), s, DEFAULT_STEP_BUDGET).unwrap().0;
            run(Strategy::Leftmost) == run(Strategy::Rightmost)
        })
        .count();
    Outcome {
        pass: relations_zero == 16 && cross_zero == 3 && agree == 1000,
        detail: format!("relations {relations_zero}/16, cross identities {cross_zero}/3, confluent words {agree}/1000"),
    }
}

fn spectrum_orbit() -> Outcome {
    let mut max_error = 0.0f64;
    let mut failures = Vec::new();
    for (tag, orbit) in series_orbit_table() {
        for q in QS {
            let rep = build(Series::new(tag, vec![1.0; tag.phase_arity()], q).unwrap());
            let s = joint_spectrum(&rep).unwrap();
            max_error = max_error.max(s.max_error);
            if !s.pass || s.orbit != orbit {
                failures.push(format!("{tag} q={q}"));
            }
            if tag == SeriesTag::RhoFull {
                let interior = rep.lattice().interior(MARGIN).unwrap();
                let wrong = interior
                    .iter()
                    .filter(|&&i| {
                        let c = rep.lattice().coords(i);
                        s.exponents[i] != Some([c[1] as i32, c[2] as i32, c[3] as i32])
                    })
                    .count();
                if wrong > 0 || interior.is_empty() {
                    failures.push(format!("rho-full labels q={q}: {wrong} wrong"));
                }
            }
        }
    }
    Outcome {
        pass: failures.is_empty() && max_error < 1e-10,
        detail: format!("7 series x 3 q, max matching error {max_error:.2e}, failures {failures:?}"),
    }
}

fn decomposition_suite() -> Outcome {
    let specs: Vec<Series> = jobs()
        .into_iter()
        .filter(|s| !matches!(s.series, SeriesTag::OneDim | SeriesTag::Pi))
        .collect();
    let results: Vec<(f64, f64, f64, Option<String>)> = specs
        .par_iter()
        .map(|spec| {
            let d = diagonal_decomposition_check(&build(spec.clone()), MARGIN).unwrap();
            let vanish = d.vanishing.as_ref().map_or(0.0, |r| r.residual);
            let block = d.block_identity.as_ref().map_or(0.0, |r| r.residual);
            let comm = d.commutation.iter().fold(0.0f64, |a, r| a.max(r.residual));
            let bad = (!d.pass).then(|| format!("{} q={} {:?}", spec.series, spec.q, spec.phases));
            (vanish, block, comm, bad)
        })
        .collect();
    let vanish = results.iter().fold(0.0f64, |a, r| a.max(r.0));
    let block = results.iter().fold(0.0f64, |a, r| a.max(r.1));
    let comm = results.iter().fold(0.0f64, |a, r| a.max(r.2));
    let bad: Vec<_> = results.into_iter().filter_map(|r| r.3).collect();
    Outcome {
        pass: vanish < 1e-14 && block < 1e-10 && comm < 1e-10 && bad.is_empty(),
        detail: format!(
            "{} runs, z11_0 = 0 residual {vanish:.2e}, block identity {block:.2e}, q-commutation {comm:.2e}, failing {bad:?}",
            specs.len()
        ),
    }
}

fn simple_spectrum() -> Outcome {
    let mut failures = Vec::new();
    let mut gaps = Vec::new();
    let q = 0.5;
    for tag in SeriesTag::ALL {
        let rep = build(Series::new(tag, vec![1.0; tag.phase_arity()], q).unwrap());
        let w = weight_diagnostics(&rep);
        if !w.pass || w.min_gap.is_some_and(|g| g <= 0.0) {
            failures.push(format!("{tag}"));
        }
        if tag.rank() == 1 {
            let n = rep.lattice().cutoff as i32;
            let bound = q.powi(2 * (n - 1)) * (1.0 - q * q);
            let gap = w.min_gap.unwrap();
            gaps.push(format!("{tag} {gap:.3e} >= {bound:.3e}"));
            if gap < bound {
                failures.push(format!("{tag} gap below bound"));
            }
        }
    }
    Outcome { pass: failures.is_empty(), detail: format!("q=0.5, rank-1 gaps [{}], failures {failures:?}", gaps.join(", ")) }
}

fn bridge() -> Outcome {
    let specs: Vec<Series> = SeriesTag::ALL
        .into_iter()
        .flat_map(|tag| QS.map(|q| Series::new(tag, vec![1.0; tag.phase_arity()], q).unwrap()))
        .collect();
    let errs: Vec<(f64, bool)> = specs
        .par_iter()
        .map(|spec| {
            let b = symbolic_numeric_bridge(&build(spec.clone()), 100, DEFAULT_BRIDGE_SEED);
            (b.max_error, b.pass)
        })
        .collect();
    let max = errs.iter().fold(0.0f64, |a, e| a.max(e.0));
    Outcome {
        pass: errs.iter().all(|e| e.1) && max < 1e-10,
        detail: format!("{} series/q pairs x 100 words, max relative error {max:.2e}", specs.len()),
    }
}

fn dynamical_system() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let (mut comm, mut inv) = (0.0f64, 0.0f64);
    for _ in 0..1000 {
        let p = Point3::new(rng.gen_range(0.0..1.0), rng.gen_range(0.0..1.0), rng.gen_range(0.0..1.0));
        let q = rng.gen_range(0.2..0.9);
        for a in MapTag::ALL {
            inv = inv.max(apply_map(a, -1, apply_map(a, 1, p, q), q).distance(&p));
            inv = inv.max(apply_map(a, 1, apply_map(a, -1, p, q), q).distance(&p));
            for b in MapTag::ALL {
                let ab = apply_map(a, 1, apply_map(b, 1, p, q), q);
                let ba = apply_map(b, 1, apply_map(a, 1, p, q), q);
                comm = comm.max(ab.distance(&ba));
            }
        }
    }
    let mut flagged = 0;
    let bases = 100;
    for _ in 0..bases {
        let base = Point3::new(rng.gen_range(0.0..1.0), rng.gen_range(0.0..1.0), rng.gen_range(1.001..4.0));
        if boundedness_probe(base, rng.gen_range(0.2..0.9), 20).verdict == Boundedness::Unbounded {
            flagged += 1;
        }
    }
    Outcome {
        pass: comm < 1e-12 && inv < 1e-12 && flagged == bases,
        detail: format!("commutator {comm:.2e}, inverse {inv:.2e}, unbounded flagged {flagged}/{bases}"),
    }
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 7] = [
        ("relation suite", relation_suite),
        ("symbolic consistency", symbolic_consistency),
        ("spectrum-orbit agreement", spectrum_orbit),
        ("decomposition suite", decomposition_suite),
        ("simple spectrum", simple_spectrum),
        ("symbolic-numeric bridge", bridge),
        ("dynamical system", dynamical_system),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let verdict = if outcome.pass { "PASS" } else { "FAIL" };
        println!("criterion {} {verdict} {name} [{:.1}s]: {}", i + 1, start.elapsed().as_secs_f64(), outcome.detail);
        failed += usize::from(!outcome.pass);
    }
    println!("acceptance: {}/{} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
