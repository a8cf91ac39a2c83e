//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

mod common;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use ldp_core::enumeration::{classify_catalog, enumerate_ldp, verify_catalog, BoxSpec, CatalogEntry};
use ldp_core::equivalence::{canonical_form, transform};
use ldp_core::families::{check_params, generate, FamilyParams, FamilyTag};
use ldp_core::lattice::angle_cmp;
use ldp_core::{analyze, blow_down, blow_up, is_primitive, nonsingular_arc_contiguous, Fan, Polygon, Ray};
use num_rational::Ratio;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SMOOTH_CLASSES: usize = 5;
const ONE_BOX_LIMIT: Duration = Duration::from_secs(10);
const ORACLE_LIMIT: Duration = Duration::from_secs(60);
const PIPELINE_LIMIT: Duration = Duration::from_secs(120);
const RANDOM_FANS: usize = 10_000;
const RANDOM_FAN_MAX_RAYS: usize = 8;
const RANDOM_FAN_MAX_COORD: i64 = 20;
const PARAM_BOUND: i64 = 8;
const MAPS_PER_ENTRY: usize = 100;
const BLOWUP_TRIALS: usize = 1_000;

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: String) -> Outcome {
    if ok { Ok(msg) } else { Err(msg) }
}

fn classes(entries: &[CatalogEntry]) -> BTreeSet<Vec<Ray>> {
    entries.iter().map(|e| e.vertices.clone()).collect()
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let cat = enumerate_ldp(BoxSpec::new(1).unwrap(), None).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    let smooth = cat.iter().filter(|e| e.singular == 0).count();
    ensure(
        smooth == SMOOTH_CLASSES && elapsed < ONE_BOX_LIMIT,
        format!("box 1: {smooth} smooth classes (want {SMOOTH_CLASSES}) in {elapsed:?} (limit {ONE_BOX_LIMIT:?})"),
    )
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let mut sizes = Vec::new();
    for n in [1, 2] {
        let dfs = classes(&enumerate_ldp(BoxSpec::new(n).unwrap(), None).map_err(|e| e.to_string())?);
        let oracle: BTreeSet<Vec<Ray>> =
            common::brute_force_classes(n).into_iter().map(|c| c.vertices).collect();
        if dfs != oracle {
            let missing = oracle.difference(&dfs).count();
            let extra = dfs.difference(&oracle).count();
            return Err(format!("box {n}: {missing} classes missing, {extra} extra"));
        }
        sizes.push(dfs.len());
    }
    let elapsed = start.elapsed();
    ensure(
        elapsed < ORACLE_LIMIT,
        format!("DFS = subset oracle for boxes 1,2 ({:?} classes) in {elapsed:?} (limit {ORACLE_LIMIT:?})", sizes),
    )
}

struct Pipeline {
    report: ldp_core::enumeration::VerificationReport,
    catalog: Vec<CatalogEntry>,
    elapsed: Duration,
}

fn pipeline(n: i64) -> Result<Pipeline, String> {
    let start = Instant::now();
    let mut catalog = enumerate_ldp(BoxSpec::new(n).unwrap(), None).map_err(|e| e.to_string())?;
    classify_catalog(&mut catalog).map_err(|e| e.to_string())?;
    let report = verify_catalog(&catalog).map_err(|e| e.to_string())?;
    Ok(Pipeline { report, catalog, elapsed: start.elapsed() })
}

fn criterion_3(p: &Pipeline) -> Outcome {
    let count = p.report.by_singular_count.get(&1).copied().unwrap_or(0);
    let unmatched = &p.report.one_singular_unmatched;
    ensure(
        count > 0 && unmatched.is_empty() && p.elapsed < PIPELINE_LIMIT && p.report.inconsistent.is_empty(),
        format!(
            "box 3: {count} one-point classes, {} unmatched; pipeline {:?} (limit {PIPELINE_LIMIT:?})",
            unmatched.len(),
            p.elapsed
        ),
    )
}

fn criterion_4(p: &Pipeline) -> Outcome {
    let count = p.report.by_singular_count.get(&2).copied().unwrap_or(0);
    let max_d = p.catalog.iter().filter(|e| e.singular == 2).map(|e| e.d).max().unwrap_or(0);
    let bad = &p.report.two_singular_counterexamples;
    ensure(
        count > 0 && bad.is_empty() && max_d <= 5,
        format!("box 3: {count} two-point classes, {} counterexamples, max d = {max_d}", bad.len()),
    )
}

fn criterion_5(p: &Pipeline) -> Outcome {
    let three: Vec<&CatalogEntry> = p.catalog.iter().filter(|e| e.singular == 3).collect();
    let max_d = three.iter().map(|e| e.d).max().unwrap_or(0);
    let bad = &p.report.three_singular_counterexamples;
    let cases: BTreeSet<String> =
        three.iter().filter_map(|e| e.three_case.map(|c| c.to_string())).collect();
    ensure(
        !three.is_empty() && bad.is_empty() && max_d <= 6,
        format!("box 3: {} three-point classes, cases {cases:?}, {} counterexamples, max d = {max_d}", three.len(), bad.len()),
    )
}

fn criterion_6(catalogs: &[&Pipeline]) -> Outcome {
    let total: usize = catalogs.iter().map(|p| p.report.alternating_d5.len()).sum();
    let d5: usize = catalogs
        .iter()
        .map(|p| p.catalog.iter().filter(|e| e.d == 5 && e.singular == 3).count())
        .sum();
    ensure(total == 0, format!("{total} alternating d=5 classes among {d5} with three singular points (boxes 1-3)"))
}

fn criterion_7(catalogs: &[&Pipeline]) -> Outcome {
    let mut checked = 0;
    for p in catalogs {
        for e in &p.catalog {
            let report = analyze(e.polygon().map_err(|e| e.to_string())?.fan()).unwrap();
            if !nonsingular_arc_contiguous(&report) {
                return Err(format!("{} is not contiguous", e.vertex_text()));
            }
            checked += 1;
        }
        if !p.report.non_contiguous.is_empty() {
            return Err("verification report lists non-contiguous entries".into());
        }
    }
    let alt = Fan::new(vec![Ray::new(1, 0), Ray::new(0, 1), Ray::new(-2, -1), Ray::new(-3, -2)])
        .map_err(|e| e.to_string())?;
    let r = analyze(&alt).unwrap();
    ensure(
        r.f_values[2] == 0 && !r.is_log_del_pezzo && !nonsingular_arc_contiguous(&r),
        format!("{checked} entries contiguous; alternating fan has f(3) = {} and is not LDP", r.f_values[2]),
    )
}

fn random_fan(rng: &mut ChaCha8Rng) -> Option<Fan> {
    let d = rng.gen_range(3..=RANDOM_FAN_MAX_RAYS);
    let mut rays: Vec<Ray> = Vec::new();
    while rays.len() < d {
        let v = Ray::new(
            rng.gen_range(-RANDOM_FAN_MAX_COORD..=RANDOM_FAN_MAX_COORD),
            rng.gen_range(-RANDOM_FAN_MAX_COORD..=RANDOM_FAN_MAX_COORD),
        );
        if is_primitive(v) && !rays.contains(&v) {
            rays.push(v);
        }
    }
    rays.sort_by(|&a, &b| angle_cmp(a, b).unwrap());
    let shift = rng.gen_range(0..d);
    rays.rotate_left(shift);
    Fan::new(rays).ok()
}

fn criterion_8() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let (mut fans, mut ldp, mut mismatches) = (0, 0, 0);
    while fans < RANDOM_FANS {
        let Some(fan) = random_fan(&mut rng) else { continue };
        fans += 1;
        let r = analyze(&fan).map_err(|e| e.to_string())?;
        let by_f = r.f_values.iter().min().copied().unwrap() >= 1;
        let by_degree = r.anticanonical_degrees.iter().all(|q| *q > Ratio::from_integer(0));
        if by_f != by_degree {
            mismatches += 1;
        }
        ldp += by_f as usize;
    }
    ensure(
        mismatches == 0 && ldp > 0 && ldp < fans,
        format!("{fans} random fans ({ldp} log del Pezzo): {mismatches} criterion mismatches"),
    )
}

fn criterion_9() -> Outcome {
    let range = -PARAM_BOUND..=PARAM_BOUND;
    let (mut admissible, mut exceptions) = (0usize, Vec::new());
    let mut try_one = |tag: FamilyTag, v: &[i64]| {
        let params = FamilyParams::new(tag, v).unwrap();
        if !check_params(&params) {
            return;
        }
        admissible += 1;
        match generate(&params) {
            Ok(inst) => {
                let r = analyze(inst.polygon.fan()).unwrap();
                if !r.is_log_del_pezzo || r.singular_count != tag.singular_count() {
                    exceptions.push(params.to_string());
                }
            }
            Err(e) => exceptions.push(format!("{params}: {e}")),
        }
    };
    for p in range.clone() {
        for tag in [FamilyTag::Dais1, FamilyTag::Dais2, FamilyTag::Dais3] {
            try_one(tag, &[p]);
        }
        for q in range.clone() {
            try_one(FamilyTag::Two1, &[p, q]);
            for r in range.clone() {
                try_one(FamilyTag::Two2, &[p, q, r]);
                try_one(FamilyTag::Two3, &[p, q, r]);
                for s in range.clone() {
                    for t in range.clone() {
                        try_one(FamilyTag::Three5, &[p, q, r, s, t]);
                    }
                }
            }
        }
    }
    ensure(
        exceptions.is_empty(),
        format!("{admissible} admissible tuples with |params| <= {PARAM_BOUND}: {} exceptions {:?}", exceptions.len(), exceptions.iter().take(3).collect::<Vec<_>>()),
    )
}

fn criterion_10(box2: &Pipeline) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let mut mismatches = 0;
    for e in &box2.catalog {
        let q: Polygon = e.polygon().map_err(|e| e.to_string())?;
        let base = canonical_form(&q).unwrap();
        for _ in 0..MAPS_PER_ENTRY {
            let m = common::random_unimodular(&mut rng, 12);
            let image = transform(&m, &q).map_err(|e| e.to_string())?;
            if canonical_form(&image).unwrap() != base {
                mismatches += 1;
            }
        }
    }
    ensure(
        mismatches == 0,
        format!("{} box-2 classes x {MAPS_PER_ENTRY} maps: {mismatches} mismatches", box2.catalog.len()),
    )
}

fn criterion_11(box3: &Pipeline) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let pool: Vec<&CatalogEntry> = box3.catalog.iter().filter(|e| e.dets.contains(&1)).collect();
    let mut failures = Vec::new();
    for _ in 0..BLOWUP_TRIALS {
        let e = pool[rng.gen_range(0..pool.len())];
        let m = common::random_unimodular(&mut rng, 12);
        let q = transform(&m, &e.polygon().unwrap()).unwrap();
        let mut rays = q.vertices().to_vec();
        let shift = rng.gen_range(0..rays.len());
        rays.rotate_left(shift);
        let fan = Fan::new(rays).unwrap();
        let smooth: Vec<usize> = (1..=fan.len()).filter(|&i| fan.cone_dets()[i - 1] == 1).collect();
        let i = smooth[rng.gen_range(0..smooth.len())];
        let up = blow_up(&fan, i).unwrap();
        let same_count = analyze(&up).unwrap().singular_count == analyze(&fan).unwrap().singular_count;
        let back = blow_down(&up, i + 1).unwrap();
        if !same_count || back.rays() != fan.rays() {
            failures.push(format!("{fan} at {i}"));
        }
    }
    ensure(
        failures.is_empty(),
        format!("{BLOWUP_TRIALS} blow-ups of random LDP fans: {} failures {:?}", failures.len(), failures.iter().take(3).collect::<Vec<_>>()),
    )
}

fn main() -> ExitCode {
    let box1 = pipeline(1);
    let box2 = pipeline(2);
    let box3 = pipeline(3);
    let (box1, box2, box3) = match (box1, box2, box3) {
        (Ok(a), Ok(b), Ok(c)) => (a, b, c),
        _ => {
            println!("FAIL  catalog pipeline could not run");
            return ExitCode::FAILURE;
        }
    };
    let results: Vec<(&str, Outcome)> = vec![
        ("1 five smooth classes", criterion_1()),
        ("2 oracle equivalence", criterion_2()),
        ("3 one singular point", criterion_3(&box3)),
        ("4 two singular points", criterion_4(&box3)),
        ("5 three singular points", criterion_5(&box3)),
        ("6 no alternating d=5", criterion_6(&[&box1, &box2, &box3])),
        ("7 contiguity", criterion_7(&[&box1, &box2, &box3])),
        ("8 criterion consistency", criterion_8()),
        ("9 family soundness", criterion_9()),
        ("10 canonical invariance", criterion_10(&box2)),
        ("11 blow-up laws", criterion_11(&box3)),
    ];
    let mut failed = 0;
    for (name, outcome) in &results {
        match outcome {
            Ok(msg) => println!("PASS  {name}: {msg}"),
            Err(msg) => {
                failed += 1;
                println!("FAIL  {name}: {msg}");
            }
        }
    }
    println!("{} of {} acceptance criteria passed", results.len() - failed, results.len());
    if failed == 0 { ExitCode::SUCCESS } else { ExitCode::FAILURE }
}
